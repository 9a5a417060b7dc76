#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace caylab {

std::string sha256_hex(std::string_view bytes);

std::vector<std::string> split(const std::string& s, char sep);

// Exact rational in lowest terms, denominator > 0.  Used for the density
// threshold in delta_beta so that |H| >= beta*n is decided in integers.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    // accepts "2/3", "0.6", "1", "0.75"
    static Rational parse(const std::string& s);

    double to_double() const { return double(num) / double(den); }
    // smallest integer t with t >= num/den * n
    long long ceil_times(long long n) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace caylab

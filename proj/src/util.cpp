#include "caylab/util.hpp"

#include <numeric>
#include <openssl/evp.h>

namespace caylab {

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("EVP_Digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw parse_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) throw parse_error("bad decimal: " + s);
        long long scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
        return Rational(whole * scale + std::stoll(frac), scale);
    }
    return Rational(std::stoll(s), 1);
}

long long Rational::ceil_times(long long n) const {
    long long p = num * n; // inputs are small; no overflow in practice
    return p / den + (p % den != 0 ? 1 : 0);
}

} // namespace caylab

// caylab: build the graph families, run the subset solvers, verify
// certificates, and reproduce the summary tables.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "caylab/certificate.hpp"
#include "caylab/constructions.hpp"
#include "caylab/coxeter.hpp"
#include "caylab/graph.hpp"
#include "caylab/group.hpp"
#include "caylab/incidence.hpp"
#include "caylab/named_graphs.hpp"
#include "caylab/solver.hpp"
#include "caylab/spectral.hpp"
#include "caylab/util.hpp"

namespace fs = std::filesystem;
using namespace caylab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path.string());
    out << text;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '-';
    return out;
}

std::string value_string(const SolveResult& r) {
    if (!r.feasible) return "infeasible";
    switch (r.status) {
        case SolveStatus::Exact: return std::to_string(r.value);
        case SolveStatus::Lower: return ">= " + std::to_string(r.value);
        case SolveStatus::Upper: return "<= " + std::to_string(r.value);
        case SolveStatus::Interval:
            return std::to_string(r.value) + ".." + std::to_string(r.value_hi);
    }
    return "?";
}

std::string solve_line(const SolveResult& r) {
    std::ostringstream os;
    os << value_string(r) << " " << to_string(r.status) << " " << r.nodes << " "
       << std::fixed << std::setprecision(3) << r.seconds;
    return os.str();
}

struct BuildOutput {
    Graph graph;
    std::vector<std::pair<std::string, Certificate>> certs; // file stem -> cert
    std::string params;
};

int run_build(const std::string& family, int d, int n, int m, int q, int p,
              const std::string& type, int k, uint64_t seed, bool have_seed,
              const std::string& out_root, bool dot) {
    BuildOutput b;
    if (family == "dihedrant") {
        SubsetWitness w = dihedrant_matching(d);
        b = {std::move(w.graph), {{"construction", std::move(w.cert)}}, "d" + std::to_string(d)};
    } else if (family == "star") {
        SubsetWitness w = star_graph_subset(n);
        b = {std::move(w.graph), {{"construction", std::move(w.cert)}}, "n" + std::to_string(n)};
    } else if (family == "tight") {
        SubsetWitness w = tight_matching(m);
        b = {std::move(w.graph), {{"construction", std::move(w.cert)}}, "m" + std::to_string(m)};
    } else if (family == "torus") {
        SubsetWitness w = torus_subset(n, m);
        b = {std::move(w.graph),
             {{"construction", std::move(w.cert)}},
             "n" + std::to_string(n) + "_m" + std::to_string(m)};
    } else if (family == "z3r") {
        Z3rWitness w = z3r_subset(n);
        b = {std::move(w.graph),
             {{"construction", std::move(w.cert)}, {"independent", std::move(w.independent)}},
             "n" + std::to_string(n)};
    } else if (family == "hypercube") {
        SubsetWitness w = cfgs_subset(d);
        b = {std::move(w.graph), {{"construction", std::move(w.cert)}}, "d" + std::to_string(d)};
    } else if (family == "coxeter") {
        CoxeterSystem sys = coxeter_system(type);
        Graph g = coxeter_cayley(sys);
        std::vector<std::pair<std::string, Certificate>> certs;
        CubeLikeResult cl = is_cube_like(sys);
        if (cl.cube_like) {
            certs.push_back({"construction", cube_like_subset(sys, cl.witness)});
        } else if ((type[0] == 'B' || type[0] == 'D') && type.find('x') == std::string::npos) {
            certs.push_back({"construction", bn_dn_subset(type[0], std::stoi(type.substr(1)))});
        }
        b = {std::move(g), std::move(certs), sanitize(type)};
    } else if (family == "levi") {
        b = {levi_graph(q), {}, "q" + std::to_string(q)};
    } else if (family == "polarity") {
        b = {polarity_graph(q), {}, "q" + std::to_string(q)};
    } else if (family == "lps") {
        LpsGraph x = lps_graph(p, q);
        b = {std::move(x.graph), {}, "p" + std::to_string(p) + "_q" + std::to_string(q)};
    } else if (family == "group-cayley") {
        if (!have_seed) throw parse_error("group-cayley needs an explicit --seed");
        FiniteGroup grp = group_make(type);
        ConnectionSet c = random_connection_set(grp, k, seed);
        Graph g = cayley_graph(grp, c, sanitize(type) + "_k" + std::to_string(k));
        b = {std::move(g), {}, sanitize(type) + "_k" + std::to_string(k) + "_s" + std::to_string(seed)};
    } else {
        throw parse_error("unknown family " + family);
    }

    fs::path dir = fs::path(out_root) / family / b.params;
    fs::create_directories(dir);
    spit(dir / "graph.graph", b.graph.canonical_serialize());
    if (dot) spit(dir / "graph.dot", b.graph.to_dot());

    std::ostringstream summary;
    summary << family << " " << b.params << ": n=" << b.graph.n << " m=" << b.graph.m;
    bool all_valid = true;
    for (auto& [stem, cert] : b.certs) {
        spit(dir / (stem + ".cert"), cert.serialize());
        VerifyReport rep = verify_certificate(b.graph, cert);
        all_valid = all_valid && rep.valid;
        summary << " " << stem << "[" << to_string(cert.kind) << " size=" << cert.size
                << " k=" << cert.k << " " << (rep.valid ? "VALID" : "INVALID: " + rep.reason)
                << "]";
    }
    summary << " fingerprint=" << b.graph.fingerprint().substr(0, 16) << " -> " << dir.string();
    spit(dir / "summary.txt", summary.str() + "\n");
    std::cout << summary.str() << "\n";
    return all_valid ? 0 : 1;
}

int run_solve(const std::string& param, const std::string& graph_file, int k,
              const std::string& beta, int dmax, const std::string& budget_str,
              std::string cert_file) {
    Graph g = Graph::parse(slurp(graph_file));
    Budget budget = Budget::parse(budget_str);
    SolveResult r;
    if (param == "sigma") {
        std::optional<long long> hint;
        if (g.connected() && g.is_regular() && g.loop_count() == 0 &&
            g.bipartition().has_value())
            hint = g.n / 2; // structural independence number
        r = sensitivity(g, hint, budget);
    } else if (param == "alpha") {
        r = independence_number(g, budget);
    } else if (param == "iota") {
        r = iota(g, k, budget);
    } else if (param == "kappa") {
        r = kappa_search(g, dmax, budget);
    } else if (param == "delta-beta") {
        r = delta_beta(g, Rational::parse(beta), budget);
    } else {
        throw parse_error("unknown parameter " + param);
    }

    std::cout << solve_line(r) << "\n";
    if (r.witness) {
        if (cert_file.empty()) cert_file = graph_file + "." + param + ".cert";
        spit(cert_file, r.witness->serialize());
        VerifyReport rep = verify_certificate(g, *r.witness);
        if (!rep.valid) {
            std::cerr << "witness failed verification: " << rep.reason << "\n";
            return 1;
        }
    }
    return 0;
}

int run_verify(const std::string& graph_file, const std::string& cert_file) {
    Graph g = Graph::parse(slurp(graph_file));
    Certificate c = Certificate::parse(slurp(cert_file));
    VerifyReport rep = verify_certificate(g, c);
    if (rep.valid) {
        std::cout << "VALID " << to_string(c.kind) << " size=" << c.size << " k=" << c.k
                  << "\n";
        return 0;
    }
    std::cout << "INVALID: " << rep.reason << "\n";
    return 1;
}

int run_spectral(const std::string& graph_file) {
    Graph g = Graph::parse(slurp(graph_file));
    NdlSummary s = ndl_summary(g);
    if (!s.regular) {
        std::cout << "n=" << s.n << " irregular\n";
        return 0;
    }
    std::cout << "n=" << s.n << " d=" << s.d << " lambda=" << std::fixed
              << std::setprecision(6) << s.lambda << " bound=" << mixing_sensitivity_bound(s)
              << " bipartite=" << (s.bipartite ? 1 : 0) << "\n";
    return 0;
}

struct TableClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double total;
    explicit TableClock(double t) : total(t) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    double remaining() const {
        return total > 0 ? total - elapsed() : std::numeric_limits<double>::infinity();
    }
    bool expired() const { return total > 0 && remaining() <= 0; }
};

int run_table(const std::string& name, const std::string& budget_str) {
    Budget budget = Budget::parse(budget_str);
    TableClock clock(budget.max_seconds);

    auto row_budget = [&]() {
        Budget b = budget;
        if (b.max_seconds > 0) b.max_seconds = std::max(clock.remaining(), 1e-9);
        return b;
    };

    if (name == "kappa") {
        struct Row {
            const char* type;
            int paper;
            long long order;
        };
        const Row rows[] = {{"A1", 1, 2},     {"A2", 1, 6},     {"A3", 2, 24},
                            {"A4", 2, 120},   {"A5", 3, 720},   {"B2", 1, 8},
                            {"B3", 2, 48},    {"B4", 2, 384},   {"B5", 3, 3840},
                            {"D4", 3, 192},   {"D5", 3, 1920},  {"I3", 1, 6},
                            {"I4", 1, 8},     {"I5", 1, 10},    {"I6", 1, 12},
                            {"I7", 1, 14},    {"I8", 1, 16},    {"H3", 2, 120},
                            {"F4", 2, 1152},  {"E6", 3, 51840}};
        for (const Row& row : rows) {
            std::cout << row.type << " paper " << row.paper;
            if (clock.expired() || row.order > 2500) {
                std::cout << " skipped (budget)\n";
                continue;
            }
            CoxeterSystem sys = coxeter_system(row.type);
            int formula = kappa_formula(sys);
            std::cout << " formula " << formula;
            SolveResult r = kappa_search(coxeter_cayley(sys), formula + 1, row_budget());
            std::cout << " search " << value_string(r) << " " << to_string(r.status) << "\n";
        }
        return 0;
    }

    if (name == "coxeter-small") {
        struct Row {
            const char* type;
            const char* paper; // value or interval for the degree <= ceil(sqrt(kappa)) set
            long long order;
        };
        // ordered by group size so small rows finish before the budget runs out
        const Row rows[] = {{"B3", "34", 48},           {"I1xI2xI4", "33", 64},
                            {"I1xI3xI4", "52", 96},     {"H3", "85", 120},
                            {"I2xI3xI3", "73..79", 144}, {"B3xI2", "98..115", 192},
                            {"D4", "120..122", 192},     {"B3xI3", "150..175", 288},
                            {"B3xI4", "200..235", 384},  {"B4", "235..252", 384},
                            {"F4", "768", 1152},         {"D5", "1004..1199", 1920},
                            {"B5", "1976..2398", 3840},  {"H4", "8624..9599", 14400},
                            {"E6", "25926..", 51840}};
        for (const Row& row : rows) {
            std::cout << row.type << " paper " << row.paper << " ";
            // very large rows only make sense with a lot of budget left
            if (clock.expired() || (row.order > 2000 && clock.remaining() < 60) ||
                row.order > 20000) {
                std::cout << "skipped (budget)\n";
                continue;
            }
            CoxeterSystem sys = coxeter_system(row.type);
            int kd = int(std::ceil(std::sqrt(double(kappa_formula(sys)))));
            SolveResult r = max_low_degree_set(coxeter_cayley(sys), kd, row_budget());
            std::cout << "computed " << value_string(r) << " " << to_string(r.status)
                      << " (n=" << sys.order() << " deg<=" << kd << ")\n";
        }
        return 0;
    }

    if (name == "spectral-levi") {
        struct Row {
            int q;
            int known_sigma;
        };
        const Row rows[] = {{2, 2}, {3, 2}, {4, 2}, {5, 3}, {7, 3}, {8, 4}};
        for (const Row& row : rows) {
            NdlSummary s = ndl_summary(polarity_graph(row.q));
            double bound = (row.q + 1 - std::sqrt(double(row.q))) / 2;
            std::cout << "q=" << row.q << " lambda " << std::fixed << std::setprecision(6)
                      << s.lambda << " (paper " << std::sqrt(double(row.q)) << ") bound "
                      << bound << " sigma paper " << row.known_sigma << " computed ";
            Graph levi = levi_graph(row.q);
            if (clock.expired() || levi.n > 70) {
                std::cout << "skipped (budget)\n";
                continue;
            }
            SolveResult r = sensitivity(levi, levi.n / 2, row_budget());
            std::cout << value_string(r) << " " << to_string(r.status) << "\n";
        }
        return 0;
    }

    throw parse_error("unknown table " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graph sensitivity workbench"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a graph family member");
    std::string family, type, out_root = "out";
    int d = 0, n = 0, m = 0, q = 0, p = 0, k = 0;
    uint64_t seed = 0;
    bool dot = false;
    build->add_option("family", family,
                      "dihedrant|star|tight|coxeter|torus|z3r|hypercube|levi|polarity|lps|"
                      "group-cayley")
        ->required();
    build->add_option("--d", d, "dimension / depth");
    build->add_option("--n", n, "primary size parameter");
    build->add_option("--m", m, "secondary size parameter");
    build->add_option("--q", q, "field order");
    build->add_option("--p", p, "generator prime");
    build->add_option("--type", type, "Coxeter descriptor or group spec");
    build->add_option("--k", k, "connection-set size (group-cayley)");
    auto* seed_opt = build->add_option("--seed", seed, "RNG seed (group-cayley)");
    build->add_option("--out", out_root, "output root directory");
    build->add_flag("--dot", dot, "also write a DOT rendering");

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver on a graph file");
    std::string param, graph_file, cert_file, beta = "1/2", budget = "none";
    int dmax = 6, sk = 0;
    solve->add_option("parameter", param, "sigma|alpha|iota|kappa|delta-beta")->required();
    solve->add_option("--graph", graph_file, "input .graph file")->required();
    solve->add_option("--k", sk, "degree bound (iota)");
    solve->add_option("--beta", beta, "density, e.g. 3/5 (delta-beta)");
    solve->add_option("--dmax", dmax, "largest cube dimension tried (kappa)");
    solve->add_option("--budget", budget, "e.g. 600s, 1e7nodes, none");
    solve->add_option("--cert", cert_file, "where to write the witness certificate");

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    std::string vgraph, vcert;
    verify->add_option("--graph", vgraph, "input .graph file")->required();
    verify->add_option("--cert", vcert, "input .cert file")->required();

    // table
    auto* table = app.add_subcommand("table", "reproduce a summary table");
    std::string table_name, table_budget = "60s";
    table->add_option("name", table_name, "coxeter-small|kappa|spectral-levi")->required();
    table->add_option("--budget", table_budget, "total time budget");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "eigenvalue summary of a graph file");
    std::string sgraph;
    spectral->add_option("--graph", sgraph, "input .graph file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return run_build(family, d, n, m, q, p, type, k, seed, seed_opt->count() > 0,
                             out_root, dot);
        if (solve->parsed())
            return run_solve(param, graph_file, sk, beta, dmax, budget, cert_file);
        if (verify->parsed()) return run_verify(vgraph, vcert);
        if (table->parsed()) return run_table(table_name, table_budget);
        if (spectral->parsed()) return run_spectral(sgraph);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

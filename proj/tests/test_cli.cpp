#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "caylab/certificate.hpp"
#include "caylab/graph.hpp"
#include "caylab/named_graphs.hpp"

namespace fs = std::filesystem;
using namespace caylab;

namespace {

const char* bin() {
    const char* b = std::getenv("CAYLAB_BIN");
    REQUIRE_MESSAGE(b != nullptr, "CAYLAB_BIN must point at the CLI binary");
    return b;
}

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "caylab_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), ("missing file " + p.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    static int counter = 0;
    fs::path capture = work_dir() / ("cmd" + std::to_string(counter++) + ".log");
    std::string cmd =
        std::string(bin()) + " " + args + " > " + capture.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(capture);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string out_root() { return (work_dir() / "out").string(); }

} // namespace

TEST_CASE("build dihedrant writes graph, certificate, and summary") {
    CmdResult r = run("build dihedrant --d 2 --out " + out_root());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=18"));
    CHECK(contains(r.out, "VALID"));

    fs::path dir = fs::path(out_root()) / "dihedrant" / "d2";
    Graph g = Graph::parse(slurp(dir / "graph.graph"));
    CHECK(g.n == 18);
    CHECK(g.m == 27);
    Certificate c = Certificate::parse(slurp(dir / "construction.cert"));
    CHECK(c.size == 10);
    CHECK(c.kind == CertKind::MatchingSet);
    CHECK(verify_certificate(g, c).valid);
    CHECK(fs::exists(dir / "summary.txt"));
}

TEST_CASE("build star yields the thirteen-vertex witness") {
    CmdResult r = run("build star --n 4 --out " + out_root());
    CHECK(r.code == 0);
    fs::path dir = fs::path(out_root()) / "star" / "n4";
    Graph g = Graph::parse(slurp(dir / "graph.graph"));
    CHECK(g.n == 24);
    Certificate c = Certificate::parse(slurp(dir / "construction.cert"));
    CHECK(c.size == 13);
    CHECK(verify_certificate(g, c).valid);
}

TEST_CASE("build coxeter attaches the signed-permutation certificate") {
    CmdResult r = run("build coxeter --type B3 --out " + out_root());
    CHECK(r.code == 0);
    fs::path dir = fs::path(out_root()) / "coxeter" / "B3";
    Graph g = Graph::parse(slurp(dir / "graph.graph"));
    CHECK(g.n == 48);
    Certificate c = Certificate::parse(slurp(dir / "construction.cert"));
    CHECK(c.size == 25);
    CHECK(c.k == 2);
    CHECK(verify_certificate(g, c).valid);
}

TEST_CASE("build z3r writes both certificates") {
    CmdResult r = run("build z3r --n 2 --out " + out_root());
    CHECK(r.code == 0);
    fs::path dir = fs::path(out_root()) / "z3r" / "n2";
    Graph g = Graph::parse(slurp(dir / "graph.graph"));
    CHECK(g.n == 9);
    Certificate match = Certificate::parse(slurp(dir / "construction.cert"));
    Certificate ind = Certificate::parse(slurp(dir / "independent.cert"));
    CHECK(match.size == 4);
    CHECK(ind.size == 3);
    CHECK(verify_certificate(g, match).valid);
    CHECK(verify_certificate(g, ind).valid);
}

TEST_CASE("build rejects unknown families and bad parameters") {
    CHECK(run("build nosuch --out " + out_root()).code == 2);
    CHECK(run("build torus --n 3 --m 4 --out " + out_root()).code == 2);
    CHECK(run("build group-cayley --type cyclic:6 --k 2 --out " + out_root()).code == 2);
}

TEST_CASE("group-cayley builds are seed-deterministic") {
    std::string args = "build group-cayley --type dihedral:9 --k 4 --seed 7 --out ";
    CmdResult a = run(args + (work_dir() / "outA").string());
    CmdResult b = run(args + (work_dir() / "outB").string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    fs::path rel = fs::path("group-cayley") / "dihedral-9_k4_s7" / "graph.graph";
    CHECK(slurp(work_dir() / "outA" / rel) == slurp(work_dir() / "outB" / rel));
}

TEST_CASE("solve sigma on the girth-six incidence graph") {
    CmdResult built = run("build levi --q 2 --out " + out_root());
    REQUIRE(built.code == 0);
    fs::path graph = fs::path(out_root()) / "levi" / "q2" / "graph.graph";
    fs::path cert = work_dir() / "heawood_sigma.cert";
    CmdResult r =
        run("solve sigma --graph " + graph.string() + " --cert " + cert.string());
    CHECK(r.code == 0);
    CHECK(r.out.rfind("2 exact", 0) == 0);

    Graph g = Graph::parse(slurp(graph));
    Certificate c = Certificate::parse(slurp(cert));
    CHECK(verify_certificate(g, c).valid);
    CHECK(c.size == 8); // one more vertex than the independence number
}

TEST_CASE("solve kappa and delta-beta") {
    fs::path q3 = work_dir() / "q3.graph";
    spit(q3, hypercube(3).canonical_serialize());
    CmdResult r = run("solve kappa --graph " + q3.string() + " --dmax 4");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("3 exact", 0) == 0);

    fs::path c6 = work_dir() / "c6.graph";
    spit(c6, cycle_graph(6).canonical_serialize());
    CmdResult db = run("solve delta-beta --beta 2/3 --graph " + c6.string());
    CHECK(db.code == 0);
    CHECK(db.out.rfind("1 exact", 0) == 0);

    CmdResult io = run("solve iota --k 1 --graph " + c6.string());
    CHECK(io.code == 0);
    CHECK(io.out.rfind("2 exact", 0) == 0);
}

TEST_CASE("verify accepts the valid pair and rejects tampering") {
    fs::path dir = fs::path(out_root()) / "dihedrant" / "d2";
    run("build dihedrant --d 2 --out " + out_root());
    fs::path graph = dir / "graph.graph";
    fs::path cert = dir / "construction.cert";

    CmdResult ok = run("verify --graph " + graph.string() + " --cert " + cert.string());
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "VALID"));

    // duplicate one certificate vertex: parses fine, fails verification
    Certificate c = Certificate::parse(slurp(cert));
    c.verts[0] = c.verts[1];
    fs::path bad = work_dir() / "tampered.cert";
    spit(bad, c.serialize());
    CmdResult tampered =
        run("verify --graph " + graph.string() + " --cert " + bad.string());
    CHECK(tampered.code == 1);
    CHECK(contains(tampered.out, "INVALID"));

    // same certificate against a different graph: fingerprint mismatch
    fs::path other = work_dir() / "other.graph";
    spit(other, hypercube(4).canonical_serialize());
    CmdResult wrong =
        run("verify --graph " + other.string() + " --cert " + cert.string());
    CHECK(wrong.code == 1);
    CHECK(contains(wrong.out, "INVALID"));

    // malformed input is an error, not a verification failure
    fs::path garbage = work_dir() / "garbage.graph";
    spit(garbage, "not a graph\n");
    CmdResult mal = run("verify --graph " + garbage.string() + " --cert " + cert.string());
    CHECK(mal.code == 2);
}

TEST_CASE("round trip: built files reparse to the same fingerprint") {
    run("build hypercube --d 3 --out " + out_root());
    fs::path graph = fs::path(out_root()) / "hypercube" / "d3" / "graph.graph";
    Graph g = Graph::parse(slurp(graph));
    CHECK(g.fingerprint() == hypercube(3).fingerprint());
    // the shipped certificate lives on the same graph
    Certificate c =
        Certificate::parse(slurp(fs::path(out_root()) / "hypercube" / "d3" / "construction.cert"));
    CHECK(verify_certificate(g, c).valid);
}

TEST_CASE("dot export") {
    CmdResult r = run("build levi --q 2 --dot --out " + out_root());
    CHECK(r.code == 0);
    std::string dot = slurp(fs::path(out_root()) / "levi" / "q2" / "graph.dot");
    CHECK(contains(dot, "graph"));
    CHECK(contains(dot, "--"));
}

TEST_CASE("kappa table prints paper and computed values") {
    CmdResult r = run("table kappa --budget 20s");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "A3 paper 2 formula 2"));
    CHECK(contains(r.out, "D4 paper 3 formula 3"));
    CHECK(contains(r.out, "E6 paper 3 skipped (budget)"));
}

TEST_CASE("coxeter-small table leads with the rank-three row") {
    CmdResult r = run("table coxeter-small --budget 10s");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "B3 paper 34 computed"));
    CHECK(contains(r.out, "H4 paper 8624..9599"));
    CHECK(contains(r.out, "skipped (budget)"));
}

TEST_CASE("spectral-levi table reports eigenvalues and bounds") {
    CmdResult r = run("table spectral-levi --budget 15s");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "q=2 lambda 1.414214 (paper 1.414214) bound 0.792893"));
    CHECK(contains(r.out, "sigma paper 4 computed skipped (budget)"));
}

TEST_CASE("spectral summary line") {
    fs::path pol = work_dir() / "polarity4.graph";
    run("build polarity --q 4 --out " + out_root());
    CmdResult r = run("spectral --graph " +
                      (fs::path(out_root()) / "polarity" / "q4" / "graph.graph").string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=21 d=5 lambda=2.000000 bound=1.500000 bipartite=0"));

    fs::path p4 = work_dir() / "p4.graph";
    spit(p4, path_graph(4).canonical_serialize());
    CmdResult ir = run("spectral --graph " + p4.string());
    CHECK(ir.code == 0);
    CHECK(contains(ir.out, "irregular"));
}

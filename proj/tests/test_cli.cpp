#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "kpm/cli.hpp"
#include "kpm/io.hpp"

using namespace kpm;
using namespace kpm::testing;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_fixture(const std::string& name, const Json& j) {
    std::string path = "cli_fixture_" + name + ".json";
    save_json(j, path);
    return path;
}

}  // namespace

TEST_CASE("degree-check reports and exit codes") {
    auto good = run({"schubert", "degree-check", "6"});
    CHECK(good.code == 0);
    CHECK(good.out == "check: schubert-degree\nadmissible: true (c=18, e=36)\n");

    auto bad = run({"schubert", "degree-check", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "check: schubert-degree\nadmissible: false (obstruction at eps_3)\n");

    auto zero = run({"schubert", "degree-check", "0"});
    CHECK(zero.code == 0);

    CHECK(run({"schubert", "degree-check", "-3"}).code == 2);
    CHECK(run({"schubert", "degree-check", "frog"}).code == 2);
}

TEST_CASE("schubert product parsing and printing") {
    auto r = run({"schubert", "product", "eps1", "eps1"});
    CHECK(r.code == 0);
    CHECK(r.out == "check: schubert-product\nproduct: 2*eps2\n");
    auto combo = run({"schubert", "product", "2*eps1 + eps0", "3*eps2"});
    CHECK(combo.code == 0);
    CHECK(combo.out.find("18*eps3") != std::string::npos);
    CHECK(combo.out.find("3*eps2") != std::string::npos);
    CHECK(run({"schubert", "product", "xyz", "eps1"}).code == 2);
}

TEST_CASE("monad check on files") {
    std::string good = write_fixture("d1", adhm_to_json(d1_fixture()));
    auto r = run({"monad", "check", good});
    CHECK(r.code == 0);
    CHECK(r.out == "check: monad-check\ncondition(1): ok; nondegenerate: true\n");

    ScalarMatrix z(1, 1), a(1, 2), b(1, 2);
    a(0, 0) = Scalar(1);
    std::string degenerate = write_fixture("deg", adhm_to_json(make_adhm(1, z, z, a, b)));
    auto rd = run({"monad", "check", degenerate});
    CHECK(rd.code == 1);
    CHECK(rd.out == "check: monad-check\ncondition(1): ok; nondegenerate: false\n");

    Json invalid = adhm_to_json(d1_fixture());
    invalid["b"] = Json::array({Json::array({"1", "0"})});
    std::string bad = write_fixture("bad", invalid);
    auto rb = run({"monad", "check", bad});
    CHECK(rb.code == 1);
    CHECK(rb.out == "check: monad-check\ncondition(1): violated\n");

    CHECK(run({"monad", "check", "no_such_file.json"}).code == 2);
}

TEST_CASE("monad fiber and line subcommands") {
    std::string path = write_fixture("d1b", adhm_to_json(d1_fixture()));
    auto fib = run({"monad", "fiber", path, "0,0,1"});
    CHECK(fib.code == 0);
    CHECK(fib.out == "check: monad-fiber\nrep1: (1, 0, 0, 0)\nrep2: (0, 1, 0, 0)\n");

    auto line = run({"monad", "line", path, "1,0,0", "0,1,0"});
    CHECK(line.code == 0);
    CHECK(line.out == "check: monad-line\nsplitting: 0\n");

    auto jump = run({"monad", "line", path, "0,1,0", "0,0,1"});
    CHECK(jump.out == "check: monad-line\nsplitting: 1\n");
}

TEST_CASE("monad scan table output is deterministic") {
    std::string path = write_fixture("d1c", adhm_to_json(d1_fixture()));
    auto a = run({"monad", "scan", path, "--size", "1", "--table"});
    auto b = run({"monad", "scan", path, "--size", "1", "--table"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical
    CHECK(a.out.find("[1:1:1]\t0") != std::string::npos);
}

TEST_CASE("monad random round-trips through the file format") {
    auto r = run({"monad", "random", "2", "42", "-o", "cli_fixture_rand.json"});
    CHECK(r.code == 0);
    ADHMData x = load_adhm("cli_fixture_rand.json");
    CHECK(x.d == 2);
    CHECK(validate(x));
    ADHMData y = random_adhm(2, 42);
    CHECK(x.alpha == y.alpha);
    CHECK(x.b == y.b);
}

TEST_CASE("action subcommands") {
    std::string path = write_fixture("d1d", adhm_to_json(d1_fixture()));
    auto cs = run({"act", "cstar", path, "2", "-o", "cli_fixture_cs.json"});
    CHECK(cs.code == 0);
    ADHMData scaled = load_adhm("cli_fixture_cs.json");
    CHECK(scaled.a(0, 0) == Scalar(2));

    auto eq = run({"act", "equiv", path, "cli_fixture_cs.json"});
    CHECK(eq.code == 1);
    CHECK(eq.out == "check: act-equiv\nequivalent: false (conclusive)\n");

    auto self_eq = run({"act", "equiv", path, path});
    CHECK(self_eq.code == 0);
    CHECK(self_eq.out.find("equivalent: true") != std::string::npos);

    auto l42 = run({"act", "verify-l42", path, "2", "0,0,1"});
    CHECK(l42.code == 0);
    CHECK(l42.out == "check: verify-l42\nequivariance: ok\n");

    auto pi = run({"act", "pi", "1,0,0", "1,1"});
    CHECK(pi.code == 0);
    CHECK(pi.out == "check: act-pi\nimage: [1:0:0:1]\n");
    CHECK(run({"act", "pi", "0,0,0", "1,1"}).code == 2);

    ScalarMatrix g(1, 1);
    g(0, 0) = Scalar(2);
    std::string gpath = write_fixture("g", matrix_to_json(g));
    auto gl = run({"act", "gl", path, gpath, "-o", "cli_fixture_gl.json"});
    CHECK(gl.code == 0);
    CHECK(load_adhm("cli_fixture_gl.json").a(0, 0) == Scalar(Rat(1, 2)));
}

TEST_CASE("lattice and birkhoff subcommands") {
    save_loop(LoopMatrix::from_matrix(tpow(1)), "cli_fixture_loop.json");
    auto idx = run({"lattice", "index", "cli_fixture_loop.json"});
    CHECK(idx.code == 0);
    CHECK(idx.out ==
          "check: lattice-index\ninvariant-factors: (-1, 1)\nindex: 1\n");

    CHECK(run({"lattice", "member", "cli_fixture_loop.json", "0"}).code == 1);
    CHECK(run({"lattice", "member", "cli_fixture_loop.json", "2"}).code == 0);

    auto split = run({"lattice", "splitting", "cli_fixture_loop.json"});
    CHECK(split.out == "check: lattice-splitting\nsplitting: 1\n");

    auto bk = run({"birkhoff", "cli_fixture_loop.json"});
    CHECK(bk.code == 0);
    CHECK(bk.out.find("n: 1") != std::string::npos);

    // Loop with det != 1 is malformed input.
    Json j = loop_to_json(LoopMatrix::identity());
    j["matrix"][0][0] = Json::object({{"1", "1"}});
    save_json(j, "cli_fixture_badloop.json");
    CHECK(run({"birkhoff", "cli_fixture_badloop.json"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"schubert"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"lattice", "splitting", "cli_fixture_loop.json", "--trunc", "2"}).code == 2);
}

TEST_CASE("environment variable overrides the default truncation") {
    save_loop(LoopMatrix::from_matrix(tpow(1)), "cli_fixture_loop2.json");
    setenv("KPM_TRUNCATION", "24", 1);
    auto r = run({"lattice", "splitting", "cli_fixture_loop2.json"});
    CHECK(r.code == 0);
    setenv("KPM_TRUNCATION", "2", 1);
    CHECK(run({"lattice", "splitting", "cli_fixture_loop2.json"}).code == 2);
    setenv("KPM_TRUNCATION", "frog", 1);
    CHECK(run({"lattice", "splitting", "cli_fixture_loop2.json"}).code == 2);
    unsetenv("KPM_TRUNCATION");
}

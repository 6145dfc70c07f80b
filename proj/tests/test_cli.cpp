#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgo/cli.hpp"
#include "sgo/orbits.hpp"
#include "sgo/serialize.hpp"

using namespace sgo;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sgo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const json& j) {
    const auto path = std::filesystem::temp_directory_path() / ("sgo_test_" + name + ".json");
    std::ofstream(path) << j.dump();
    return path.string();
}

SuperWeight W(int M, int N, std::vector<int> l, std::vector<int> th, std::vector<int> tp) {
    SuperWeight w = SuperWeight::zero(M, N);
    w.lambda = std::move(l);
    w.theta = std::move(th);
    w.theta_prime = std::move(tp);
    return w;
}

}

TEST_CASE("roots and enumerate") {
    const Run r = run({"roots", "--M", "1", "--N", "3"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == "sgo.roots/1");
    CHECK(j["simple"].size() == 3);
    CHECK(j["simple"][2]["parity"] == "even");
    CHECK(j["gl_n"].size() == 2);

    const Run e = run({"enumerate", "--M", "1", "--N", "2", "--box", "1"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["counts"]["total"] == 27);
}

TEST_CASE("classify and semi-infinite") {
    const SuperWeight w = W(1, 3, {1}, {-1, 0}, {2});
    const std::string m = write_tmp("classify", to_json(canonical_rep_N(w)));
    const Run c = run({"classify", "--matrix", m, "--M", "1", "--N", "3"});
    REQUIRE(c.code == 0);
    CHECK(weight_from_json(json::parse(c.out)) == w);

    const OrbitPoint p = canonical_rep_G(w);
    const std::string pt = write_tmp("point", json{{"grM", to_json(*p.grM)}, {"grN", to_json(p.grN)}});
    const Run s = run({"semi-infinite", "--matrix", pt, "--M", "1", "--N", "3"});
    REQUIRE(s.code == 0);
    CHECK(weight_from_json(json::parse(s.out)) == w);

    const std::string gm = write_tmp("grm", to_json(*p.grM));
    const Run x = run({"semi-infinite", "--matrix", gm, "--M", "1", "--N", "3", "--component", "grM"});
    REQUIRE(x.code == 0);
    CHECK(json::parse(x.out)["lambda"] == json::array({1}));

    const std::string sing = write_tmp("singular", to_json(LoopMatrix(3)));
    CHECK(run({"classify", "--matrix", sing, "--M", "1", "--N", "3"}).code == 2);
}

TEST_CASE("closure dot") {
    const Run r = run({"closure", "--M", "1", "--N", "2", "--box", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("digraph closure {", 0) == 0);
    CHECK(r.out.find("->") != std::string::npos);
}

TEST_CASE("zastava bound and config exponents") {
    const SuperWeight s = SuperWeight::zero(1, 2);
    const SuperWeight o = s + recompose(RootVector::unit(1, 2, 1)) + recompose(RootVector::unit(1, 2, 2));
    const std::string fo = write_tmp("wo", to_json(o)), fs = write_tmp("ws", to_json(s));
    for (const auto& args : {std::vector<std::string>{"zastava-bound", "--wO", fo, "--wS", fs},
                             std::vector<std::string>{"zastava", "bound", "--wO", fo, "--wS", fs, "--json"}}) {
        const Run r = run(args);
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["bound"] == 1);
        CHECK(j["zastava_dim"] == 2);
        CHECK(j["cor813"]["kind"] == "Even");
    }
    CHECK(run({"zastava-bound", "--wO", fs, "--wS", fo}).code == 2);

    ColoredDivisor d(1, 3);
    d.set("x", -recompose(RootVector::unit(1, 3, 3)));
    const std::string fd = write_tmp("divisor", to_json(d));
    const Run r = run({"config", "exponents", "--divisor", fd});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["exponents"]["x"] == 0);
    CHECK(run({"config-exponents", "--divisor", fd}).code == 0);
}

TEST_CASE("verify and exit codes") {
    const auto report = std::filesystem::temp_directory_path() / "sgo_test_report.json";
    const Run r = run({"verify", "roundtrip", "--M", "1", "--N", "2", "--box", "1", "--samples", "5", "--json",
                       report.string(), "--serial"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("roundtrip: pass", 0) == 0);
    std::ifstream f(report);
    const json j = json::parse(f);
    CHECK(j["schema"] == "sgo.suite-report/1");
    CHECK(j["violations"] == 0);

    CHECK(run({"verify", "bogus", "--M", "1", "--N", "2"}).code == 2);
    CHECK(run({"verify", "roundtrip", "--M", "2", "--N", "2"}).code == 2);
    CHECK(run({"roots"}).code == 2);
    CHECK(run({"classify", "--matrix", "/nonexistent.json", "--M", "1", "--N", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const Run warn = run({"verify", "config", "--M", "1", "--N", "2", "--samples", "3", "--pole-bound", "5"});
    CHECK(warn.code == 0);
    CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "sgo_test_roots.json";
    const Run r = run({"-o", path.string(), "roots", "--M", "1", "--N", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    CHECK(json::parse(f)["M"] == 1);
}

#include <doctest.h>

#include "sgo/errors.hpp"
#include "sgo/orbits.hpp"
#include "sgo/verify.hpp"

using namespace sgo;

namespace {

SuiteParams small(int M, int N, int box, int samples) {
    SuiteParams p;
    p.M = M;
    p.N = N;
    p.box = box;
    p.samples = samples;
    return p;
}

}

TEST_CASE("roundtrip suite") {
    const SuiteReport r = run_roundtrip(small(1, 2, 2, 50));
    CHECK(r.passed());
    CHECK(r.exit_code() == 0);
    CHECK(r.trials == static_cast<long long>(orbit_label_box(1, 2, 2).size()) * 50);

    const SuiteReport z = run_roundtrip(small(1, 3, 0, 5));
    CHECK(z.passed());
    CHECK(z.trials == 5);
}

TEST_CASE("roundtrip suite detects a corrupted classifier") {
    SuiteParams p = small(1, 2, 1, 10);
    p.classifier = [](const LoopMatrix& a, int M, int N, const PrecisionPolicy& pol) {
        SuperWeight w = classify(a, M, N, pol);
        if (w.theta[0] != 0) w.theta[0] += 1;
        return w;
    };
    p.failure_cap = 3;
    const SuiteReport r = run_roundtrip(p);
    CHECK(r.violations > 0);
    CHECK(r.failures.size() == 3);
    CHECK(r.exit_code() == 1);

    p.classifier = [](const LoopMatrix&, int, int, const PrecisionPolicy&) -> SuperWeight {
        throw PrecisionExhausted("test");
    };
    const SuiteReport q = run_roundtrip(p);
    CHECK(q.violations == 0);
    CHECK(q.precision_failures == q.trials);
    CHECK(q.exit_code() == 3);
}

TEST_CASE("reports do not depend on the execution mode") {
    for (const std::string& name : suite_names()) {
        SuiteParams p = small(1, 3, 1, 20);
        p.execution = Execution::Serial;
        const std::string serial = run_suite(name, p).to_json().dump();
        p.execution = Execution::Parallel;
        const std::string parallel = run_suite(name, p).to_json().dump();
        CHECK(serial == parallel);
        CHECK(serial.find("elapsed") == std::string::npos);
    }
}

TEST_CASE("report json") {
    const SuiteReport r = run_closure_equiv(small(1, 2, 1, 0));
    const json j = r.to_json();
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["suite"] == "closure");
    CHECK(j["trials"] == 27 * 27);
    CHECK(j["passed"] == true);
    CHECK(j["params"]["M"] == 1);
}

TEST_CASE("semi-infinite suite") {
    const SuiteReport r = run_prop81(small(1, 3, 2, 200));
    CHECK(r.passed());
    CHECK(r.trials == 200 + static_cast<long long>(prop81_weights(1, 3, 2, 20).size()));
    CHECK(prop81_weights(1, 3, 2, 20).size() == 20);
    CHECK(prop81_weights(1, 2, 0, 20).size() == 1);
}

TEST_CASE("relevance suite") {
    const SuiteReport r = run_relevance_stab(small(1, 2, 1, 0));
    CHECK(r.passed());
    CHECK(r.assumptions.size() == 2);
    SuiteParams p = small(1, 2, 2, 0);
    p.truncation = 3;
    CHECK_THROWS_AS(run_relevance_stab(p), InsufficientPrecision);
    CHECK(chi_vanishes_on_stabilizer(SuperWeight::zero(1, 3), 3));
}

TEST_CASE("config suite") {
    const SuiteReport r = run_config(small(2, 4, 0, 100));
    CHECK(r.passed());
    CHECK(r.trials == 2 * 5 + 100 + 1);
}

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 5);
    CHECK_THROWS_AS(run_suite("nope", small(1, 2, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("roundtrip", small(2, 2, 0, 1)), InvalidRank);
}

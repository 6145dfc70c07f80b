#ifndef SGO_VERIFY_HPP
#define SGO_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgo/loopmat.hpp"
#include "sgo/serialize.hpp"
#include "sgo/superroots.hpp"

namespace sgo {

inline constexpr const char* kReportSchema = "sgo.suite-report/1";

enum class Execution { Serial, Parallel };

using Classifier = std::function<SuperWeight(const LoopMatrix&, int, int, const PrecisionPolicy&)>;

struct SuiteParams {
    int M = 1;
    int N = 2;
    int box = 2;
    int samples = 200;
    std::uint64_t seed = 1;
    int precision = kDefaultPrecision;
    int pole_bound = 2;
    int failure_cap = 20;
    int weight_count = 20;  // prop81: weights the samples are spread over
    int truncation = 0;     // relevance: 0 means box + 2
    Execution execution = Execution::Parallel;
    Classifier classifier;  // roundtrip: defaults to classify
};

struct Failure {
    std::string input;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string suite;
    SuiteParams params;
    long long trials = 0;
    long long violations = 0;
    long long precision_failures = 0;
    std::vector<Failure> failures;  // first failure_cap of them
    std::vector<std::string> assumptions;
    double elapsed_seconds = 0;  // not in the JSON

    bool passed() const { return violations == 0 && precision_failures == 0; }
    // 0 pass, 1 property violation, 3 precision exhaustion
    int exit_code() const;
    json to_json() const;
};

SuiteReport run_roundtrip(const SuiteParams& p);
SuiteReport run_prop81(const SuiteParams& p);
SuiteReport run_closure_equiv(const SuiteParams& p);
SuiteReport run_relevance_stab(const SuiteParams& p);
SuiteReport run_config(const SuiteParams& p);

// by name: roundtrip, prop81, closure, relevance, config; throws std::invalid_argument otherwise
SuiteReport run_suite(const std::string& name, const SuiteParams& p);
const std::vector<std::string>& suite_names();

// Whether the residue character vanishes on the Lie algebra of the stabilizer
// of L_w GL_N(O) in U^-_{M,N}(F), computed on the generators L_w t^m E_ab L_w^-1
// with 0 <= m < T.
bool chi_vanishes_on_stabilizer(const SuperWeight& w, int T);

// the weights run_prop81 draws from
std::vector<SuperWeight> prop81_weights(int M, int N, int box, int count);

}

#endif

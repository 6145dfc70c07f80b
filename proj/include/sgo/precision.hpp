#ifndef SGO_PRECISION_HPP
#define SGO_PRECISION_HPP

#include <algorithm>
#include <string>

#include "sgo/errors.hpp"

namespace sgo {

inline constexpr int kDefaultPrecision = 24;
inline constexpr int kMaxPrecision = 96;

struct PrecisionPolicy {
    int initial = kDefaultPrecision;
    int max = kMaxPrecision;
};

// Runs f(P) for P = initial, 2*initial, ... up to max, retrying whenever
// f raises InsufficientPrecision.
template <class F>
auto with_precision_retry(const PrecisionPolicy& policy, F&& f) {
    int p = policy.initial;
    while (true) {
        try {
            return f(p);
        } catch (const InsufficientPrecision& e) {
            if (p >= policy.max) throw PrecisionExhausted(std::string(e.what()) + " at precision " + std::to_string(p));
            p = std::min(p * 2, std::max(policy.max, policy.initial));
        }
    }
}

}

#endif

#ifndef SGO_TEST_UTIL_HPP
#define SGO_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "sgo/loopmat.hpp"

namespace sgo::testing {

inline LaurentScalar t(int e, long long c = 1) { return LaurentScalar::monomial(c, e); }
inline TruncatedSeries ts(int e, long long c = 1) { return TruncatedSeries(t(e, c)); }

inline LaurentScalar random_poly(std::mt19937_64& rng, int lo, int hi, int range = 3, bool nonzero = true) {
    std::vector<std::pair<int, Rational>> terms;
    do {
        terms.clear();
        for (int e = lo; e <= hi; ++e) {
            const long long c = static_cast<long long>(rng() % static_cast<unsigned>(2 * range + 1)) - range;
            if (c != 0 && rng() % 2) terms.emplace_back(e, Rational(c, 1 + static_cast<long long>(rng() % 3)));
        }
    } while (nonzero && terms.empty());
    return LaurentScalar::from_terms(terms);
}

inline LoopMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    LoopMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = TruncatedSeries(random_poly(rng, lo, hi, 3, false));
    return a;
}

// nonsingular: a random arc element times a diagonal of monomials
inline LoopMatrix random_invertible(std::mt19937_64& rng, int n, std::uint64_t seed) {
    std::vector<int> ex(static_cast<std::size_t>(n));
    for (int& e : ex) e = static_cast<int>(rng() % 7) - 3;
    return sample(GroupPattern::lower_unipotent(n), derive_seed(seed, 0)) * LoopMatrix::diag_monomial(ex) *
           sample(GroupPattern::arc_gl(n), derive_seed(seed, 1));
}

}

#endif

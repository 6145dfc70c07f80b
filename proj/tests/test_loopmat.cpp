#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sgo/errors.hpp"
#include "sgo/loopmat.hpp"
#include "test_util.hpp"

using namespace sgo;
using sgo::testing::t;
using sgo::testing::ts;

namespace {

LoopMatrix diag(std::vector<int> e) { return LoopMatrix::diag_monomial(e); }

// Leibniz formula over exact entries
LaurentScalar leibniz(const LoopMatrix& a) {
    const int n = a.n();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    LaurentScalar s;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
        LaurentScalar term(1);
        for (int i = 0; i < n; ++i) term = term * a.at(i, p[i]).poly();
        s = inv % 2 ? s - term : s + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return s;
}

// brute-force minimum over all column subsets
int min_minor_val(const LoopMatrix& a, const std::vector<int>& rows) {
    const int n = a.n(), k = static_cast<int>(rows.size());
    int best = kInfinitePrecision;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
            if (mask >> j & 1) cols.push_back(j);
        LoopMatrix sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
        const LaurentScalar d = leibniz(sub);
        if (!d.is_zero()) best = std::min(best, d.valuation());
    }
    return best;
}

std::vector<int> random_rows(std::mt19937_64& rng, int n) {
    std::vector<int> rows;
    while (rows.empty())
        for (int i = 0; i < n; ++i)
            if (rng() % 2) rows.push_back(i);
    return rows;
}

}

TEST_CASE("det examples and Leibniz oracle") {
    CHECK(det(diag({2, -1})) == ts(1));
    CHECK(det(LoopMatrix::identity(4)) == ts(0));
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 20; ++i) {
            const LoopMatrix a = testing::random_matrix(rng, n, -2, 2);
            CHECK(det(a).poly() == leibniz(a));
        }
}

TEST_CASE("det is multiplicative") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const LoopMatrix a = testing::random_matrix(rng, 3, -2, 2), b = testing::random_matrix(rng, 3, -2, 2);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("minor valuations") {
    const LoopMatrix a = diag({2, -1});
    CHECK(minor_min_valuation(a, {0, 1}) == Valuation::finite(1));
    CHECK(minor_min_valuation(a, {1}) == Valuation::finite(-1));
    LoopMatrix z(3);
    CHECK(minor_min_valuation(z, {0, 2}).is_infinite());
}

TEST_CASE("minor valuations: elimination, expansion and brute force agree") {
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i < 25; ++i) {
            const LoopMatrix a = testing::random_invertible(rng, n, rng());
            const auto rows = random_rows(rng, n);
            const int want = min_minor_val(a, rows);
            CHECK(minor_min_valuation_elimination(a, rows) == Valuation::finite(want));
            if (n <= 5) CHECK(minor_min_valuation_expansion(a, rows) == Valuation::finite(want));
        }
}

TEST_CASE("minor valuations are invariant under right arc multiplication") {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < 200; ++i) {
            const LoopMatrix a = testing::random_invertible(rng, n, rng());
            const LoopMatrix k = sample(GroupPattern::arc_gl(n), rng());
            const auto rows = random_rows(rng, n);
            CHECK(minor_min_valuation(a, rows) == minor_min_valuation(a * k, rows));
        }
}

TEST_CASE("inverse") {
    CHECK(inverse(diag({1, -1})) == diag({-1, 1}));
    CHECK(inverse(LoopMatrix::identity(3)) == LoopMatrix::identity(3));
    CHECK_THROWS_AS(inverse(LoopMatrix(2)), Singular);
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const LoopMatrix a = testing::random_invertible(rng, n, rng());
        const LoopMatrix b = inverse(a, 16);
        const LoopMatrix p = a * b;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const TruncatedSeries& x = p.at(r, c);
                CHECK(x.precision() >= 1);
                CHECK(x.poly() == (r == c ? LaurentScalar(1) : LaurentScalar()).truncated(x.precision()));
            }
    }
}

TEST_CASE("arc group membership and lattices") {
    CHECK(in_arc_group(LoopMatrix::identity(3)));
    CHECK_FALSE(in_arc_group(diag({1, -1})));
    for (std::uint64_t s = 0; s < 500; ++s) CHECK(in_arc_group(sample(GroupPattern::arc_gl(1 + s % 4), s)));

    CHECK_FALSE(same_lattice(diag({1, 0}), diag({0, 1})));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const LoopMatrix a = testing::random_invertible(rng, 3, rng());
        CHECK(same_lattice(a, a * sample(GroupPattern::arc_gl(3), rng())));
        LoopMatrix u = LoopMatrix::identity(3);
        u.at(0, 2) = ts(-7);
        CHECK_FALSE(same_lattice(a, u * a));
    }
}

TEST_CASE("hermite pivots") {
    CHECK(hermite_pivots(diag({3, -1, 0}), Orientation::FromTopRow) == std::vector<int>{3, -1, 0});
    CHECK(hermite_pivots(diag({3, -1, 0}), Orientation::FromBottomRow) == std::vector<int>{3, -1, 0});
    LoopMatrix u = LoopMatrix::identity(2);
    u.at(0, 1) = ts(-5);
    CHECK(hermite_pivots(u * diag({1, -1}), Orientation::FromBottomRow) == std::vector<int>{1, -1});
}

TEST_CASE("hermite reduction: invariance, shape and lattice") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const LoopMatrix a = testing::random_invertible(rng, n, rng());
        const LoopMatrix k = sample(GroupPattern::arc_gl(n), rng());
        for (auto o : {Orientation::FromTopRow, Orientation::FromBottomRow})
            CHECK(hermite_pivots(a, o) == hermite_pivots(a * k, o));
    }
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const LoopMatrix a = testing::random_invertible(rng, n, rng());
        for (auto o : {Orientation::FromTopRow, Orientation::FromBottomRow}) {
            const HermiteResult h = hermite_reduce(a, o);
            for (int r = 0; r < n; ++r) {
                CHECK(h.H.at(r, r).poly() == t(h.pivots[r]));
                for (int c = 0; c < n; ++c) {
                    const bool zero_side = o == Orientation::FromTopRow ? c > r : c < r;
                    if (zero_side) CHECK(h.H.at(r, c).poly().is_zero());
                }
            }
            LoopMatrix he(n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) he.at(r, c) = TruncatedSeries(h.H.at(r, c).poly());
            CHECK(same_lattice(he, a));
        }
    }
}

TEST_CASE("bottom-row pivots of upper unipotent times torus sum to val det") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> mu(static_cast<std::size_t>(n));
        for (int& m : mu) m = static_cast<int>(rng() % 9) - 4;
        const LoopMatrix a = sample(GroupPattern::upper_unipotent(n), rng()) * diag(mu);
        const auto p = hermite_pivots(a, Orientation::FromBottomRow);
        CHECK(p == mu);
        CHECK(std::accumulate(p.begin(), p.end(), 0) == det(a).val().value);
    }
}

TEST_CASE("smith exponents") {
    CHECK(smith_exponents(diag({2, -1})) == std::vector<int>{-1, 2});
    CHECK(smith_exponents(LoopMatrix::identity(3)) == std::vector<int>{0, 0, 0});
    for (std::uint64_t s = 0; s < 100; ++s) {
        const LoopMatrix u = sample(GroupPattern::arc_gl(2), 2 * s);
        const LoopMatrix k = sample(GroupPattern::arc_gl(2), 2 * s + 1);
        CHECK(smith_exponents(u * diag({2, -1}) * k) == std::vector<int>{-1, 2});
    }
}

TEST_CASE("sampler patterns") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const LoopMatrix u = sample(GroupPattern::uminus(1, 3), s);
        for (int i = 0; i < 3; ++i) {
            CHECK(u.at(i, i).poly() == LaurentScalar(1));
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const bool free_entry = i >= 2 && j < i;
                if (!free_entry) CHECK(u.at(i, j).poly().is_zero());
                if (!free_entry || u.at(i, j).poly().is_zero()) continue;
                CHECK(u.at(i, j).poly().valuation() >= -2);
            }
        }
        const LoopMatrix h = sample(GroupPattern::h_pattern(2, 4), s);
        CHECK(h.at(2, 2).poly() == LaurentScalar(1));
        CHECK(h.at(2, 0).poly().is_zero());
        CHECK(h.at(0, 3).poly().is_zero());
        CHECK(h.at(1, 2).poly().is_zero());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!h.at(i, j).poly().is_zero()) CHECK(h.at(i, j).poly().valuation() >= 0);
        CHECK(sample(GroupPattern::h_pattern(2, 4), s) == h);
        CHECK(in_arc_group(sample(GroupPattern::arc_torus(3), s)));
        CHECK(in_arc_group(sample(GroupPattern::arc_gl(2), s)));
    }
    CHECK_THROWS_AS(sample(GroupPattern::uminus(3, 3), 1), InvalidRank);
}

TEST_CASE("chi residue") {
    LoopMatrix e = LoopMatrix::identity(3);
    e.at(2, 1) = ts(-1);
    CHECK(chi_residue(e, 1, 3) == Rational(1));
    CHECK(chi_residue(LoopMatrix::identity(4), 2, 4) == Rational(0));
    LoopMatrix bad = LoopMatrix::identity(3);
    bad.at(0, 2) = ts(0);
    CHECK_THROWS_AS(chi_residue(bad, 1, 3), PatternMismatch);
    for (std::uint64_t s = 0; s < 100; ++s) {
        const LoopMatrix u = sample(GroupPattern::uminus(1, 4), 2 * s), v = sample(GroupPattern::uminus(1, 4), 2 * s + 1);
        CHECK(chi_residue(u * v, 1, 4) == chi_residue(u, 1, 4) + chi_residue(v, 1, 4));
    }
    const LoopMatrix h = sample(GroupPattern::h_pattern(1, 3), 5);
    CHECK_NOTHROW(chi_residue(h, 1, 3));
}

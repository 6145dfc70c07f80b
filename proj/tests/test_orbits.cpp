#include <doctest.h>

#include <random>

#include "sgo/errors.hpp"
#include "sgo/orbits.hpp"
#include "test_util.hpp"

using namespace sgo;
using sgo::testing::t;
using sgo::testing::ts;

namespace {

SuperWeight W(int M, int N, std::vector<int> l, std::vector<int> th, std::vector<int> tp) {
    SuperWeight w = SuperWeight::zero(M, N);
    w.lambda = std::move(l);
    w.theta = std::move(th);
    w.theta_prime = std::move(tp);
    return w;
}

// Row sets {1..r}, r >= M, are preserved by the left group, so the minimal
// minor valuations on them are orbit invariants.
std::vector<Valuation> row_invariants(const LoopMatrix& a, int M) {
    std::vector<Valuation> out;
    std::vector<int> rows;
    for (int r = 0; r < a.n(); ++r) {
        rows.push_back(r);
        if (r + 1 >= M) out.push_back(minor_min_valuation(a, rows));
    }
    return out;
}

LoopMatrix left_right(const SuperWeight& w, std::uint64_t seed) {
    return sample(GroupPattern::h_pattern(w.M, w.N), derive_seed(seed, 0)) * canonical_rep_N(w) *
           sample(GroupPattern::arc_gl(w.N), derive_seed(seed, 1));
}

}

TEST_CASE("canonical representatives") {
    const LoopMatrix z = canonical_rep_N(SuperWeight::zero(2, 4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool one = i == j || (i == 2 && j < 2);
            CHECK(z.at(i, j).poly() == (one ? LaurentScalar(1) : LaurentScalar()));
        }
    const LoopMatrix a = canonical_rep_N(W(1, 2, {1}, {0, 1}, {}));
    CHECK(a.at(0, 0).poly() == t(1));
    CHECK(a.at(0, 1).poly().is_zero());
    CHECK(a.at(1, 0).poly() == t(0));
    CHECK(a.at(1, 1).poly() == t(1));

    CHECK(d_matrix(2, 4) == z);
    CHECK(d_matrix(2, 4) * d_matrix_inverse(2, 4) == LoopMatrix::identity(4));

    for (const auto& w : weight_box(1, 3, 1)) {
        int v = 0;
        for (int i = 0; i < w.M; ++i) v += w.lambda[i] + w.theta[i];
        v += w.theta[w.M];
        for (int x : w.theta_prime) v += x;
        CHECK(det(canonical_rep_N(w)).val() == Valuation::finite(v));

        const OrbitPoint p = canonical_rep_G(w);
        REQUIRE(p.grM);
        CHECK(*p.grM == LoopMatrix::diag_monomial({-w.lambda[0]}));
        CHECK(same_lattice(p.grN, d_matrix(1, 3) * LoopMatrix::diag_monomial(w.gl_n_part())));
    }
    const OrbitPoint p0 = canonical_rep_G(SuperWeight::zero(2, 3));
    CHECK(*p0.grM == LoopMatrix::identity(2));
    CHECK(p0.grN == d_matrix(2, 3));
}

TEST_CASE("classify fixes canonical forms") {
    for (auto [M, N] : {std::pair{1, 2}, {1, 3}, {2, 3}, {2, 4}})
        for (const auto& w : orbit_label_box(M, N, 1)) CHECK(classify(canonical_rep_N(w), M, N) == w);
}

TEST_CASE("classify on sampled orbit points") {
    for (auto [M, N] : {std::pair{1, 2}, {1, 3}, {2, 4}}) {
        const auto labels = orbit_label_box(M, N, 2);
        for (std::size_t i = 0; i < labels.size(); i += 7)
            for (std::uint64_t s = 0; s < 5; ++s) {
                const SuperWeight& w = labels[i];
                const LoopMatrix a = left_right(w, 100 * i + s);
                const SuperWeight got = classify(a, M, N);
                CHECK(got == w);
                // independent check through minor valuations
                CHECK(row_invariants(a, M) == row_invariants(canonical_rep_N(got), M));
            }
    }
}

TEST_CASE("orbit labels are separated") {
    const auto labels = orbit_label_box(1, 3, 1);
    std::vector<SuperWeight> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) seen.push_back(classify(left_right(labels[i], i), 1, 3));
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
}

TEST_CASE("classify recovers a perturbed trailing block") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        const SuperWeight w = W(1, 4, {0}, {-1, 1}, {static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2});
        LoopMatrix k = LoopMatrix::identity(4);
        const LoopMatrix kk = sample(GroupPattern::arc_gl(2), rng());
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) k.at(2 + r, 2 + c) = kk.at(r, c);
        const ClassificationTrace tr = classify_traced(canonical_rep_N(w) * k, 1, 4);
        CHECK(tr.result == w);
        for (int r = 0; r < 4; ++r)
            for (int c = r + 1; c < 4; ++c) CHECK(tr.stage1.at(r, c).poly().is_zero());
        CHECK(tr.stage2.at(2, 0).poly().is_zero());
        CHECK(tr.stage2.at(3, 1).poly().is_zero());
    }
}

TEST_CASE("classify errors") {
    CHECK_THROWS_AS(classify(LoopMatrix(3), 1, 3), Singular);
    CHECK_THROWS_AS(classify(LoopMatrix::identity(3), 1, 2), Error);
    CHECK_THROWS_AS(classify(LoopMatrix::identity(3), 3, 3), InvalidRank);
}

TEST_CASE("configuration normalization") {
    CHECK(normalize_configuration({{}, {}, 3}) == std::pair{std::vector<int>{}, std::vector<int>{3}});
    // diag(t^2) over (t^0, t^5): lambda = 2, theta = (0, 5)
    CHECK(normalize_configuration({{2}, {0}, 5}) == std::pair{std::vector<int>{2}, std::vector<int>{0, 5}});
    // row entries cannot sit above the corner
    CHECK(normalize_configuration({{2}, {7}, 5}) == std::pair{std::vector<int>{-3}, std::vector<int>{5, 5}});
}

TEST_CASE("classify on the product form") {
    for (const auto& w : orbit_label_box(1, 3, 2))
        if (is_relevant(w)) CHECK(classify(canonical_rep_G(w), 1, 3) == w);
    for (std::uint64_t s = 0; s < 40; ++s) {
        const SuperWeight w = W(2, 4, {-1, 1}, {-2, 0, 1}, {2});
        const LoopMatrix g = sample(GroupPattern::arc_gl(2), derive_seed(s, 0));
        OrbitPoint p = canonical_rep_G(w);
        LoopMatrix lift = LoopMatrix::identity(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) lift.at(i, j) = g.at(i, j);
        p.grM = g * *p.grM * sample(GroupPattern::arc_gl(2), derive_seed(s, 1));
        p.grN = lift * p.grN * sample(GroupPattern::arc_gl(4), derive_seed(s, 2));
        CHECK(classify(p, 2, 4) == classify(canonical_rep_G(w), 2, 4));
    }
}

TEST_CASE("semi-infinite weights") {
    for (auto [M, N] : {std::pair{1, 2}, {1, 3}, {2, 4}})
        for (const auto& w : weight_box(M, N, 1)) CHECK(semi_infinite_weight(canonical_rep_G(w), M, N) == w);

    std::mt19937_64 rng(5);
    for (std::uint64_t s = 0; s < 200; ++s) {
        const int M = 1 + static_cast<int>(s % 2), N = M + 1 + static_cast<int>(rng() % 2);
        SuperWeight w = SuperWeight::zero(M, N);
        for (int& x : w.lambda) x = static_cast<int>(rng() % 7) - 3;
        for (int& x : w.theta) x = static_cast<int>(rng() % 7) - 3;
        for (int& x : w.theta_prime) x = static_cast<int>(rng() % 7) - 3;
        std::vector<int> neg;
        for (int x : w.lambda) neg.push_back(-x);
        const LoopMatrix u = sample(GroupPattern::upper_unipotent(N), derive_seed(s, 0));
        OrbitPoint p{LoopMatrix::diag_monomial(neg), d_matrix(M, N) * u * LoopMatrix::diag_monomial(w.gl_n_part())};
        CHECK(semi_infinite_weight(p, M, N) == w);
        p.grM = *p.grM * sample(GroupPattern::arc_gl(M), derive_seed(s, 1));
        p.grN = p.grN * sample(GroupPattern::arc_gl(N), derive_seed(s, 2));
        CHECK(semi_infinite_weight(p, M, N) == w);
    }
    CHECK_THROWS_AS(semi_infinite_weight({std::nullopt, LoopMatrix(3)}, 1, 3), Singular);
}

TEST_CASE("stratum data") {
    LoopMatrix a = LoopMatrix::identity(3);
    a.at(2, 2) = ts(2);
    const StratumData e = stratum_B(a);
    CHECK(e.j_seq.empty());
    CHECK(e.i_seq.empty());
    CHECK(e.eta_prime_1 == -2);
    a.at(2, 0) = ts(0);
    const StratumData s = stratum_B(a);
    CHECK(s.j_seq == std::vector<int>{1});
    CHECK(s.i_seq == std::vector<int>{0});
    CHECK(s.eta == std::vector<int>{0, 0});

    LoopMatrix bad = LoopMatrix::identity(3);
    bad.at(0, 2) = ts(1);
    CHECK_THROWS_AS(stratum_B(bad), PatternMismatch);
    CHECK_THROWS_AS(stratum_B(LoopMatrix::identity(2)), PatternMismatch);
}

TEST_CASE("stratum data is invariant under clearing") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const int M = 1 + trial % 2, N = M + 2;
        LoopMatrix a(N);
        for (int i = 0; i <= M; ++i) {
            a.at(i, i) = ts(static_cast<int>(rng() % 5) - 2);
            for (int j = 0; j < i; ++j) a.at(i, j) = TruncatedSeries(testing::random_poly(rng, -2, 2, 3, false));
        }
        a.at(N - 1, N - 1) = ts(static_cast<int>(rng() % 4) + 1);
        for (int j = 0; j <= M; ++j)
            if (rng() % 3) a.at(N - 1, j) = ts(static_cast<int>(rng() % 6) - 2);
        const StratumData base = stratum_B(a);
        for (std::size_t l = 1; l < base.j_seq.size(); ++l) {
            CHECK(base.j_seq[l] < base.j_seq[l - 1]);
            CHECK(base.i_seq[l] < base.i_seq[l - 1]);
        }
        if (!base.i_seq.empty()) CHECK(base.i_seq.front() < -base.eta_prime_1);

        // adding arc multiples of a column to the columns on its left
        LoopMatrix k = LoopMatrix::identity(N);
        for (int c = 0; c < N - 1; ++c)
            for (int r = c + 1; r < N; ++r) k.at(r, c) = TruncatedSeries(testing::random_poly(rng, 0, 3, 3, false));
        const StratumData moved = stratum_B(a * k);
        CHECK(moved.j_seq == base.j_seq);
        CHECK(moved.i_seq == base.i_seq);
        CHECK(moved.eta == base.eta);
        CHECK(moved.eta_prime_1 == base.eta_prime_1);
    }
}

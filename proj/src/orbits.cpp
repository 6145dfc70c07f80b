#include "sgo/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "sgo/errors.hpp"
#include "sgo/lattice.hpp"

namespace sgo {

namespace {

using lattice::Workspace;

LaurentScalar tpow(int e) { return LaurentScalar::monomial(1, e); }

void check_square(const LoopMatrix& a, int n) {
    if (a.n() != n) throw PatternMismatch("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
}

// Orientation table for the semi-infinite orbits: the U_M^- factor is read
// from lower triangular forms, the conjugated U_N factor from upper ones.
struct SemiInfiniteAxis {
    Orientation orientation;
    int sign;
    bool conjugate_by_d;
};
constexpr SemiInfiniteAxis kAxisM{Orientation::FromTopRow, -1, false};
constexpr SemiInfiniteAxis kAxisN{Orientation::FromBottomRow, 1, true};

std::vector<int> axis_weight(const LoopMatrix& a, const SemiInfiniteAxis& axis, int M, const PrecisionPolicy& policy) {
    LoopMatrix m = axis.conjugate_by_d ? d_matrix_inverse(M, a.n()) * a : a;
    std::vector<int> p = hermite_pivots(m, axis.orientation, policy);
    for (int& x : p) x *= axis.sign;
    return p;
}

template <class F>
auto singular_aware(const LoopMatrix& a, F&& f) {
    try {
        return f();
    } catch (const PrecisionExhausted&) {
        if (a.is_exact() && det(a).is_exact_zero()) throw Singular();
        throw;
    }
}

}

LoopMatrix d_matrix(int M, int N) {
    check_rank(M, N);
    LoopMatrix d = LoopMatrix::identity(N);
    for (int j = 0; j < M; ++j) d.at(M, j) = TruncatedSeries(1);
    return d;
}

LoopMatrix d_matrix_inverse(int M, int N) {
    check_rank(M, N);
    LoopMatrix d = LoopMatrix::identity(N);
    for (int j = 0; j < M; ++j) d.at(M, j) = TruncatedSeries(-1);
    return d;
}

LoopMatrix canonical_rep_N(const SuperWeight& w) {
    w.validate();
    const int M = w.M;
    LoopMatrix a(w.N);
    for (int i = 0; i < M; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        a.at(i, i) = TruncatedSeries(tpow(w.lambda[ui] + w.theta[ui]));
        a.at(M, i) = TruncatedSeries(tpow(w.theta[ui]));
    }
    a.at(M, M) = TruncatedSeries(tpow(w.theta[static_cast<std::size_t>(M)]));
    for (std::size_t k = 0; k < w.theta_prime.size(); ++k) {
        const int r = M + 1 + static_cast<int>(k);
        a.at(r, r) = TruncatedSeries(tpow(w.theta_prime[k]));
    }
    return a;
}

OrbitPoint canonical_rep_G(const SuperWeight& w) {
    w.validate();
    std::vector<int> neg(w.lambda.size());
    std::transform(w.lambda.begin(), w.lambda.end(), neg.begin(), [](int x) { return -x; });
    return {LoopMatrix::diag_monomial(neg), d_matrix(w.M, w.N) * LoopMatrix::diag_monomial(w.gl_n_part())};
}

// Moves available on a configuration: row M+1 entry j may absorb multiples
// c * r_i with val c >= max(0, mu_j - mu_i) (a column operation followed by a
// row operation restoring the diagonal block). Each move strictly lowers some
// nu_j, so sum(nu) is the progress measure; it is bounded below by min(nu).
std::pair<std::vector<int>, std::vector<int>> normalize_configuration(PivotConfiguration c) {
    const int M = static_cast<int>(c.mu.size());
    auto& mu = c.mu;
    auto& nu = c.nu;
    for (int& x : nu) x = std::min(x, c.top);
    long long budget = 1;
    if (M > 0) {
        const int lo = *std::min_element(nu.begin(), nu.end());
        for (int x : nu) budget += x - lo;
    }
    while (true) {
        int fi = -1, fj = -1;
        for (int i = 0; i < M && fi < 0; ++i)
            for (int j = 0; j < M; ++j) {
                const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                if (nu[ui] < nu[uj] && mu[ui] - nu[ui] > mu[uj] - nu[uj]) {
                    fi = i, fj = j;
                    break;
                }
            }
        if (fi < 0) break;
        if (--budget < 0) throw ClassificationStall();
        const auto ui = static_cast<std::size_t>(fi), uj = static_cast<std::size_t>(fj);
        nu[uj] = nu[ui] + std::max(0, mu[uj] - mu[ui]);
    }
    std::vector<int> order(static_cast<std::size_t>(M));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        const int la = mu[ua] - nu[ua], lb = mu[ub] - nu[ub];
        return nu[ua] != nu[ub] ? nu[ua] < nu[ub] : la < lb;
    });
    std::vector<int> lambda, theta;
    for (int i : order) {
        const auto ui = static_cast<std::size_t>(i);
        lambda.push_back(mu[ui] - nu[ui]);
        theta.push_back(nu[ui]);
    }
    theta.push_back(c.top);
    return {lambda, theta};
}

namespace {

ClassificationTrace classify_impl(const LoopMatrix& a, int M, int N, const PrecisionPolicy& policy, bool trace) {
    check_rank(M, N);
    check_square(a, N);
    return singular_aware(a, [&] {
        return with_precision_retry(policy, [&](int p) {
            const int cutoff = lattice::working_cutoff(a, p);

            // stage 1: lower triangular column Hermite form; theta' are the trailing pivots
            Workspace w = Workspace::from_matrix(a, cutoff);
            const std::vector<int> pivots = lattice::triangularize(w, Orientation::FromTopRow);
            lattice::certify(w, Orientation::FromTopRow);

            ClassificationTrace out;
            SuperWeight& r = out.result;
            r.M = M;
            r.N = N;
            r.theta_prime.assign(pivots.begin() + M + 1, pivots.end());

            // stage 2: U^-_{M,N}(F) clears rows M+2.. left of the diagonal, leaving
            // blockdiag(B, trailing diagonal); nothing there feeds stage 3
            if (trace) {
                out.stage1 = w.to_matrix(cutoff);
                out.stage2 = LoopMatrix(N);
                for (int i = 0; i <= M; ++i)
                    for (int j = 0; j <= i; ++j) out.stage2.at(i, j) = TruncatedSeries(w.at(i, j), cutoff);
                for (int i = M + 1; i < N; ++i) out.stage2.at(i, i) = TruncatedSeries(w.at(i, i), cutoff);
            }

            // stage 3: Smith form of the top M x M block, column moves tracked on row M+1
            Workspace b(M + 1, M + 1, cutoff);
            for (int i = 0; i <= M; ++i)
                for (int j = 0; j <= i; ++j) b.at(i, j) = w.at(i, j);
            PivotConfiguration& c = out.configuration;
            c.mu = lattice::diagonalize_block(b, M, M + 1);
            c.top = pivots[static_cast<std::size_t>(M)];
            for (int j = 0; j < M; ++j) {
                const LaurentScalar& x = b.at(M, j);
                c.nu.push_back(x.is_zero() ? c.top : std::min(x.valuation(), c.top));
            }
            std::tie(r.lambda, r.theta) = normalize_configuration(c);
            return out;
        });
    });
}

}

ClassificationTrace classify_traced(const LoopMatrix& a, int M, int N, const PrecisionPolicy& policy) {
    return classify_impl(a, M, N, policy, true);
}

SuperWeight classify(const LoopMatrix& a, int M, int N, const PrecisionPolicy& policy) {
    return classify_impl(a, M, N, policy, false).result;
}

SuperWeight classify(const OrbitPoint& p, int M, int N, const PrecisionPolicy& policy) {
    check_rank(M, N);
    check_square(p.grN, N);
    if (!p.grM) return classify(p.grN, M, N, policy);
    check_square(*p.grM, M);
    return with_precision_retry(policy, [&](int prec) {
        const LoopMatrix inv = inverse(*p.grM, 2 * prec);
        LoopMatrix lift = LoopMatrix::identity(N);
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < M; ++j) lift.at(i, j) = inv.at(i, j);
        try {
            return classify(multiply(lift, p.grN, 2 * prec), M, N, PrecisionPolicy{prec, prec});
        } catch (const PrecisionExhausted& e) {
            throw InsufficientPrecision(e.what());
        }
    });
}

std::vector<int> semi_infinite_xi(const LoopMatrix& grM, const PrecisionPolicy& policy) {
    return singular_aware(grM, [&] { return axis_weight(grM, kAxisM, grM.n(), policy); });
}

std::vector<int> semi_infinite_eta(const LoopMatrix& grN, int M, const PrecisionPolicy& policy) {
    check_rank(M, grN.n());
    return singular_aware(grN, [&] { return axis_weight(grN, kAxisN, M, policy); });
}

SuperWeight semi_infinite_weight(const OrbitPoint& p, int M, int N, const PrecisionPolicy& policy) {
    check_rank(M, N);
    check_square(p.grN, N);
    std::vector<int> flat(static_cast<std::size_t>(M), 0);
    if (p.grM) {
        check_square(*p.grM, M);
        flat = semi_infinite_xi(*p.grM, policy);
    }
    const std::vector<int> eta = semi_infinite_eta(p.grN, M, policy);
    SuperWeight w = SuperWeight::zero(M, N);
    w.lambda = flat;
    w.theta.assign(eta.begin(), eta.begin() + M + 1);
    w.theta_prime.assign(eta.begin() + M + 1, eta.end());
    return w;
}

StratumData stratum_B(const LoopMatrix& a, const PrecisionPolicy& policy) {
    const int N = a.n();
    if (N < 3) throw PatternMismatch("stratum data needs N = M+2 with M >= 1");
    const int M = N - 2;
    for (int i = 0; i < N - 1; ++i)
        if (!a.at(i, N - 1).is_exact_zero())
            throw PatternMismatch("last column must vanish above the corner");
    return singular_aware(a, [&] {
        return with_precision_retry(policy, [&](int p) {
            Workspace w = Workspace::from_matrix(a, lattice::working_cutoff(a, p));
            const std::vector<int> pivots = lattice::triangularize(w, Orientation::FromTopRow);
            lattice::certify(w, Orientation::FromTopRow);
            StratumData s;
            for (int j = 0; j <= M; ++j) s.eta.push_back(-pivots[static_cast<std::size_t>(j)]);
            s.eta_prime_1 = -pivots[static_cast<std::size_t>(N - 1)];
            // scan right to left: an entry survives iff it beats everything to its right
            int bound = -s.eta_prime_1;
            for (int j = M; j >= 0; --j) {
                const LaurentScalar& x = w.at(N - 1, j);
                if (x.is_zero() || x.valuation() >= bound) continue;
                bound = x.valuation();
                s.j_seq.push_back(j + 1);
                s.i_seq.push_back(bound);
            }
            return s;
        });
    });
}

}

#include "sgo/zastava.hpp"

#include <algorithm>

#include "sgo/errors.hpp"

namespace sgo {

int zastava_dim(const RootVector& n) {
    int d = 0;
    for (std::size_t i = 0; i < n.coeffs.size(); ++i) {
        const int c = n.coeffs[i];
        if (c < 0) throw NegativeCoefficient();
        d += n.is_odd(static_cast<int>(i) + 1) ? c : 2 * c;
    }
    return d;
}

DimReport intersection_dim_bound(const SuperWeight& w_O, const SuperWeight& w_S) {
    if (!leq(w_S, w_O)) throw NotComparable();
    const RootVector n = *decompose(w_O, w_S);
    const int M = w_O.M, N = w_O.N;
    DimReport r;
    r.zastava_dim = zastava_dim(n);

    const CompositeRoots roots = composite_roots(M, N);
    std::vector<const RootVector*> simple;
    for (const auto& c : roots.gl_m) simple.push_back(&c.simple);
    for (const auto& c : roots.gl_n) simple.push_back(&c.simple);
    const std::size_t K = simple.size();

    // depth-first over multiplicities, keeping the simple-root budget nonnegative
    std::vector<int> count(K, 0);
    std::vector<int> budget = n.coeffs;
    r.bound = -1;
    auto leaf = [&](int total) {
        if (total < r.bound) return;
        if (total > r.bound) {
            r.bound = total;
            r.witnesses.clear();
        }
        RootVector used = RootVector::zero(M, N);
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t i = 0; i < used.coeffs.size(); ++i) used.coeffs[i] += count[k] * simple[k]->coeffs[i];
        r.witnesses.push_back(w_S + recompose(used));
    };
    auto fits = [&](std::size_t k) {
        for (std::size_t i = 0; i < budget.size(); ++i)
            if (simple[k]->coeffs[i] > budget[i]) return false;
        return true;
    };
    auto apply = [&](std::size_t k, int sign) {
        for (std::size_t i = 0; i < budget.size(); ++i) budget[i] -= sign * simple[k]->coeffs[i];
        count[k] += sign;
    };
    auto dfs = [&](auto&& self, std::size_t k, int total) -> void {
        if (k == K) {
            leaf(total);
            return;
        }
        int taken = 0;
        self(self, k + 1, total);
        while (fits(k)) {
            apply(k, 1);
            ++taken;
            self(self, k + 1, total + taken);
        }
        for (; taken > 0; --taken) apply(k, -1);
    };
    dfs(dfs, 0, 0);
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
}

Cor813Result cor813_classify(const SuperWeight& w_O, const SuperWeight& w_S) {
    if (!leq(w_S, w_O)) throw NotComparable();
    const SuperWeight diff = w_O - w_S;
    auto composite = [](const SuperWeight& d) -> std::optional<CompositeCoefficients> {
        auto c = composite_decompose(d);
        if (!c) return std::nullopt;
        for (int x : c->a)
            if (x < 0) return std::nullopt;
        for (int x : c->b)
            if (x < 0) return std::nullopt;
        return c;
    };
    Cor813Result r;
    if (auto c = composite(diff)) {
        r.kind = Cor813Result::Kind::Even;
        r.decomposition = *c;
        return r;
    }
    for (int i = 1; i <= 2 * w_O.M; ++i) {
        const SuperWeight rest = diff - recompose(RootVector::unit(w_O.M, w_O.N, i));
        if (auto c = composite(rest)) {
            r.kind = Cor813Result::Kind::OddPlusAlpha;
            r.alpha = i;
            r.decomposition = *c;
            return r;
        }
    }
    return r;
}

const char* kind_name(Cor813Result::Kind k) {
    switch (k) {
        case Cor813Result::Kind::Even: return "Even";
        case Cor813Result::Kind::OddPlusAlpha: return "OddPlusAlpha";
        case Cor813Result::Kind::Neither: return "Neither";
    }
    return "";
}

bool prop942_check(const std::vector<int>& eta, int eta_prime_1, const std::vector<int>& j_seq,
                   const std::vector<int>& i_seq, const std::vector<int>& xi) {
    const int M = static_cast<int>(eta.size()) - 1;
    if (M < 1) throw MalformedSequences("eta must have length M+1 with M >= 1");
    if (static_cast<int>(xi.size()) != M) throw MalformedSequences("xi must have length M");
    if (j_seq.size() != i_seq.size()) throw MalformedSequences("j and i sequences differ in length");
    const std::size_t k = j_seq.size();
    for (std::size_t l = 0; l < k; ++l) {
        if (j_seq[l] < 1 || j_seq[l] > M + 1) throw MalformedSequences("j out of range");
        if (l > 0 && !(j_seq[l] < j_seq[l - 1])) throw MalformedSequences("j not strictly decreasing");
        if (l > 0 && !(i_seq[l] < i_seq[l - 1])) throw MalformedSequences("i not strictly decreasing");
    }
    if (k > 0) {
        if (i_seq[k - 1] != 0) throw MalformedSequences("last i must be 0");
        if (!(i_seq[0] < -eta_prime_1)) throw MalformedSequences("i_1 must be below -eta'_1");
    }

    if (std::any_of(xi.begin(), xi.end(), [](int x) { return x != 0; })) return false;
    std::vector<bool> pivot(static_cast<std::size_t>(M + 1), false);
    for (std::size_t l = 0; l < k; ++l) {
        const auto j = static_cast<std::size_t>(j_seq[l] - 1);
        pivot[j] = true;
        const int want = l == 0 ? i_seq[0] + eta_prime_1 : i_seq[l] - i_seq[l - 1];
        if (-eta[j] != want) return false;
    }
    for (int j = 0; j <= M; ++j)
        if (!pivot[static_cast<std::size_t>(j)] && eta[static_cast<std::size_t>(j)] != 0) return false;
    return true;
}

bool closure_partial_sums(const SuperWeight& w, const SuperWeight& wt) {
    if (w.M != wt.M || w.N != wt.N) throw RankMismatch();
    const int M = w.M;
    // d = degree of w minus degree of w~ on the rows {1..i}
    int d = 0;
    for (int i = 0; i <= M; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (w.theta[u] - wt.theta[u] + d < 0) return false;  // rows {1..i, M+1}
        if (i == M) {
            d += w.theta[u] - wt.theta[u];
            break;
        }
        d += w.lambda[u] + w.theta[u] - wt.lambda[u] - wt.theta[u];
        if (d < 0) return false;  // rows {1..i+1}
    }
    for (std::size_t s = 0; s < w.theta_prime.size(); ++s) {
        d += w.theta_prime[s] - wt.theta_prime[s];
        if (s + 1 < w.theta_prime.size() && d < 0) return false;  // rows {1..M+1+s+1}
    }
    return d == 0;
}

}

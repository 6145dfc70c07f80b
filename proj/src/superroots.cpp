#include "sgo/superroots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sgo/errors.hpp"

namespace sgo {

namespace {

// Simple roots are alpha_k = -e_k + e_{k+1} in the interleaved basis
// e = (eps_1, delta_1, eps_2, delta_2, ..., eps_M, delta_M, eps_{M+1}, ..., eps_N).
// Returns the flat (delta block, then epsilon block) index of e_k, k 1-based.
int interleaved_to_flat(int M, int k) {
    if (k <= 2 * M) return k % 2 == 0 ? k / 2 - 1 : M + (k + 1) / 2 - 1;
    return M + (k - M) - 1;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

bool nondecreasing(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

void same_rank(const SuperWeight& a, const SuperWeight& b) {
    if (a.M != b.M || a.N != b.N) throw RankMismatch();
}

}

void check_rank(int M, int N) {
    if (M < 1 || M >= N) throw InvalidRank(M, N);
}

SuperWeight SuperWeight::zero(int M, int N) {
    check_rank(M, N);
    SuperWeight w;
    w.M = M;
    w.N = N;
    w.lambda.assign(static_cast<std::size_t>(M), 0);
    w.theta.assign(static_cast<std::size_t>(M + 1), 0);
    w.theta_prime.assign(static_cast<std::size_t>(N - M - 1), 0);
    return w;
}

SuperWeight SuperWeight::from_flat(int M, int N, const std::vector<int>& flat) {
    SuperWeight w = zero(M, N);
    if (flat.size() != static_cast<std::size_t>(M + N)) throw RankMismatch();
    std::copy_n(flat.begin(), M, w.lambda.begin());
    std::copy_n(flat.begin() + M, M + 1, w.theta.begin());
    std::copy(flat.begin() + 2 * M + 1, flat.end(), w.theta_prime.begin());
    return w;
}

std::vector<int> SuperWeight::flat() const {
    std::vector<int> f(lambda);
    f.insert(f.end(), theta.begin(), theta.end());
    f.insert(f.end(), theta_prime.begin(), theta_prime.end());
    return f;
}

std::vector<int> SuperWeight::gl_n_part() const {
    std::vector<int> f(theta);
    f.insert(f.end(), theta_prime.begin(), theta_prime.end());
    return f;
}

int SuperWeight::total() const {
    const auto f = flat();
    return std::accumulate(f.begin(), f.end(), 0);
}

void SuperWeight::validate() const {
    check_rank(M, N);
    if (lambda.size() != static_cast<std::size_t>(M) || theta.size() != static_cast<std::size_t>(M + 1) ||
        theta_prime.size() != static_cast<std::size_t>(N - M - 1))
        throw InvariantViolation("weight lengths do not match (M,N)");
}

std::string SuperWeight::str() const { return join(lambda) + join(theta) + join(theta_prime); }

bool operator<(const SuperWeight& a, const SuperWeight& b) {
    if (a.M != b.M || a.N != b.N) return std::make_pair(a.M, a.N) < std::make_pair(b.M, b.N);
    return a.flat() < b.flat();
}

SuperWeight SuperWeight::operator+(const SuperWeight& b) const {
    same_rank(*this, b);
    auto f = flat();
    const auto g = b.flat();
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += g[i];
    return from_flat(M, N, f);
}

SuperWeight SuperWeight::operator-(const SuperWeight& b) const { return *this + (-b); }

SuperWeight SuperWeight::operator-() const {
    auto f = flat();
    for (auto& x : f) x = -x;
    return from_flat(M, N, f);
}

RootVector RootVector::zero(int M, int N) {
    check_rank(M, N);
    return {M, N, std::vector<int>(static_cast<std::size_t>(M + N - 1), 0)};
}

RootVector RootVector::unit(int M, int N, int index) {
    RootVector r = zero(M, N);
    if (index < 1 || index > M + N - 1) throw InvariantViolation("simple root index out of range");
    r.coeffs[static_cast<std::size_t>(index - 1)] = 1;
    return r;
}

bool RootVector::nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

std::string RootVector::str() const { return join(coeffs); }

RootVector RootVector::operator+(const RootVector& b) const {
    if (M != b.M || N != b.N) throw RankMismatch();
    RootVector r(*this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

RootVector RootVector::operator-(const RootVector& b) const {
    if (M != b.M || N != b.N) throw RankMismatch();
    RootVector r(*this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

std::vector<SimpleRoot> simple_roots(int M, int N) {
    check_rank(M, N);
    std::vector<SimpleRoot> out;
    for (int k = 1; k < M + N; ++k) {
        SimpleRoot r{k, k <= 2 * M, std::vector<int>(static_cast<std::size_t>(M + N), 0)};
        r.flat[static_cast<std::size_t>(interleaved_to_flat(M, k))] -= 1;
        r.flat[static_cast<std::size_t>(interleaved_to_flat(M, k + 1))] += 1;
        out.push_back(std::move(r));
    }
    return out;
}

SuperWeight recompose(const RootVector& n) {
    std::vector<int> f(static_cast<std::size_t>(n.M + n.N), 0);
    for (int k = 1; k < n.M + n.N; ++k) {
        const int c = n.coeffs[static_cast<std::size_t>(k - 1)];
        f[static_cast<std::size_t>(interleaved_to_flat(n.M, k))] -= c;
        f[static_cast<std::size_t>(interleaved_to_flat(n.M, k + 1))] += c;
    }
    return SuperWeight::from_flat(n.M, n.N, f);
}

std::optional<RootVector> decompose(const SuperWeight& w1, const SuperWeight& w2) {
    same_rank(w1, w2);
    const int M = w1.M, N = w1.N;
    const auto a = w1.flat();
    const auto b = w2.flat();
    // coefficient of e_k in sum n_i alpha_i is n_{k-1} - n_k
    RootVector n = RootVector::zero(M, N);
    int prev = 0, total = 0;
    for (int k = 1; k <= M + N; ++k) {
        const std::size_t f = static_cast<std::size_t>(interleaved_to_flat(M, k));
        const int d = a[f] - b[f];
        total += d;
        if (k < M + N) {
            prev -= d;
            n.coeffs[static_cast<std::size_t>(k - 1)] = prev;
        }
    }
    if (total != 0) return std::nullopt;
    return n;
}

namespace {

// entry of w along the k-th interleaved basis vector, without building flat()
int interleaved_entry(const SuperWeight& w, int k) {
    if (k <= 2 * w.M) return k % 2 == 0 ? w.lambda[static_cast<std::size_t>(k / 2 - 1)]
                                        : w.theta[static_cast<std::size_t>((k - 1) / 2)];
    if (k == 2 * w.M + 1) return w.theta[static_cast<std::size_t>(w.M)];
    return w.theta_prime[static_cast<std::size_t>(k - 2 * w.M - 2)];
}

}

// same test as decompose(w2, w1) >= 0, without allocating
bool leq(const SuperWeight& w1, const SuperWeight& w2) {
    same_rank(w1, w2);
    int run = 0;
    for (int k = 1; k <= w1.M + w1.N; ++k) {
        run += interleaved_entry(w2, k) - interleaved_entry(w1, k);
        if (k < w1.M + w1.N && run > 0) return false;
    }
    return run == 0;
}

int CompositeCoefficients::total() const {
    return std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
}

std::optional<CompositeCoefficients> composite_decompose(const SuperWeight& diff) {
    // delta block along -delta_i + delta_{i+1}, epsilon block along -eps_j + eps_{j+1}
    auto chain = [](const std::vector<int>& d) -> std::optional<std::vector<int>> {
        std::vector<int> c;
        int run = 0;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            run -= d[i];
            c.push_back(run);
        }
        if (run != d.back()) return std::nullopt;
        return c;
    };
    auto a = chain(diff.lambda);
    auto b = chain(diff.gl_n_part());
    if (!a || !b) return std::nullopt;
    return CompositeCoefficients{*a, *b};
}

bool leq_G(const SuperWeight& w1, const SuperWeight& w2) {
    same_rank(w1, w2);
    const auto c = composite_decompose(w2 - w1);
    if (!c) return false;
    auto nonneg = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }); };
    return nonneg(c->a) && nonneg(c->b);
}

RootVector composite_to_simple(int M, int N, const CompositeCoefficients& c) {
    RootVector n = RootVector::zero(M, N);
    auto add = [&](int k, int v) { n.coeffs[static_cast<std::size_t>(k - 1)] += v; };
    for (int i = 1; i <= M - 1; ++i) {
        add(2 * i, c.a[static_cast<std::size_t>(i - 1)]);
        add(2 * i + 1, c.a[static_cast<std::size_t>(i - 1)]);
    }
    for (int j = 1; j <= N - 1; ++j) {
        const int v = c.b[static_cast<std::size_t>(j - 1)];
        if (j <= M) {
            add(2 * j - 1, v);
            add(2 * j, v);
        } else {
            add(j + M, v);
        }
    }
    return n;
}

CompositeRoots composite_roots(int M, int N) {
    check_rank(M, N);
    CompositeRoots out;
    for (int i = 1; i <= M - 1; ++i) {
        CompositeCoefficients c{std::vector<int>(static_cast<std::size_t>(M - 1), 0),
                                std::vector<int>(static_cast<std::size_t>(N - 1), 0)};
        c.a[static_cast<std::size_t>(i - 1)] = 1;
        RootVector s = composite_to_simple(M, N, c);
        out.gl_m.push_back({recompose(s).flat(), s});
    }
    for (int j = 1; j <= N - 1; ++j) {
        CompositeCoefficients c{std::vector<int>(static_cast<std::size_t>(M - 1), 0),
                                std::vector<int>(static_cast<std::size_t>(N - 1), 0)};
        c.b[static_cast<std::size_t>(j - 1)] = 1;
        RootVector s = composite_to_simple(M, N, c);
        out.gl_n.push_back({recompose(s).flat(), s});
    }
    return out;
}

bool condition_a(const SuperWeight& w) { return nondecreasing(w.lambda) && nondecreasing(w.gl_n_part()); }

bool condition_b(const SuperWeight& w) {
    for (int i = 1; i <= w.M; ++i) {
        const int ti = w.theta[static_cast<std::size_t>(i - 1)];
        const int li = w.lambda[static_cast<std::size_t>(i - 1)];
        if (ti == w.theta[static_cast<std::size_t>(i)] && ti + li != 0) return false;
        if (i >= 2 && w.lambda[static_cast<std::size_t>(i - 2)] == li && ti + li != 0) return false;
    }
    return true;
}

bool is_relevant(const SuperWeight& w) { return condition_a(w) && condition_b(w); }

bool is_hw_dominant(const SuperWeight& w) {
    return nondecreasing(w.lambda) && nondecreasing(w.theta) && nondecreasing(w.theta_prime) && condition_b(w);
}

bool is_orbit_label(const SuperWeight& w) { return nondecreasing(w.lambda) && nondecreasing(w.theta); }

SuperWeight rho_circ(int M, int N) {
    SuperWeight r = SuperWeight::zero(M, N);
    for (int i = 0; i < M; ++i) r.lambda[static_cast<std::size_t>(i)] = -M + 1 + 2 * i;
    for (int i = 0; i <= M; ++i) r.theta[static_cast<std::size_t>(i)] = -M + 2 * i;
    for (int i = 0; i < N - M - 1; ++i) r.theta_prime[static_cast<std::size_t>(i)] = M + 2 + 2 * i;
    return r;
}

int pairing(const SuperWeight& r, const SuperWeight& w) {
    same_rank(r, w);
    const auto a = r.flat();
    const auto b = w.flat();
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

int orbit_dimension(const SuperWeight& w) {
    const SuperWeight r = rho_circ(w.M, w.N);
    return std::inner_product(r.lambda.begin(), r.lambda.end(), w.lambda.begin(), 0) +
           std::inner_product(r.theta.begin(), r.theta.end(), w.theta.begin(), 0);
}

namespace {

// all integer vectors of the given length with entries in [-box, box]
void for_each_vector(int len, int box, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(static_cast<std::size_t>(len), -box);
    while (true) {
        f(v);
        int i = len - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == box) v[static_cast<std::size_t>(i--)] = -box;
        if (i < 0) return;
        ++v[static_cast<std::size_t>(i)];
    }
}

}

std::vector<SuperWeight> weight_box(int M, int N, int box) {
    check_rank(M, N);
    std::vector<SuperWeight> out;
    for_each_vector(M + N, box, [&](const std::vector<int>& f) { out.push_back(SuperWeight::from_flat(M, N, f)); });
    return out;
}

std::vector<SuperWeight> orbit_label_box(int M, int N, int box) {
    std::vector<SuperWeight> out;
    for (auto& w : weight_box(M, N, box))
        if (is_orbit_label(w)) out.push_back(std::move(w));
    return out;
}

}

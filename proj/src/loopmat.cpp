#include "sgo/loopmat.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "sgo/errors.hpp"
#include "sgo/lattice.hpp"

namespace sgo {

namespace {

TruncatedSeries mul_capped(const TruncatedSeries& a, const TruncatedSeries& b, int cap) {
    if (a.is_exact_zero() || b.is_exact_zero()) return TruncatedSeries::zero(cap);
    const int va = a.val().lower_bound();
    const int vb = b.val().lower_bound();
    const int p = std::min({padd(va, b.precision()), padd(vb, a.precision()), cap});
    return {LaurentScalar::mul_trunc(a.poly(), b.poly(), p), p};
}

// All minors on the given rows, indexed by column bitmask, via successive
// Laplace expansion along each new row.
std::vector<TruncatedSeries> exterior_minors(const LoopMatrix& a, const std::vector<int>& rows) {
    const int n = a.n();
    if (n > 20) throw PatternMismatch("exterior expansion limited to n <= 20");
    const std::size_t full = std::size_t{1} << n;
    std::vector<TruncatedSeries> cur(full), next(full);
    std::vector<char> live(full, 0), next_live(full, 0);
    cur[0] = TruncatedSeries(1);
    live[0] = 1;
    for (int r : rows) {
        std::fill(next_live.begin(), next_live.end(), 0);
        for (std::size_t mask = 0; mask < full; ++mask) {
            if (!live[mask]) continue;
            for (int c = 0; c < n; ++c) {
                const std::size_t bit = std::size_t{1} << c;
                if (mask & bit) continue;
                const TruncatedSeries& x = a.at(r, c);
                if (x.is_exact_zero() || cur[mask].is_exact_zero()) {
                    if (!next_live[mask | bit]) {
                        next[mask | bit] = TruncatedSeries();
                        next_live[mask | bit] = 1;
                    }
                    continue;
                }
                TruncatedSeries term = x * cur[mask];
                const bool negative = std::popcount(mask >> (c + 1)) % 2 == 1;
                if (!next_live[mask | bit]) {
                    next[mask | bit] = negative ? -term : term;
                    next_live[mask | bit] = 1;
                } else if (negative) {
                    next[mask | bit] -= term;
                } else {
                    next[mask | bit] += term;
                }
            }
        }
        std::swap(cur, next);
        std::swap(live, next_live);
    }
    return cur;
}

bool is_zero_entry(const TruncatedSeries& x) { return x.poly().is_zero(); }

}

LoopMatrix::LoopMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}

LoopMatrix LoopMatrix::identity(int n) {
    LoopMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = TruncatedSeries(1);
    return m;
}

LoopMatrix LoopMatrix::diag_monomial(const std::vector<int>& exponents) {
    LoopMatrix m(static_cast<int>(exponents.size()));
    for (int i = 0; i < m.n(); ++i) m.at(i, i) = TruncatedSeries::monomial(1, exponents[static_cast<std::size_t>(i)]);
    return m;
}

int LoopMatrix::precision() const {
    int p = kInfinitePrecision;
    for (const auto& x : e_) p = std::min(p, x.precision());
    return p;
}

LoopMatrix LoopMatrix::truncated(int precision) const {
    LoopMatrix m(*this);
    for (auto& x : m.e_) x = x.truncated(precision);
    return m;
}

int LoopMatrix::min_valuation() const {
    int v = kInfinitePrecision;
    for (const auto& x : e_) v = std::min(v, x.val().lower_bound());
    return v;
}

std::string LoopMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << "[";
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) { return multiply(a, b, kInfinitePrecision); }

LoopMatrix multiply(const LoopMatrix& a, const LoopMatrix& b, int precision) {
    if (a.n() != b.n()) throw PatternMismatch("dimension mismatch in product");
    const int n = a.n();
    LoopMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            TruncatedSeries s = TruncatedSeries::zero(precision);
            for (int k = 0; k < n; ++k) {
                if (a.at(i, k).is_exact_zero() || b.at(k, j).is_exact_zero()) continue;
                s += mul_capped(a.at(i, k), b.at(k, j), precision);
            }
            c.at(i, j) = std::move(s);
        }
    }
    return c;
}

TruncatedSeries det(const LoopMatrix& a) {
    if (a.n() == 0) return TruncatedSeries(1);
    std::vector<int> rows(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) rows[static_cast<std::size_t>(i)] = i;
    auto minors = exterior_minors(a, rows);
    return minors.back();
}

TruncatedSeries minor(const LoopMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw PatternMismatch("minor needs as many rows as columns");
    LoopMatrix sub(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return det(sub);
}

Valuation minor_min_valuation_expansion(const LoopMatrix& a, const std::vector<int>& rows) {
    if (rows.empty()) return Valuation::finite(0);
    const auto minors = exterior_minors(a, rows);
    const int k = static_cast<int>(rows.size());
    int best = kInfinitePrecision;
    int unknown = kInfinitePrecision;
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
        if (std::popcount(mask) != k) continue;
        const Valuation v = minors[mask].val();
        if (v.is_finite()) best = std::min(best, v.value);
        if (v.is_unknown()) unknown = std::min(unknown, v.value);
    }
    if (best != kInfinitePrecision && best <= unknown) return Valuation::finite(best);
    if (best == kInfinitePrecision && unknown == kInfinitePrecision) return Valuation::infinite();
    throw InsufficientPrecision("minimal minor valuation undecided");
}

Valuation minor_min_valuation_elimination(const LoopMatrix& a, const std::vector<int>& rows,
                                          const PrecisionPolicy& policy) {
    if (rows.empty()) return Valuation::finite(0);
    try {
        return with_precision_retry(policy, [&](int p) {
            lattice::Workspace w = lattice::Workspace::from_rows(a, rows, lattice::working_cutoff(a, p));
            const auto pivots = lattice::triangularize(w, Orientation::FromTopRow);
            lattice::certify(w, Orientation::FromTopRow);
            int s = 0;
            for (int x : pivots) s += x;
            return Valuation::finite(s);
        });
    } catch (const PrecisionExhausted&) {
        // a rank-deficient row set never yields a pivot; settle it exactly
        if (a.is_exact()) return minor_min_valuation_expansion(a, rows);
        throw;
    }
}

Valuation minor_min_valuation(const LoopMatrix& a, const std::vector<int>& rows, const PrecisionPolicy& policy) {
    if (rows.size() > static_cast<std::size_t>(a.n())) throw PatternMismatch("more rows than the dimension");
    if (rows.size() <= 4) return minor_min_valuation_expansion(a, rows);
    return minor_min_valuation_elimination(a, rows, policy);
}

LoopMatrix adjugate(const LoopMatrix& a) {
    const int n = a.n();
    LoopMatrix adj(n);
    if (n == 1) {
        adj.at(0, 0) = TruncatedSeries(1);
        return adj;
    }
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (int i = 0; i < n; ++i) {
        std::vector<int> rows;
        for (int r = 0; r < n; ++r)
            if (r != i) rows.push_back(r);
        const auto minors = exterior_minors(a, rows);
        for (int j = 0; j < n; ++j) {
            const TruncatedSeries& m = minors[full ^ (std::size_t{1} << j)];
            adj.at(j, i) = (i + j) % 2 == 0 ? m : -m;
        }
    }
    return adj;
}

LoopMatrix inverse(const LoopMatrix& a, int target_precision) {
    const TruncatedSeries d = det(a);
    if (d.is_exact_zero()) throw Singular();
    const TruncatedSeries dinv = invert(d, target_precision);
    LoopMatrix adj = adjugate(a);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) adj.at(i, j) = adj.at(i, j) * dinv;
    return adj;
}

bool in_arc_group(const LoopMatrix& a) {
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            const Valuation v = a.at(i, j).val();
            if (v.is_finite() && v.value < 0) return false;
            if (v.is_unknown() && v.value < 0)
                throw InsufficientPrecision("entry valuation undecided");
        }
    }
    const Valuation dv = det(a).val();
    if (dv.is_finite()) return dv.value == 0;
    if (dv.is_infinite()) return false;
    if (dv.value > 0) return false;
    throw InsufficientPrecision("determinant valuation undecided");
}

bool same_lattice(const LoopMatrix& a, const LoopMatrix& b) {
    // a^-1 b lies in GL_n(O) iff adj(a) b has entries of valuation >= val det a
    // and det b has the same valuation as det a.
    const Valuation da = det(a).val();
    const Valuation db = det(b).val();
    if (da.is_infinite() || db.is_infinite()) throw Singular();
    if (da.is_unknown() || db.is_unknown()) throw InsufficientPrecision("determinant valuation undecided");
    if (da.value != db.value) return false;
    const LoopMatrix x = adjugate(a) * b;
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            const Valuation v = x.at(i, j).val();
            if (v.is_finite() && v.value < da.value) return false;
            if (v.is_unknown() && v.value < da.value) throw InsufficientPrecision("entry valuation undecided");
        }
    }
    return true;
}

std::vector<int> hermite_pivots(const LoopMatrix& a, Orientation orientation, const PrecisionPolicy& policy) {
    return with_precision_retry(policy, [&](int p) {
        lattice::Workspace w = lattice::Workspace::from_matrix(a, lattice::working_cutoff(a, p));
        auto pivots = lattice::triangularize(w, orientation);
        lattice::certify(w, orientation);
        return pivots;
    });
}

HermiteResult hermite_reduce(const LoopMatrix& a, Orientation orientation, const PrecisionPolicy& policy) {
    return with_precision_retry(policy, [&](int p) {
        const int cutoff = lattice::working_cutoff(a, p);
        lattice::Workspace w = lattice::Workspace::from_matrix(a, cutoff);
        const auto pivots = lattice::triangularize(w, orientation);
        lattice::certify(w, orientation);
        const int n = a.n();
        const bool top = orientation == Orientation::FromTopRow;

        // make every diagonal entry the monomial t^pivot
        for (int k = 0; k < n; ++k) {
            const int pk = pivots[static_cast<std::size_t>(k)];
            const LaurentScalar u = w.at(k, k).shifted(-pk);
            const int lo = top ? k : 0;
            const int hi = top ? n : k + 1;
            int vmin = pk;
            for (int i = lo; i < hi; ++i)
                if (!w.at(i, k).is_zero()) vmin = std::min(vmin, w.at(i, k).valuation());
            const LaurentScalar uinv = unit_inverse(u, cutoff - vmin);
            for (int i = lo; i < hi; ++i) w.at(i, k) = LaurentScalar::mul_trunc(w.at(i, k), uinv, cutoff);
            w.at(k, k) = LaurentScalar::monomial(1, pk);
        }

        // reduce off-diagonal entries modulo the pivot of their row
        auto reduce = [&](int i, int j) {
            const int pi = pivots[static_cast<std::size_t>(i)];
            const LaurentScalar& x = w.at(i, j);
            if (x.is_zero() || x.end() <= pi) return;
            std::vector<std::pair<int, Rational>> high;
            for (auto& [e, c] : x.terms())
                if (e >= pi) high.emplace_back(e - pi, c);
            const LaurentScalar q = LaurentScalar::from_terms(high);
            const int lo = top ? i : 0;
            const int hi = top ? n : i + 1;
            for (int r = lo; r < hi; ++r) {
                if (w.at(r, i).is_zero()) continue;
                w.at(r, j) = LaurentScalar::mul_sub_trunc(LaurentScalar(1), w.at(r, j), q, w.at(r, i), cutoff);
            }
        };
        if (top) {
            for (int i = 1; i < n; ++i)
                for (int j = 0; j < i; ++j) reduce(i, j);
        } else {
            for (int i = n - 2; i >= 0; --i)
                for (int j = i + 1; j < n; ++j) reduce(i, j);
        }

        HermiteResult out;
        out.pivots = pivots;
        out.H = w.to_matrix(cutoff);
        out.U = LoopMatrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.U.at(i, j) = out.H.at(i, j).shifted(-pivots[static_cast<std::size_t>(j)]);
        return out;
    });
}

std::vector<int> smith_exponents(const LoopMatrix& a, const PrecisionPolicy& policy) {
    return with_precision_retry(policy, [&](int p) {
        const int n = a.n();
        lattice::Workspace w = lattice::Workspace::from_matrix(a, lattice::working_cutoff(a, p));
        std::vector<int> ex(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            int bi = -1, bj = -1;
            for (int i = k; i < n; ++i) {
                const int j = w.argmin_in_row(i, k, n);
                if (j < 0) continue;
                if (bi < 0 || w.at(i, j).valuation() < w.at(bi, bj).valuation()) {
                    bi = i;
                    bj = j;
                }
            }
            if (bi < 0) throw InsufficientPrecision("Smith pivot vanished");
            w.swap_rows(bi, k);
            w.swap_columns(bj, k);
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) w.clear_with_row(k, k, i, k, n);
            for (int j = k + 1; j < n; ++j)
                if (!w.at(k, j).is_zero()) w.clear_with_column(k, k, j, k, n);
            ex[static_cast<std::size_t>(k)] = w.at(k, k).valuation();
        }
        const int top = *std::max_element(ex.begin(), ex.end());
        if (top >= w.cutoff()) throw InsufficientPrecision("Smith exponent reaches the cutoff");
        std::sort(ex.begin(), ex.end());
        return ex;
    });
}

Rational chi_residue(const LoopMatrix& a, int M, int N) {
    if (a.n() != N || M < 1 || M >= N) throw PatternMismatch("dimension does not match (M,N)");
    auto is_one = [](const TruncatedSeries& x) { return x.poly() == LaurentScalar(1); };
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const TruncatedSeries& x = a.at(i, j);
            bool ok;
            if (i < M) {
                ok = j < M || is_zero_entry(x);
            } else if (i == M) {
                ok = j == M ? is_one(x) : is_zero_entry(x);
            } else {
                ok = j < i || (j == i ? is_one(x) : is_zero_entry(x));
            }
            if (!ok) throw PatternMismatch("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    Rational s;
    for (int i = M; i + 1 < N; ++i) s += residue(a.at(i + 1, i));
    return s;
}

}

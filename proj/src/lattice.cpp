#include "sgo/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "sgo/errors.hpp"

namespace sgo::lattice {

namespace {

// gcd of all coefficients when every one is a small integer, otherwise 1
long long integer_content(const LaurentScalar& p, long long g) {
    for (const auto& c : p.dense()) {
        if (g == 1) return 1;
        if (c.is_zero()) continue;
        std::int64_t v;
        if (!c.as_small_integer(v)) return 1;
        g = std::gcd(g, static_cast<long long>(v < 0 ? -v : v));
    }
    return g;
}

}

Workspace::Workspace(int rows, int cols, int cutoff)
    : rows_(rows), cols_(cols), cutoff_(cutoff), e_(static_cast<std::size_t>(rows * cols)) {}

Workspace Workspace::from_matrix(const LoopMatrix& a, int cutoff) {
    Workspace w(a.n(), a.n(), cutoff);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) w.at(i, j) = a.at(i, j).poly().truncated(cutoff);
    return w;
}

Workspace Workspace::from_rows(const LoopMatrix& a, const std::vector<int>& rows, int cutoff) {
    Workspace w(static_cast<int>(rows.size()), a.n(), cutoff);
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < a.n(); ++j) w.at(i, j) = a.at(rows[static_cast<std::size_t>(i)], j).poly().truncated(cutoff);
    return w;
}

void Workspace::clear_with_column(int r, int p, int j, int r0, int r1) {
    const LaurentScalar& xp = at(r, p);
    const int a = xp.valuation();
    const LaurentScalar alpha = xp.shifted(-a);
    const LaurentScalar beta = at(r, j).shifted(-a);
    for (int i = r0; i < r1; ++i) {
        if (i == r) {
            at(i, j) = LaurentScalar();
            continue;
        }
        at(i, j) = LaurentScalar::mul_sub_trunc(alpha, at(i, j), beta, at(i, p), cutoff_);
    }
    remove_column_content(j, r0, r1);
}

void Workspace::clear_with_row(int c, int p, int i, int c0, int c1) {
    const LaurentScalar& yp = at(p, c);
    const int a = yp.valuation();
    const LaurentScalar alpha = yp.shifted(-a);
    const LaurentScalar beta = at(i, c).shifted(-a);
    for (int j = c0; j < c1; ++j) {
        if (j == c) {
            at(i, j) = LaurentScalar();
            continue;
        }
        at(i, j) = LaurentScalar::mul_sub_trunc(alpha, at(i, j), beta, at(p, j), cutoff_);
    }
    remove_row_content(i, c0, c1);
}

void Workspace::remove_column_content(int j, int r0, int r1) {
    long long g = 0;
    for (int i = r0; i < r1 && g != 1; ++i) g = integer_content(at(i, j), g);
    if (g <= 1) return;
    const Rational s(1, g);
    for (int i = r0; i < r1; ++i) at(i, j) = at(i, j).scaled(s);
}

void Workspace::remove_row_content(int i, int c0, int c1) {
    long long g = 0;
    for (int j = c0; j < c1 && g != 1; ++j) g = integer_content(at(i, j), g);
    if (g <= 1) return;
    const Rational s(1, g);
    for (int j = c0; j < c1; ++j) at(i, j) = at(i, j).scaled(s);
}

void Workspace::swap_columns(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void Workspace::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

int Workspace::argmin_in_row(int r, int c0, int c1) const {
    int best = -1;
    for (int j = c0; j < c1; ++j) {
        const LaurentScalar& x = at(r, j);
        if (x.is_zero()) continue;
        if (best < 0 || x.valuation() < at(r, best).valuation()) best = j;
    }
    return best;
}

LoopMatrix Workspace::to_matrix(int precision) const {
    LoopMatrix m(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = TruncatedSeries(at(i, j), precision);
    return m;
}

std::vector<int> triangularize(Workspace& w, Orientation orientation) {
    const int k = w.rows();
    const int n = w.cols();
    std::vector<int> pivots(static_cast<std::size_t>(k));
    if (orientation == Orientation::FromTopRow) {
        for (int r = 0; r < k; ++r) {
            const int p = w.argmin_in_row(r, r, n);
            if (p < 0) throw InsufficientPrecision("pivot row " + std::to_string(r) + " vanished");
            w.swap_columns(p, r);
            for (int j = r + 1; j < n; ++j)
                if (!w.at(r, j).is_zero()) w.clear_with_column(r, r, j, r, k);
            pivots[static_cast<std::size_t>(r)] = w.at(r, r).valuation();
        }
    } else {
        if (k != n) throw PatternMismatch("bottom-row reduction needs a square matrix");
        for (int r = k - 1; r >= 0; --r) {
            const int p = w.argmin_in_row(r, 0, r + 1);
            if (p < 0) throw InsufficientPrecision("pivot row " + std::to_string(r) + " vanished");
            w.swap_columns(p, r);
            for (int j = 0; j < r; ++j)
                if (!w.at(r, j).is_zero()) w.clear_with_column(r, r, j, 0, r + 1);
            pivots[static_cast<std::size_t>(r)] = w.at(r, r).valuation();
        }
    }
    return pivots;
}

std::vector<int> diagonalize_block(Workspace& w, int k, int tracked_rows) {
    std::vector<int> diag(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        int bi = -1, bj = -1;
        for (int i = s; i < k; ++i)
            for (int j = s; j < k; ++j) {
                const LaurentScalar& x = w.at(i, j);
                if (x.is_zero()) continue;
                if (bi < 0 || x.valuation() < w.at(bi, bj).valuation()) bi = i, bj = j;
            }
        if (bi < 0) throw InsufficientPrecision("block vanished at step " + std::to_string(s));
        w.swap_rows(bi, s);
        w.swap_columns(bj, s);
        for (int j = s + 1; j < k; ++j)
            if (!w.at(s, j).is_zero()) w.clear_with_column(s, s, j, s, tracked_rows);
        for (int i = s + 1; i < k; ++i)
            if (!w.at(i, s).is_zero()) w.clear_with_row(s, s, i, s, k);
        diag[static_cast<std::size_t>(s)] = w.at(s, s).valuation();
    }
    return diag;
}

int conductor_bound(const Workspace& w, Orientation orientation) {
    // Solve H x = e_j on valuations only: m[i] bounds val(x_i) from below.
    constexpr int kNone = kInfinitePrecision;
    const int k = w.rows();
    int worst = -kInfinitePrecision;
    std::vector<int> m(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        std::fill(m.begin(), m.end(), kNone);
        m[static_cast<std::size_t>(j)] = -w.at(j, j).valuation();
        auto step = [&](int i, int lo, int hi) {
            int best = kNone;
            for (int l = lo; l < hi; ++l) {
                const int ml = m[static_cast<std::size_t>(l)];
                if (ml == kNone || w.at(i, l).is_zero()) continue;
                best = std::min(best, w.at(i, l).valuation() + ml);
            }
            if (best != kNone) m[static_cast<std::size_t>(i)] = best - w.at(i, i).valuation();
        };
        if (orientation == Orientation::FromTopRow) {
            for (int i = j + 1; i < k; ++i) step(i, j, i);
        } else {
            for (int i = j - 1; i >= 0; --i) step(i, i + 1, j + 1);
        }
        for (int v : m)
            if (v != kNone) worst = std::max(worst, -v);
    }
    return worst;
}

void certify(const Workspace& w, Orientation orientation) {
    const int c = conductor_bound(w, orientation);
    if (c >= w.cutoff())
        throw InsufficientPrecision("lattice conductor " + std::to_string(c) + " not below cutoff " +
                                    std::to_string(w.cutoff()));
}

int working_cutoff(const LoopMatrix& a, int p) { return std::min(p, a.precision()); }

}

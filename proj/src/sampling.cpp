#include <random>

#include "sgo/errors.hpp"
#include "sgo/loopmat.hpp"

namespace sgo {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    // uniform integer in [lo, hi]
    int range(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    int nonzero(int bound) {
        int c = range(-bound, bound - 1);
        return c >= 0 ? c + 1 : c;
    }

    LaurentScalar poly(int lo, int hi, int coeff_range) {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (int e = lo; e <= hi; ++e) c.emplace_back(range(-coeff_range, coeff_range));
        return LaurentScalar::from_dense(lo, std::move(c));
    }

    // unit of O: nonzero constant term plus higher terms
    LaurentScalar unit(int degree, int coeff_range) {
        LaurentScalar u = poly(1, degree, coeff_range);
        u += LaurentScalar(Rational(nonzero(coeff_range)));
        return u;
    }

private:
    std::mt19937_64 rng_;
};

LoopMatrix unipotent(Draw& d, int n, bool upper, int lo, int hi, int coeff_range) {
    LoopMatrix m = LoopMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (upper ? j > i : j < i) m.at(i, j) = TruncatedSeries(d.poly(lo, hi, coeff_range));
    return m;
}

LoopMatrix arc_gl(Draw& d, int n, const GroupPattern& g) {
    LoopMatrix lower = unipotent(d, n, false, 0, g.degree_bound, g.coeff_range);
    LoopMatrix upper = unipotent(d, n, true, 0, g.degree_bound, g.coeff_range);
    LoopMatrix diag(n);
    for (int i = 0; i < n; ++i) diag.at(i, i) = TruncatedSeries(d.unit(g.degree_bound, g.coeff_range));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(d.range(0, i))]);
    LoopMatrix p(n);
    for (int i = 0; i < n; ++i) p.at(i, perm[static_cast<std::size_t>(i)]) = TruncatedSeries(1);
    return p * lower * diag * upper;
}

LoopMatrix uminus(Draw& d, int M, int N, const GroupPattern& g) {
    LoopMatrix m = LoopMatrix::identity(N);
    for (int i = M + 1; i < N; ++i)
        for (int j = 0; j < i; ++j) m.at(i, j) = TruncatedSeries(d.poly(-g.pole_bound, g.degree_bound, g.coeff_range));
    return m;
}

LoopMatrix embed_top_left(const LoopMatrix& g, int N) {
    LoopMatrix m = LoopMatrix::identity(N);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) m.at(i, j) = g.at(i, j);
    return m;
}

}

GroupPattern GroupPattern::arc_gl(int n) {
    GroupPattern g;
    g.tag = Tag::ArcGL;
    g.n = n;
    return g;
}

GroupPattern GroupPattern::h_pattern(int M, int N) {
    GroupPattern g;
    g.tag = Tag::H_pattern;
    g.M = M;
    g.N = N;
    return g;
}

GroupPattern GroupPattern::uminus(int M, int N) {
    GroupPattern g;
    g.tag = Tag::Uminus_MN;
    g.M = M;
    g.N = N;
    return g;
}

GroupPattern GroupPattern::upper_unipotent(int n) {
    GroupPattern g;
    g.tag = Tag::UpperUnipotent;
    g.n = n;
    return g;
}

GroupPattern GroupPattern::lower_unipotent(int n) {
    GroupPattern g;
    g.tag = Tag::LowerUnipotent;
    g.n = n;
    return g;
}

GroupPattern GroupPattern::arc_torus(int n) {
    GroupPattern g;
    g.tag = Tag::ArcTorus;
    g.n = n;
    return g;
}

GroupPattern GroupPattern::dconj_upper_unipotent(int M, int N) {
    GroupPattern g;
    g.tag = Tag::Dconj_UpperUnipotent;
    g.M = M;
    g.N = N;
    return g;
}

int GroupPattern::dimension() const {
    switch (tag) {
        case Tag::H_pattern:
        case Tag::Uminus_MN:
        case Tag::Dconj_UpperUnipotent: return N;
        default: return n;
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over seed xor index
    std::uint64_t z = seed ^ (index * 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

LoopMatrix sample(const GroupPattern& g, std::uint64_t seed) {
    if ((g.tag == GroupPattern::Tag::H_pattern || g.tag == GroupPattern::Tag::Uminus_MN ||
         g.tag == GroupPattern::Tag::Dconj_UpperUnipotent) &&
        (g.M < 1 || g.M >= g.N))
        throw InvalidRank(g.M, g.N);
    Draw d(seed);
    switch (g.tag) {
        case GroupPattern::Tag::ArcGL: return arc_gl(d, g.n, g);
        case GroupPattern::Tag::H_pattern: {
            LoopMatrix top = embed_top_left(arc_gl(d, g.M, g), g.N);
            return top * uminus(d, g.M, g.N, g);
        }
        case GroupPattern::Tag::Uminus_MN: return uminus(d, g.M, g.N, g);
        case GroupPattern::Tag::UpperUnipotent:
            return unipotent(d, g.n, true, -g.pole_bound, g.degree_bound, g.coeff_range);
        case GroupPattern::Tag::LowerUnipotent:
            return unipotent(d, g.n, false, -g.pole_bound, g.degree_bound, g.coeff_range);
        case GroupPattern::Tag::ArcTorus: {
            LoopMatrix m(g.n);
            for (int i = 0; i < g.n; ++i) m.at(i, i) = TruncatedSeries(d.unit(g.degree_bound, g.coeff_range));
            return m;
        }
        case GroupPattern::Tag::Dconj_UpperUnipotent: {
            LoopMatrix dm = LoopMatrix::identity(g.N);
            LoopMatrix dinv = LoopMatrix::identity(g.N);
            for (int j = 0; j < g.M; ++j) {
                dm.at(g.M, j) = TruncatedSeries(1);
                dinv.at(g.M, j) = TruncatedSeries(-1);
            }
            return dm * unipotent(d, g.N, true, -g.pole_bound, g.degree_bound, g.coeff_range) * dinv;
        }
    }
    return {};
}

}

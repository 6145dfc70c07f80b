#ifndef SGO_LOOPMAT_HPP
#define SGO_LOOPMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgo/laurent.hpp"
#include "sgo/precision.hpp"

namespace sgo {

class LoopMatrix {
public:
    LoopMatrix() = default;
    explicit LoopMatrix(int n);
    static LoopMatrix identity(int n);
    static LoopMatrix diag_monomial(const std::vector<int>& exponents);

    int n() const { return n_; }
    TruncatedSeries& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const TruncatedSeries& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    // minimum entry precision
    int precision() const;
    bool is_exact() const { return precision() == kInfinitePrecision; }
    LoopMatrix truncated(int precision) const;
    // smallest entry valuation lower bound (kInfinitePrecision for the zero matrix)
    int min_valuation() const;
    std::string str() const;

    friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
    friend bool operator==(const LoopMatrix& a, const LoopMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const LoopMatrix& a, const LoopMatrix& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<TruncatedSeries> e_;
};

// Product with every entry additionally truncated at the given precision.
LoopMatrix multiply(const LoopMatrix& a, const LoopMatrix& b, int precision);

TruncatedSeries det(const LoopMatrix& a);
TruncatedSeries minor(const LoopMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

// Minimum valuation over all |rows|-minors on the given rows (0-based).
// Infinite when every such minor is exactly zero.
Valuation minor_min_valuation(const LoopMatrix& a, const std::vector<int>& rows,
                              const PrecisionPolicy& policy = {});
Valuation minor_min_valuation_expansion(const LoopMatrix& a, const std::vector<int>& rows);
Valuation minor_min_valuation_elimination(const LoopMatrix& a, const std::vector<int>& rows,
                                          const PrecisionPolicy& policy = {});

LoopMatrix adjugate(const LoopMatrix& a);
LoopMatrix inverse(const LoopMatrix& a, int target_precision = kDefaultPrecision);
bool in_arc_group(const LoopMatrix& a);
bool same_lattice(const LoopMatrix& a, const LoopMatrix& b);

enum class Orientation { FromBottomRow, FromTopRow };

struct HermiteResult {
    std::vector<int> pivots;
    LoopMatrix U;  // unipotent triangular, H = U * diag(t^pivots)
    LoopMatrix H;  // triangular with monomial diagonal, A * GL_n(O) = H * GL_n(O)
};

HermiteResult hermite_reduce(const LoopMatrix& a, Orientation orientation, const PrecisionPolicy& policy = {});
std::vector<int> hermite_pivots(const LoopMatrix& a, Orientation orientation, const PrecisionPolicy& policy = {});
std::vector<int> smith_exponents(const LoopMatrix& a, const PrecisionPolicy& policy = {});

// Sum of residues of the first subdiagonal entries in rows M+2..N (1-based).
Rational chi_residue(const LoopMatrix& a, int M, int N);

struct GroupPattern {
    enum class Tag { ArcGL, H_pattern, Uminus_MN, UpperUnipotent, LowerUnipotent, ArcTorus, Dconj_UpperUnipotent };
    Tag tag = Tag::ArcGL;
    int n = 0;  // dimension for the single-size tags
    int M = 0;
    int N = 0;
    int pole_bound = 2;
    int coeff_range = 3;
    // free entries use exponents in [-pole_bound, degree_bound]
    int degree_bound = 3;

    static GroupPattern arc_gl(int n);
    static GroupPattern h_pattern(int M, int N);
    static GroupPattern uminus(int M, int N);
    static GroupPattern upper_unipotent(int n);
    static GroupPattern lower_unipotent(int n);
    static GroupPattern arc_torus(int n);
    static GroupPattern dconj_upper_unipotent(int M, int N);

    int dimension() const;
};

LoopMatrix sample(const GroupPattern& pattern, std::uint64_t seed);

// seed for the index-th task of a batch
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}

#endif

#ifndef SGO_LATTICE_HPP
#define SGO_LATTICE_HPP

#include <vector>

#include "sgo/loopmat.hpp"

namespace sgo::lattice {

// Working copy of a matrix over F whose entries are kept below a fixed
// exponent `cutoff`. Column operations are right multiplications by GL(O)
// and row operations left multiplications by GL(O); both are done
// fraction-free, so no series is ever inverted.
//
// Dropping terms of exponent >= cutoff replaces a column by one differing by
// a vector of t^cutoff O^n. When t^cutoff O^n lies in t*L for the lattice L
// spanned at the end, Nakayama shows every intermediate lattice equals L, so
// the truncated computation is exact. certify() checks that condition on the
// final triangular form.
class Workspace {
public:
    Workspace(int rows, int cols, int cutoff);
    static Workspace from_matrix(const LoopMatrix& a, int cutoff);
    static Workspace from_rows(const LoopMatrix& a, const std::vector<int>& rows, int cutoff);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int cutoff() const { return cutoff_; }
    LaurentScalar& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const LaurentScalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

    // Kills entry (r, j) using the pivot at (r, p):
    // col_j <- (x_p t^-a) col_j - (x_j t^-a) col_p on rows [r0, r1), a = val(x_p) <= val(x_j).
    void clear_with_column(int r, int p, int j, int r0, int r1);
    // Kills entry (i, c) using the pivot at (p, c), acting on columns [c0, c1).
    void clear_with_row(int c, int p, int i, int c0, int c1);
    void swap_columns(int a, int b);
    void swap_rows(int a, int b);

    // column in [c0, c1) with minimal valuation in row r, lowest index on ties; -1 if none
    int argmin_in_row(int r, int c0, int c1) const;

    LoopMatrix to_matrix(int precision) const;

private:
    int rows_;
    int cols_;
    int cutoff_;
    std::vector<LaurentScalar> e_;

    void remove_column_content(int j, int r0, int r1);
    void remove_row_content(int i, int c0, int c1);
};

// Column-reduces the first rows() rows to triangular shape: lower triangular
// for FromTopRow (pivot of row r moved to column r), upper triangular for
// FromBottomRow. Returns the pivot valuations by row. Throws
// InsufficientPrecision if a pivot row vanishes below the cutoff.
std::vector<int> triangularize(Workspace& w, Orientation orientation);

// Smith-reduces the leading k x k block with row operations among rows [0, k)
// and column operations among columns [0, k); column operations also act on
// rows [k, tracked_rows). Returns the diagonal valuations in position order.
std::vector<int> diagonalize_block(Workspace& w, int k, int tracked_rows);

// Upper bound on the least c with t^c O^k inside the span of the leading
// k x k triangular block.
int conductor_bound(const Workspace& w, Orientation orientation);

// Throws InsufficientPrecision unless the truncation was provably harmless.
void certify(const Workspace& w, Orientation orientation);

// cutoff for a computation at working precision p on input a
int working_cutoff(const LoopMatrix& a, int p);

}

#endif

#ifndef SGO_ZASTAVA_HPP
#define SGO_ZASTAVA_HPP

#include <vector>

#include "sgo/superroots.hpp"

namespace sgo {

// odd coefficients count once, even ones twice
int zastava_dim(const RootVector& n);

struct DimReport {
    int zastava_dim = 0;
    int bound = 0;
    std::vector<SuperWeight> witnesses;
};

// max of sum(a) + sum(b) over w_S <=_G w <= w_O, w - w_S = sum a_i alpha_{i,GL_M} + sum b_j alpha_{j,GL_N}
DimReport intersection_dim_bound(const SuperWeight& w_O, const SuperWeight& w_S);

struct Cor813Result {
    enum class Kind { Even, OddPlusAlpha, Neither };
    Kind kind = Kind::Neither;
    int alpha = 0;  // 1-based odd simple root for OddPlusAlpha
    CompositeCoefficients decomposition;
};

Cor813Result cor813_classify(const SuperWeight& w_O, const SuperWeight& w_S);
const char* kind_name(Cor813Result::Kind k);

// j_seq = (j_1 > ... > j_k), i_seq = (i_1 > ... > i_k) with i_k = 0 and i_1 < -eta'_1
bool prop942_check(const std::vector<int>& eta, int eta_prime_1, const std::vector<int>& j_seq,
                   const std::vector<int>& i_seq, const std::vector<int>& xi);

// Degree inequalities for orbit closures: minimal valuations of the minors
// of the canonical matrix on the row sets {1..i}, {1..i, M+1} and
// {1..M+1+i} can only go up when passing to the closure, and the
// determinant is constant. Written independently of decompose().
bool closure_partial_sums(const SuperWeight& w, const SuperWeight& w_tilde);

}

#endif

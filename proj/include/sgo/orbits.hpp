#ifndef SGO_ORBITS_HPP
#define SGO_ORBITS_HPP

#include <optional>
#include <vector>

#include "sgo/loopmat.hpp"
#include "sgo/superroots.hpp"

namespace sgo {

struct OrbitPoint {
    std::optional<LoopMatrix> grM;
    LoopMatrix grN;
};

// identity with row M+1 equal to (1, ..., 1, 0, ..., 0) in the first M+1 columns
LoopMatrix d_matrix(int M, int N);
LoopMatrix d_matrix_inverse(int M, int N);

LoopMatrix canonical_rep_N(const SuperWeight& w);
OrbitPoint canonical_rep_G(const SuperWeight& w);

// Data of the top-left (M+1)x(M+1) block after the GL_M(O) two-sided
// reduction: diag(t^mu) on top, t^nu in row M+1 and t^top in the corner.
struct PivotConfiguration {
    std::vector<int> mu;
    std::vector<int> nu;
    int top = 0;
};

// The unique dominant (lambda, theta_1..theta_M) in the orbit of the configuration.
std::pair<std::vector<int>, std::vector<int>> normalize_configuration(PivotConfiguration c);

struct ClassificationTrace {
    LoopMatrix stage1;  // column Hermite form, lower triangular
    LoopMatrix stage2;  // block diagonal after clearing the lower-left block
    PivotConfiguration configuration;
    SuperWeight result;
};

SuperWeight classify(const LoopMatrix& a, int M, int N, const PrecisionPolicy& policy = {});
ClassificationTrace classify_traced(const LoopMatrix& a, int M, int N, const PrecisionPolicy& policy = {});
SuperWeight classify(const OrbitPoint& p, int M, int N, const PrecisionPolicy& policy = {});

// (xi, (eta, eta')) with p in the semi-infinite orbit through (t^-xi, D t^(eta, eta'))
SuperWeight semi_infinite_weight(const OrbitPoint& p, int M, int N, const PrecisionPolicy& policy = {});
std::vector<int> semi_infinite_xi(const LoopMatrix& grM, const PrecisionPolicy& policy = {});
std::vector<int> semi_infinite_eta(const LoopMatrix& grN, int M, const PrecisionPolicy& policy = {});

struct StratumData {
    std::vector<int> j_seq;  // j_1 > j_2 > ... > j_k, 1-based columns
    std::vector<int> i_seq;  // i_1 > i_2 > ... > i_k
    std::vector<int> eta;    // diagonal of the reduced block is t^{-eta}
    int eta_prime_1 = 0;     // corner entry is t^{-eta'_1}
};

// For N = M+2: which last-row entries survive clearing by the columns to their right.
StratumData stratum_B(const LoopMatrix& a, const PrecisionPolicy& policy = {});

}

#endif

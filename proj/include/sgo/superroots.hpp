#ifndef SGO_SUPERROOTS_HPP
#define SGO_SUPERROOTS_HPP

#include <optional>
#include <string>
#include <vector>

namespace sgo {

struct SuperWeight {
    int M = 0;
    int N = 0;
    std::vector<int> lambda;       // length M
    std::vector<int> theta;        // length M+1
    std::vector<int> theta_prime;  // length N-M-1

    static SuperWeight zero(int M, int N);
    // from the flat delta-then-epsilon vector of length M+N
    static SuperWeight from_flat(int M, int N, const std::vector<int>& flat);

    std::vector<int> flat() const;
    // theta followed by theta_prime, the GL_N part
    std::vector<int> gl_n_part() const;
    int total() const;
    void validate() const;
    std::string str() const;

    friend bool operator==(const SuperWeight& a, const SuperWeight& b) {
        return a.M == b.M && a.N == b.N && a.lambda == b.lambda && a.theta == b.theta && a.theta_prime == b.theta_prime;
    }
    friend bool operator!=(const SuperWeight& a, const SuperWeight& b) { return !(a == b); }
    friend bool operator<(const SuperWeight& a, const SuperWeight& b);
    SuperWeight operator+(const SuperWeight& b) const;
    SuperWeight operator-(const SuperWeight& b) const;
    SuperWeight operator-() const;
};

struct RootVector {
    int M = 0;
    int N = 0;
    std::vector<int> coeffs;  // over alpha_1 .. alpha_{M+N-1}

    static RootVector zero(int M, int N);
    static RootVector unit(int M, int N, int index);  // 1-based simple root index
    bool is_odd(int index) const { return index <= 2 * M; }
    bool nonnegative() const;
    std::string str() const;

    friend bool operator==(const RootVector& a, const RootVector& b) {
        return a.M == b.M && a.N == b.N && a.coeffs == b.coeffs;
    }
    RootVector operator+(const RootVector& b) const;
    RootVector operator-(const RootVector& b) const;
};

struct SimpleRoot {
    int index;              // 1-based
    bool odd;
    std::vector<int> flat;  // delta block then epsilon block
};

std::vector<SimpleRoot> simple_roots(int M, int N);
// flat weight vector of sum n_i alpha_i
SuperWeight recompose(const RootVector& n);
std::optional<RootVector> decompose(const SuperWeight& w1, const SuperWeight& w2);
bool leq(const SuperWeight& w1, const SuperWeight& w2);
bool leq_G(const SuperWeight& w1, const SuperWeight& w2);

// coefficients of a difference along the composite roots, when they exist
struct CompositeCoefficients {
    std::vector<int> a;  // alpha_{i,GL_M}, i = 1..M-1
    std::vector<int> b;  // alpha_{j,GL_N}, j = 1..N-1
    int total() const;
};
std::optional<CompositeCoefficients> composite_decompose(const SuperWeight& diff);

struct CompositeRoot {
    std::vector<int> flat;
    RootVector simple;
};
struct CompositeRoots {
    std::vector<CompositeRoot> gl_m;
    std::vector<CompositeRoot> gl_n;
};
CompositeRoots composite_roots(int M, int N);
// simple-root coefficients of sum a_i alpha_{i,GL_M} + sum b_j alpha_{j,GL_N}
RootVector composite_to_simple(int M, int N, const CompositeCoefficients& c);

bool condition_a(const SuperWeight& w);
bool condition_b(const SuperWeight& w);
bool is_relevant(const SuperWeight& w);
bool is_hw_dominant(const SuperWeight& w);
// lambda and theta nondecreasing: the weights labelling H-orbits on Gr_N
bool is_orbit_label(const SuperWeight& w);

SuperWeight rho_circ(int M, int N);
int pairing(const SuperWeight& r, const SuperWeight& w);
// <(lambda°, theta°), (lambda, theta)>, the orbit dimension
int orbit_dimension(const SuperWeight& w);

void check_rank(int M, int N);

// every weight with entries in [-box, box], lexicographic in (lambda, theta, theta')
std::vector<SuperWeight> weight_box(int M, int N, int box);
std::vector<SuperWeight> orbit_label_box(int M, int N, int box);

}

#endif

#ifndef SGO_CONFIG_HPP
#define SGO_CONFIG_HPP

#include <map>
#include <set>
#include <string>

#include "sgo/superroots.hpp"

namespace sgo {

inline const std::string kMarkedPoint = "c";

// Colored divisor on a curve with marked point c: coefficients away from c
// lie in the negative root cone, the coefficient at c is arbitrary.
class ColoredDivisor {
public:
    ColoredDivisor(int M, int N);

    int M() const { return M_; }
    int N() const { return N_; }
    // zero coefficients are dropped; throws InvariantViolation off the negative cone
    void set(const std::string& point, const SuperWeight& coeff);
    const std::map<std::string, SuperWeight>& points() const { return points_; }
    bool empty() const { return points_.empty(); }

    SuperWeight degree() const;
    std::set<std::string> support() const;

private:
    int M_;
    int N_;
    std::map<std::string, SuperWeight> points_;
};

ColoredDivisor add(const ColoredDivisor& a, const ColoredDivisor& b);

// every unmarked coefficient is a single negative simple root
bool is_open_stratum(const ColoredDivisor& d);

// index i in {M+2, .., N} carried by the stored theta' entry s in {1, .., N-M-1}
int eta_prime_index(int M, int s);

int line_bundle_exponent(const SuperWeight& coeff);
std::map<std::string, int> line_bundle_exponents(const ColoredDivisor& d);

enum class StalkParity { Constant, Sign };
// alpha must be a multiple of one simple root
StalkParity stalk_parity(const RootVector& alpha);

bool factorization_exponent_check(const ColoredDivisor& a, const ColoredDivisor& b);

}

#endif

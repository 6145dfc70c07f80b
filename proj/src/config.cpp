#include "sgo/config.hpp"

#include <algorithm>

#include "sgo/errors.hpp"

namespace sgo {

namespace {

bool is_zero(const SuperWeight& w) { return w == SuperWeight::zero(w.M, w.N); }

}

ColoredDivisor::ColoredDivisor(int M, int N) : M_(M), N_(N) { check_rank(M, N); }

void ColoredDivisor::set(const std::string& point, const SuperWeight& coeff) {
    if (coeff.M != M_ || coeff.N != N_) throw RankMismatch();
    coeff.validate();
    if (point != kMarkedPoint && !leq(coeff, SuperWeight::zero(M_, N_)))
        throw InvariantViolation("coefficient at " + point + " is not in the negative root cone");
    if (is_zero(coeff))
        points_.erase(point);
    else
        points_[point] = coeff;
}

SuperWeight ColoredDivisor::degree() const {
    SuperWeight s = SuperWeight::zero(M_, N_);
    for (const auto& [x, w] : points_) s = s + w;
    return s;
}

std::set<std::string> ColoredDivisor::support() const {
    std::set<std::string> s;
    for (const auto& [x, w] : points_) s.insert(x);
    return s;
}

ColoredDivisor add(const ColoredDivisor& a, const ColoredDivisor& b) {
    if (a.M() != b.M() || a.N() != b.N()) throw RankMismatch();
    ColoredDivisor out = a;
    for (const auto& [x, w] : b.points()) {
        const auto it = a.points().find(x);
        out.set(x, it == a.points().end() ? w : it->second + w);
    }
    return out;
}

bool is_open_stratum(const ColoredDivisor& d) {
    const auto roots = simple_roots(d.M(), d.N());
    for (const auto& [x, w] : d.points()) {
        if (x == kMarkedPoint) continue;
        const auto flat = w.flat();
        const bool single = std::any_of(roots.begin(), roots.end(), [&](const SimpleRoot& r) {
            for (std::size_t k = 0; k < flat.size(); ++k)
                if (flat[k] != -r.flat[k]) return false;
            return true;
        });
        if (!single) return false;
    }
    return true;
}

int eta_prime_index(int M, int s) { return s + M + 1; }

int line_bundle_exponent(const SuperWeight& w) {
    long long twice = 0;
    for (int x : w.lambda) twice += -static_cast<long long>(x) * (x - 1);
    for (int x : w.theta) twice += static_cast<long long>(x) * (x + 1);
    for (std::size_t s = 0; s < w.theta_prime.size(); ++s) {
        const long long x = w.theta_prime[s];
        const int i = eta_prime_index(w.M, static_cast<int>(s) + 1);
        twice += x * (x + 2 * (i - w.M - 1) + 1);
    }
    return static_cast<int>(twice / 2);
}

std::map<std::string, int> line_bundle_exponents(const ColoredDivisor& d) {
    std::map<std::string, int> out;
    for (const auto& [x, w] : d.points()) out[x] = line_bundle_exponent(w);
    return out;
}

StalkParity stalk_parity(const RootVector& alpha) {
    int index = 0;
    for (std::size_t i = 0; i < alpha.coeffs.size(); ++i) {
        if (alpha.coeffs[i] == 0) continue;
        if (index != 0) throw MixedSupport();
        index = static_cast<int>(i) + 1;
    }
    if (index == 0) throw MixedSupport();
    return alpha.is_odd(index) ? StalkParity::Constant : StalkParity::Sign;
}

bool factorization_exponent_check(const ColoredDivisor& a, const ColoredDivisor& b) {
    for (const auto& [x, w] : a.points())
        if (b.points().count(x)) throw OverlappingSupport();
    std::map<std::string, int> expected = line_bundle_exponents(a);
    for (const auto& [x, e] : line_bundle_exponents(b)) expected[x] = e;
    return line_bundle_exponents(add(a, b)) == expected;
}

}

#include <doctest.h>

#include "sgo/config.hpp"
#include "sgo/errors.hpp"

using namespace sgo;

namespace {

SuperWeight neg_alpha(int M, int N, int i) { return -recompose(RootVector::unit(M, N, i)); }

ColoredDivisor at(int M, int N, std::vector<std::pair<std::string, SuperWeight>> pts) {
    ColoredDivisor d(M, N);
    for (auto& [x, w] : pts) d.set(x, w);
    return d;
}

}

TEST_CASE("divisor coefficients") {
    ColoredDivisor d(1, 3);
    d.set("x", neg_alpha(1, 3, 1));
    d.set("y", SuperWeight::zero(1, 3));
    CHECK(d.support() == std::set<std::string>{"x"});
    CHECK_THROWS_AS(d.set("z", recompose(RootVector::unit(1, 3, 2))), InvariantViolation);
    SuperWeight anything = SuperWeight::zero(1, 3);
    anything.theta = {5, -2};
    CHECK_NOTHROW(d.set(kMarkedPoint, anything));
    CHECK(d.degree() == anything + neg_alpha(1, 3, 1));
}

TEST_CASE("add") {
    const ColoredDivisor a = at(2, 4, {{"x", neg_alpha(2, 4, 1)}, {"y", neg_alpha(2, 4, 5)}});
    const ColoredDivisor b = at(2, 4, {{"z", neg_alpha(2, 4, 3) + neg_alpha(2, 4, 4)}});
    const ColoredDivisor e(2, 4);
    CHECK(add(a, e).points() == a.points());
    const ColoredDivisor s = add(a, b);
    CHECK(s.degree() == a.degree() + b.degree());
    CHECK(s.support() == std::set<std::string>{"x", "y", "z"});
    CHECK(add(a, b).points() == add(b, a).points());
    CHECK(add(add(a, b), a).points() == add(a, add(b, a)).points());
    CHECK(add(a, a).points().at("x") == neg_alpha(2, 4, 1) + neg_alpha(2, 4, 1));
}

TEST_CASE("open stratum") {
    CHECK(is_open_stratum(at(1, 3, {{"x", neg_alpha(1, 3, 1)}})));
    CHECK_FALSE(is_open_stratum(at(1, 3, {{"x", neg_alpha(1, 3, 1) + neg_alpha(1, 3, 2)}})));
    CHECK(is_open_stratum(at(1, 3, {{"x", neg_alpha(1, 3, 1)}, {"y", neg_alpha(1, 3, 1)}})));
}

TEST_CASE("line bundle exponents") {
    CHECK(eta_prime_index(1, 1) == 3);
    CHECK(eta_prime_index(2, 2) == 5);
    CHECK(line_bundle_exponents(at(1, 2, {{"x", neg_alpha(1, 2, 1)}})) == std::map<std::string, int>{{"x", 0}});
    const SuperWeight a3 = neg_alpha(1, 3, 3);
    CHECK(a3.theta == std::vector<int>{0, 1});
    CHECK(a3.theta_prime == std::vector<int>{-1});
    CHECK(line_bundle_exponent(a3) == 0);
    SuperWeight c = SuperWeight::zero(1, 3);
    c.theta[0] = 1;
    CHECK(line_bundle_exponents(at(1, 3, {{kMarkedPoint, c}})) == std::map<std::string, int>{{"c", 1}});
    for (int N = 2; N <= 6; ++N)
        for (int M = 1; M < N; ++M)
            for (int i = 1; i < M + N; ++i) CHECK(line_bundle_exponent(neg_alpha(M, N, i)) == 0);
}

TEST_CASE("stalk parity") {
    RootVector n = RootVector::zero(2, 4);
    n.coeffs[0] = 4;
    CHECK(stalk_parity(n) == StalkParity::Constant);
    n = RootVector::zero(2, 4);
    n.coeffs[4] = 2;
    CHECK(stalk_parity(n) == StalkParity::Sign);
    n.coeffs[1] = 1;
    CHECK_THROWS_AS(stalk_parity(n), MixedSupport);
    CHECK_THROWS_AS(stalk_parity(RootVector::zero(2, 4)), MixedSupport);
}

TEST_CASE("factorization of exponents") {
    const ColoredDivisor a = at(1, 3, {{"x", neg_alpha(1, 3, 2) + neg_alpha(1, 3, 3)}});
    SuperWeight c = SuperWeight::zero(1, 3);
    c.lambda = {2};
    c.theta_prime = {-3};
    const ColoredDivisor b = at(1, 3, {{kMarkedPoint, c}, {"y", neg_alpha(1, 3, 3) + neg_alpha(1, 3, 3)}});
    CHECK(factorization_exponent_check(a, b));
    CHECK(factorization_exponent_check(a, ColoredDivisor(1, 3)));
    CHECK_THROWS_AS(factorization_exponent_check(a, a), OverlappingSupport);
    // colliding points break additivity
    const SuperWeight w = neg_alpha(1, 3, 3);
    CHECK(line_bundle_exponent(w + w) != 2 * line_bundle_exponent(w));
}

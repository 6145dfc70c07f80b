#ifndef SGO_LAURENT_HPP
#define SGO_LAURENT_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sgo/rational.hpp"

namespace sgo {

inline constexpr int kInfinitePrecision = std::numeric_limits<int>::max();

// saturating sum for precisions and valuations
inline int padd(int a, int b) {
    if (a == kInfinitePrecision || b == kInfinitePrecision) return kInfinitePrecision;
    long long s = static_cast<long long>(a) + b;
    if (s >= kInfinitePrecision) return kInfinitePrecision;
    if (s <= -kInfinitePrecision) return -kInfinitePrecision;
    return static_cast<int>(s);
}

struct Valuation {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Infinite;
    int value = 0;  // the valuation, or the precision bound when Unknown

    static Valuation finite(int v) { return {Kind::Finite, v}; }
    static Valuation infinite() { return {Kind::Infinite, 0}; }
    static Valuation unknown(int p) { return {Kind::Unknown, p}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_unknown() const { return kind == Kind::Unknown; }
    // best lower bound on the true valuation
    int lower_bound() const { return kind == Kind::Infinite ? kInfinitePrecision : value; }
    std::string str() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.kind == b.kind && (a.kind == Kind::Infinite || a.value == b.value);
    }
};

// Laurent polynomial with rational coefficients, stored densely between its
// lowest and highest nonzero exponent.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
    static LaurentScalar monomial(const Rational& c, int e);
    static LaurentScalar from_terms(const std::vector<std::pair<int, Rational>>& terms);
    static LaurentScalar from_dense(int low, std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    int valuation() const { return low_; }  // meaningless for zero
    int low() const { return low_; }
    int end() const { return low_ + static_cast<int>(c_.size()); }
    std::size_t size() const { return c_.size(); }
    const std::vector<Rational>& dense() const { return c_; }
    const Rational& coeff(int e) const;
    const Rational& leading() const { return c_.front(); }
    std::vector<std::pair<int, Rational>> terms() const;
    bool all_integer() const;

    LaurentScalar shifted(int k) const;
    void shift(int k) {
        if (!c_.empty()) low_ += k;
    }
    void truncate(int cutoff);
    LaurentScalar truncated(int cutoff) const;
    LaurentScalar scaled(const Rational& s) const;
    std::string str() const;

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& b);
    LaurentScalar& operator-=(const LaurentScalar& b);
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
    }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

    // product keeping only exponents below cutoff
    static LaurentScalar mul_trunc(const LaurentScalar& a, const LaurentScalar& b, int cutoff);
    // a*x - b*y keeping only exponents below cutoff
    static LaurentScalar mul_sub_trunc(const LaurentScalar& a, const LaurentScalar& x, const LaurentScalar& b,
                                       const LaurentScalar& y, int cutoff);

private:
    int low_ = 0;
    std::vector<Rational> c_;

    void normalize();
};

// A Laurent polynomial known modulo t^precision.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(LaurentScalar p, int precision = kInfinitePrecision);  // NOLINT(google-explicit-constructor)
    TruncatedSeries(const Rational& c);                                     // NOLINT(google-explicit-constructor)
    TruncatedSeries(long long c) : TruncatedSeries(Rational(c)) {}         // NOLINT(google-explicit-constructor)
    static TruncatedSeries monomial(const Rational& c, int e, int precision = kInfinitePrecision);
    static TruncatedSeries zero(int precision = kInfinitePrecision);

    const LaurentScalar& poly() const { return poly_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ == kInfinitePrecision; }
    bool is_exact_zero() const { return is_exact() && poly_.is_zero(); }
    Valuation val() const;
    const Rational& coeff(int e) const;

    TruncatedSeries truncated(int precision) const;
    TruncatedSeries shifted(int k) const;
    TruncatedSeries scaled(const Rational& s) const;
    std::string str() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& b);
    TruncatedSeries& operator-=(const TruncatedSeries& b);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.prec_ == b.prec_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    LaurentScalar poly_;
    int prec_ = kInfinitePrecision;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
Valuation val(const TruncatedSeries& a);
// b with a*b = 1 modulo t^R, R = min(target_precision, P_a - val(a)); exact when a is an exact monomial
TruncatedSeries invert(const TruncatedSeries& a, int target_precision);
Rational residue(const TruncatedSeries& a);

// Series inverse of a polynomial with nonzero constant term, first `terms` coefficients.
LaurentScalar unit_inverse(const LaurentScalar& u, int terms);

}

#endif

#include "sgo/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "sgo/errors.hpp"

namespace sgo {

namespace {

const Rational& zero_rational() {
    static const Rational z;
    return z;
}

}

std::string Valuation::str() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "inf";
        case Kind::Unknown: return "unknown(" + std::to_string(value) + ")";
    }
    return "";
}

LaurentScalar::LaurentScalar(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

LaurentScalar LaurentScalar::monomial(const Rational& c, int e) {
    LaurentScalar r(c);
    r.low_ = c.is_zero() ? 0 : e;
    return r;
}

LaurentScalar LaurentScalar::from_terms(const std::vector<std::pair<int, Rational>>& terms) {
    LaurentScalar r;
    if (terms.empty()) return r;
    int lo = terms.front().first, hi = terms.front().first;
    for (const auto& [e, c] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    r.low_ = lo;
    r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Rational());
    for (const auto& [e, c] : terms) r.c_[static_cast<std::size_t>(e - lo)] += c;
    r.normalize();
    return r;
}

LaurentScalar LaurentScalar::from_dense(int low, std::vector<Rational> coeffs) {
    LaurentScalar r;
    r.low_ = low;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
}

void LaurentScalar::normalize() {
    std::size_t first = 0;
    while (first < c_.size() && c_[first].is_zero()) ++first;
    if (first == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = c_.size();
    while (c_[last - 1].is_zero()) --last;
    if (first > 0 || last < c_.size()) {
        c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(last), c_.end());
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
        low_ += static_cast<int>(first);
    }
}

const Rational& LaurentScalar::coeff(int e) const {
    if (e < low_ || e >= end()) return zero_rational();
    return c_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, Rational>> LaurentScalar::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
    }
    return out;
}

bool LaurentScalar::all_integer() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

LaurentScalar LaurentScalar::shifted(int k) const {
    LaurentScalar r(*this);
    r.shift(k);
    return r;
}

void LaurentScalar::truncate(int cutoff) {
    if (c_.empty() || cutoff >= end()) return;
    if (cutoff <= low_) {
        c_.clear();
        low_ = 0;
        return;
    }
    c_.resize(static_cast<std::size_t>(cutoff - low_));
    normalize();
}

LaurentScalar LaurentScalar::truncated(int cutoff) const {
    LaurentScalar r(*this);
    r.truncate(cutoff);
    return r;
}

LaurentScalar LaurentScalar::scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    LaurentScalar r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::string LaurentScalar::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        int e = low_ + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c_[i].str();
        } else {
            if (!c_[i].is_one()) os << c_[i].str() << "*";
            os << "t^" << e;
        }
    }
    return os.str();
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& b) {
    if (b.c_.empty()) return *this;
    if (c_.empty()) return *this = b;
    int lo = std::min(low_, b.low_);
    int hi = std::max(end(), b.end());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational());
        low_ = lo;
    }
    if (hi > end()) c_.resize(static_cast<std::size_t>(hi - low_));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[static_cast<std::size_t>(b.low_ - low_) + i] += b.c_[i];
    normalize();
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& b) {
    if (b.c_.empty()) return *this;
    return *this += -b;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    return LaurentScalar::mul_trunc(a, b, kInfinitePrecision);
}

LaurentScalar LaurentScalar::mul_trunc(const LaurentScalar& a, const LaurentScalar& b, int cutoff) {
    LaurentScalar r;
    if (a.c_.empty() || b.c_.empty()) return r;
    long long lo = static_cast<long long>(a.low_) + b.low_;
    if (lo >= cutoff) return r;
    long long len = static_cast<long long>(a.c_.size() + b.c_.size()) - 1;
    len = std::min(len, static_cast<long long>(cutoff) - lo);
    r.low_ = static_cast<int>(lo);
    r.c_.assign(static_cast<std::size_t>(len), Rational());
    const std::size_t n = static_cast<std::size_t>(len);
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        const std::size_t jmax = std::min(b.c_.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
    }
    r.normalize();
    return r;
}

LaurentScalar LaurentScalar::mul_sub_trunc(const LaurentScalar& a, const LaurentScalar& x, const LaurentScalar& b,
                                           const LaurentScalar& y, int cutoff) {
    const bool ax = !a.c_.empty() && !x.c_.empty();
    const bool by = !b.c_.empty() && !y.c_.empty();
    if (!by) return mul_trunc(a, x, cutoff);
    if (!ax) return -mul_trunc(b, y, cutoff);
    long long lo1 = static_cast<long long>(a.low_) + x.low_;
    long long lo2 = static_cast<long long>(b.low_) + y.low_;
    long long hi1 = lo1 + static_cast<long long>(a.c_.size() + x.c_.size()) - 1;
    long long hi2 = lo2 + static_cast<long long>(b.c_.size() + y.c_.size()) - 1;
    long long lo = std::min(lo1, lo2);
    long long hi = std::min(std::max(hi1, hi2), static_cast<long long>(cutoff));
    LaurentScalar r;
    if (lo >= hi) return r;
    r.low_ = static_cast<int>(lo);
    r.c_.assign(static_cast<std::size_t>(hi - lo), Rational());
    const long long n = hi - lo;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        long long base = lo1 - lo + static_cast<long long>(i);
        if (base >= n) break;
        const std::size_t jmax = std::min(x.c_.size(), static_cast<std::size_t>(n - base));
        for (std::size_t j = 0; j < jmax; ++j) r.c_[static_cast<std::size_t>(base) + j].add_mul(a.c_[i], x.c_[j]);
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        if (b.c_[i].is_zero()) continue;
        long long base = lo2 - lo + static_cast<long long>(i);
        if (base >= n) break;
        const std::size_t jmax = std::min(y.c_.size(), static_cast<std::size_t>(n - base));
        for (std::size_t j = 0; j < jmax; ++j) r.c_[static_cast<std::size_t>(base) + j].sub_mul(b.c_[i], y.c_[j]);
    }
    r.normalize();
    return r;
}

LaurentScalar unit_inverse(const LaurentScalar& u, int terms) {
    if (u.is_zero() || u.low() != 0) throw InsufficientPrecision("unit inverse of a non-unit");
    if (terms <= 0) return {};
    std::vector<Rational> b(static_cast<std::size_t>(terms));
    const auto& c = u.dense();
    const Rational inv0 = Rational(1) / c[0];
    b[0] = inv0;
    for (std::size_t k = 1; k < b.size(); ++k) {
        Rational s;
        const std::size_t jmax = std::min(k, c.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) s.add_mul(c[j], b[k - j]);
        b[k] = -(s * inv0);
    }
    return LaurentScalar::from_dense(0, std::move(b));
}

TruncatedSeries::TruncatedSeries(LaurentScalar p, int precision) : poly_(std::move(p)), prec_(precision) {
    if (prec_ != kInfinitePrecision) poly_.truncate(prec_);
}

TruncatedSeries::TruncatedSeries(const Rational& c) : poly_(c) {}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int e, int precision) {
    return {LaurentScalar::monomial(c, e), precision};
}

TruncatedSeries TruncatedSeries::zero(int precision) { return {LaurentScalar(), precision}; }

Valuation TruncatedSeries::val() const {
    if (!poly_.is_zero()) return Valuation::finite(poly_.valuation());
    if (is_exact()) return Valuation::infinite();
    return Valuation::unknown(prec_);
}

const Rational& TruncatedSeries::coeff(int e) const {
    if (e >= prec_) throw InsufficientPrecision("coefficient of t^" + std::to_string(e) + " beyond t^" + std::to_string(prec_));
    return poly_.coeff(e);
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    return {poly_, std::min(precision, prec_)};
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries r(*this);
    r.poly_.shift(k);
    r.prec_ = padd(prec_, k);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    return {poly_.scaled(s), prec_};
}

std::string TruncatedSeries::str() const {
    if (is_exact()) return poly_.str();
    return poly_.str() + " + O(t^" + std::to_string(prec_) + ")";
}

TruncatedSeries TruncatedSeries::operator-() const { return {-poly_, prec_}; }

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& b) {
    prec_ = std::min(prec_, b.prec_);
    poly_ += b.poly_;
    poly_.truncate(prec_);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& b) {
    prec_ = std::min(prec_, b.prec_);
    poly_ -= b.poly_;
    poly_.truncate(prec_);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return {};
    const int va = a.val().lower_bound();
    const int vb = b.val().lower_bound();
    const int p = std::min(padd(va, b.prec_), padd(vb, a.prec_));
    return {LaurentScalar::mul_trunc(a.poly_, b.poly_, p), p};
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

Valuation val(const TruncatedSeries& a) { return a.val(); }

TruncatedSeries invert(const TruncatedSeries& a, int target_precision) {
    if (a.is_exact_zero()) throw ZeroDivisor();
    const Valuation v = a.val();
    if (v.is_unknown()) throw InsufficientPrecision("inverting a series of unknown valuation");
    const int e = v.value;
    if (a.is_exact() && a.poly().is_monomial()) {
        return TruncatedSeries::monomial(Rational(1) / a.poly().leading(), -e);
    }
    const int rel = std::min(target_precision, padd(a.precision(), -e));
    if (rel == kInfinitePrecision) throw InsufficientPrecision("inverse of a non-monomial needs a finite target");
    LaurentScalar inv = unit_inverse(a.poly().shifted(-e), rel);
    inv.shift(-e);
    return {std::move(inv), -e + rel};
}

Rational residue(const TruncatedSeries& a) {
    if (a.precision() <= -1) throw InsufficientPrecision("residue needs precision above -1");
    return a.poly().coeff(-1);
}

}

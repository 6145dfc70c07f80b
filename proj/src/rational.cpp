#include "sgo/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "sgo/errors.hpp"

namespace sgo {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z.get_si() != kMin;
}

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
    mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    return q;
}

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out) && out != kMin;
}

bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_add_overflow(a, b, &out) && out != kMin;
}

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

}

Rational::Rational(long long n) {
    if (n == kMin) {
        big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(n)));
    } else {
        n_ = n;
    }
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw ZeroDivisor();
    if (n == kMin || d == kMin) {
        assign(small_to_mpq(n, 1) / small_to_mpq(d, 1));
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    assign_small(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign(std::move(c));
}

Rational::Rational(const Rational& other) : n_(other.n_), d_(other.d_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    n_ = other.n_;
    d_ = other.d_;
    if (other.big_) {
        if (big_) {
            *big_ = *other.big_;
        } else {
            big_ = std::make_unique<mpq_class>(*other.big_);
        }
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_small(std::int64_t n, std::int64_t d) {
    big_.reset();
    if (n == 0) {
        n_ = 0;
        d_ = 1;
        return;
    }
    if (d != 1) {
        std::int64_t g = std::gcd(iabs(n), d);
        n /= g;
        d /= g;
    }
    n_ = n;
    d_ = d;
}

void Rational::assign(mpq_class&& q) {
    if (fits(q.get_num()) && fits(q.get_den())) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    n_ = 0;
    d_ = 1;
    if (big_) {
        *big_ = std::move(q);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

bool Rational::is_integer() const {
    if (!big_) return d_ == 1;
    return big_->get_den() == 1;
}

int Rational::sign() const {
    if (!big_) return (n_ > 0) - (n_ < 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return small_to_mpq(n_, d_);
}

std::string Rational::str() const {
    if (!big_) return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
    return big_->get_str();
}

std::string Rational::numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(n_);
}

std::string Rational::denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(d_);
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    mpz_class p, q;
    if (p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0) throw ParseError("bad rational " + num + "/" + den);
    if (q == 0) throw ZeroDivisor();
    return Rational(mpq_class(p, q));
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else {
        r.n_ = -r.n_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& b) {
    if (!big_ && !b.big_) {
        std::int64_t out;
        if (d_ == 1 && b.d_ == 1) {
            if (checked_add(n_, b.n_, out)) {
                n_ = out;
                return *this;
            }
        } else {
            std::int64_t g = std::gcd(d_, b.d_);
            std::int64_t x, y, num, den;
            if (checked_mul(n_, b.d_ / g, x) && checked_mul(b.n_, d_ / g, y) && checked_add(x, y, num) &&
                checked_mul(d_, b.d_ / g, den)) {
                assign_small(num, den);
                return *this;
            }
        }
    }
    if (b.is_zero()) return *this;
    assign(to_mpq() + b.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& b) {
    if (!b.big_) {
        Rational nb;
        nb.n_ = -b.n_;
        nb.d_ = b.d_;
        return *this += nb;
    }
    assign(to_mpq() - b.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& b) {
    if (!big_ && !b.big_) {
        std::int64_t out;
        if (d_ == 1 && b.d_ == 1) {
            if (checked_mul(n_, b.n_, out)) {
                n_ = out;
                return *this;
            }
        } else {
            std::int64_t g1 = std::gcd(iabs(n_), b.d_);
            std::int64_t g2 = std::gcd(iabs(b.n_), d_);
            if (g1 == 0) g1 = 1;
            if (g2 == 0) g2 = 1;
            std::int64_t num, den;
            if (checked_mul(n_ / g1, b.n_ / g2, num) && checked_mul(d_ / g2, b.d_ / g1, den)) {
                assign_small(num, den);
                return *this;
            }
        }
    }
    assign(to_mpq() * b.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& b) {
    if (b.is_zero()) throw ZeroDivisor();
    if (!b.big_) {
        Rational inv;
        inv.n_ = b.n_ < 0 ? -b.d_ : b.d_;
        inv.d_ = b.n_ < 0 ? -b.n_ : b.n_;
        return *this *= inv;
    }
    assign(to_mpq() / b.to_mpq());
    return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        std::int64_t p, s;
        if (checked_mul(a.n_, b.n_, p) && checked_add(n_, p, s)) {
            n_ = s;
            return;
        }
    }
    if (a.is_zero() || b.is_zero()) return;
    Rational p(a);
    p *= b;
    *this += p;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        std::int64_t p, s;
        if (checked_mul(a.n_, b.n_, p) && !__builtin_sub_overflow(n_, p, &s) && s != kMin) {
            n_ = s;
            return;
        }
    }
    if (a.is_zero() || b.is_zero()) return;
    Rational p(a);
    p *= b;
    *this -= p;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_ && a.d_ == 1 && b.d_ == 1) return a.n_ < b.n_;
    return a.to_mpq() < b.to_mpq();
}

}

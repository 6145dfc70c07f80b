#ifndef SGO_RATIONAL_HPP
#define SGO_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace sgo {

// Exact rational number. Values whose numerator and denominator fit in int64
// stay inline; anything larger is held as a GMP rational and demoted again as
// soon as it fits.
class Rational {
public:
    Rational() noexcept = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    bool is_zero() const noexcept { return !big_ && n_ == 0; }
    bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    bool is_small() const noexcept { return !big_; }
    int sign() const;
    bool as_small_integer(std::int64_t& out) const {
        if (big_ || d_ != 1) return false;
        out = n_;
        return true;
    }

    mpq_class to_mpq() const;
    std::string str() const;
    std::string numerator_str() const;
    std::string denominator_str() const;
    static Rational from_strings(const std::string& num, const std::string& den);

    Rational operator-() const;
    Rational& operator+=(const Rational& b);
    Rational& operator-=(const Rational& b);
    Rational& operator*=(const Rational& b);
    Rational& operator/=(const Rational& b);

    // *this += a * b (and -=), the inner step of every convolution
    void add_mul(const Rational& a, const Rational& b);
    void sub_mul(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

private:
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;

    void assign(mpq_class&& q);
    void assign_small(std::int64_t n, std::int64_t d);
};

}

#endif

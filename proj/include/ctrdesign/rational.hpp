#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ctrdesign {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. All arithmetic is exact; there is no rounding
/// anywhere in this type. Backed by GMP.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);

    /// Parses "p", "p/q", or a decimal string such as "0.79" or "2.5e-3".
    /// Decimals convert exactly via power-of-ten denominators.
    static Rational parse(std::string_view text);

    /// Renders as "p" when the denominator is 1, otherwise "p/q".
    /// parse(str()) round-trips exactly.
    std::string str() const;

    /// Fixed-point decimal approximation, rounded to `digits` places.
    std::string decimal(int digits = 12) const;

    double to_double() const { return v_.get_d(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sgn() == 0; }

    Rational abs() const;
    /// Integer power; exponent may be negative (base must be nonzero then).
    Rational pow(long e) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;  // invariant: canonical form
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ctrdesign

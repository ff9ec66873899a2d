#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace domset {

enum class Rounding {
  HalfAwayFromZero,  // display rounding
  Ceiling,           // safe for upper bounds
  Floor,
};

// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "num/den" or a plain integer string.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }

  // Largest integer not exceeding the value.
  mpz_class floor() const;

  double to_double() const { return value_.get_d(); }

  // "num/den", denominator always spelled out ("0/1", "7766/1", "2175/2").
  std::string str() const;

  // Fixed-point decimal with exactly `digits` fractional digits.
  std::string decimal(int digits, Rounding mode = Rounding::HalfAwayFromZero) const;

  const mpq_class& raw() const { return value_; }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& y) { value_ += y.value_; return *this; }
  Rational& operator-=(const Rational& y) { value_ -= y.value_; return *this; }
  Rational& operator*=(const Rational& y) { value_ *= y.value_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Rounds a finite double to `digits` fractional digits, half away from zero.
std::string format_real(double x, int digits);

}  // namespace domset

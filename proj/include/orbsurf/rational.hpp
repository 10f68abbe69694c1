#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "orbsurf/errors.hpp"

namespace orbsurf {

// Exact rational scalar. All lattice quantities are carried by this type;
// there is no floating-point mode anywhere in the library.
//
// Canonical form (reduced, positive denominator) is maintained by GMP after
// every operation. The textual grammar is `[-]digits[/digits]` with the
// denominator omitted when it equals 1; `str()` always emits that canonical
// form and `parse(str(x)) == x`.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Strict parser for the canonical grammar. Accepts unreduced input
  // ("2/4" loads as 1/2) but rejects anything else: signs in the
  // denominator, whitespace, empty digit runs, zero denominators.
  static Rational parse(const std::string& text);

  std::string str() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Value as a machine integer; requires is_integer() and range fit.
  long to_long() const;

  // floor(p/q) as a machine integer; requires range fit.
  long floor_long() const;

  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ + y.v_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ - y.v_));
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ * y.v_));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(x.v_ / y.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& y) {
    v_ += y.v_;
    return *this;
  }
  Rational& operator-=(const Rational& y) {
    v_ -= y.v_;
    return *this;
  }
  Rational& operator*=(const Rational& y) {
    v_ *= y.v_;
    return *this;
  }
  Rational& operator/=(const Rational& y) {
    if (y.is_zero()) throw Error("rational division by zero");
    v_ /= y.v_;
    return *this;
  }

  friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) == 0; }
  friend bool operator!=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) != 0; }
  friend bool operator<(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) < 0; }
  friend bool operator<=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) <= 0; }
  friend bool operator>(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) > 0; }
  friend bool operator>=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class v_;
};

Rational abs(const Rational& x);

}  // namespace orbsurf

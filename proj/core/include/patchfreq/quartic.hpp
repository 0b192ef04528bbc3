#pragma once

#include "patchfreq/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace patchfreq {

class GoldenExact;

// Element of K = Q[x]/(x^4 - 5x^2 + 5) in the real embedding
// x = 2 cos(pi/10) ~ 1.9021130325903.  K contains Q(sqrt5) via
// sqrt5 = 2x^2 - 5 and every cos/sin of a multiple of pi/10, so all
// plane coordinates of both projections live here.
class QuarticReal {
 public:
  QuarticReal() : c_{} {}
  explicit QuarticReal(Rational c0) : c_{std::move(c0), {}, {}, {}} {}
  QuarticReal(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
  QuarticReal(long long v) : c_{Rational(v), {}, {}, {}} {}  // NOLINT(implicit)

  static QuarticReal x() { return QuarticReal(0, 1, 0, 0); }
  static QuarticReal sqrt5() { return QuarticReal(-5, 0, 2, 0); }
  static QuarticReal tau() { return QuarticReal(-2, 0, 1, 0); }  // x^2 - 2
  // cos/sin of the primitive angles; everything else is sign flips of these.
  static QuarticReal cos36() { return QuarticReal(-1, 0, Rational(1, 2), 0); }
  static QuarticReal sin36() { return QuarticReal(0, Rational(-3, 2), 0, Rational(1, 2)); }
  static QuarticReal cos72() { return QuarticReal(Rational(-3, 2), 0, Rational(1, 2), 0); }
  static QuarticReal sin72() { return QuarticReal(0, Rational(1, 2), 0, 0); }

  const Rational& coeff(int i) const { return c_[i]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  QuarticReal operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  QuarticReal operator+(const QuarticReal& o) const {
    return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
  }
  QuarticReal operator-(const QuarticReal& o) const {
    return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
  }
  QuarticReal operator*(const QuarticReal& o) const;
  QuarticReal operator/(const QuarticReal& o) const;  // throws DivisionByZero
  QuarticReal inverse() const;

  QuarticReal& operator+=(const QuarticReal& o) { return *this = *this + o; }
  QuarticReal& operator-=(const QuarticReal& o) { return *this = *this - o; }
  QuarticReal& operator*=(const QuarticReal& o) { return *this = *this * o; }

  QuarticReal scaled(const Rational& q) const { return {c_[0] * q, c_[1] * q, c_[2] * q, c_[3] * q}; }

  bool operator==(const QuarticReal& o) const { return c_ == o.c_; }
  bool operator!=(const QuarticReal& o) const { return c_ != o.c_; }

  // Exact sign of the real embedding: 0 iff all coefficients vanish,
  // otherwise decided by descent through Q(sqrt5) (never approximated).
  int sign() const;
  bool operator<(const QuarticReal& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuarticReal& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuarticReal& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuarticReal& o) const { return (*this - o).sign() >= 0; }

  double approx() const;

  // Succeeds iff c1 = c3 = 0, i.e. the value lies in Q(sqrt5) = Q(tau).
  GoldenExact to_golden() const;
  static QuarticReal from_golden(const GoldenExact& g);

  RatInterval enclosure(unsigned bits) const;
  std::string decimal(int digits = 12) const;
  std::string coeff_string() const;  // "c0,c1,c2,c3"

 private:
  std::array<Rational, 4> c_;  // c0 + c1 x + c2 x^2 + c3 x^3
};

std::ostream& operator<<(std::ostream& os, const QuarticReal& v);

// Nested rational enclosure of x = 2 cos(pi/10), at least `bits` bisections
// of the initial bracket [1.9, 1.91].
RatInterval x_enclosure(unsigned bits);

}  // namespace patchfreq

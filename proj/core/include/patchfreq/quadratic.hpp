#pragma once

#include "patchfreq/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace patchfreq {

// a + b*tau with tau = (1+sqrt5)/2, tau^2 = tau + 1.
class GoldenExact {
 public:
  GoldenExact() = default;
  GoldenExact(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  GoldenExact(long long v) : a_(v) {}  // NOLINT(implicit)
  static GoldenExact tau() { return {0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  GoldenExact operator-() const { return {-a_, -b_}; }
  GoldenExact operator+(const GoldenExact& o) const { return {a_ + o.a_, b_ + o.b_}; }
  GoldenExact operator-(const GoldenExact& o) const { return {a_ - o.a_, b_ - o.b_}; }
  GoldenExact operator*(const GoldenExact& o) const {
    // (a1 + b1 t)(a2 + b2 t), t^2 = t + 1
    Rational bb = b_ * o.b_;
    return {a_ * o.a_ + bb, a_ * o.b_ + b_ * o.a_ + bb};
  }
  GoldenExact inverse() const;  // throws DivisionByZero
  GoldenExact operator/(const GoldenExact& o) const { return *this * o.inverse(); }
  GoldenExact scaled(const Rational& q) const { return {a_ * q, b_ * q}; }
  GoldenExact pow(int e) const;

  bool operator==(const GoldenExact& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const GoldenExact& o) const { return !(*this == o); }

  int sign() const;
  bool operator<(const GoldenExact& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const GoldenExact& o) const { return (*this - o).sign() <= 0; }

  // Membership in (1/10)Z[tau]: both coordinates have denominator dividing 10.
  bool in_tenth_z_tau() const;

  double approx() const;
  RatInterval enclosure(unsigned bits) const;
  std::string decimal(int digits = 12) const;
  // "(p + q*tau)/d" with integers p, q, d.
  std::string to_string() const;
  static GoldenExact parse(const std::string& s);

 private:
  Rational a_, b_;
};

// a + b*sqrt2; the silver mean is lambda = 1 + sqrt2.
class SilverExact {
 public:
  SilverExact() = default;
  SilverExact(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  SilverExact(long long v) : a_(v) {}  // NOLINT(implicit)
  static SilverExact sqrt2() { return {0, 1}; }
  static SilverExact lambda() { return {1, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  SilverExact operator-() const { return {-a_, -b_}; }
  SilverExact operator+(const SilverExact& o) const { return {a_ + o.a_, b_ + o.b_}; }
  SilverExact operator-(const SilverExact& o) const { return {a_ - o.a_, b_ - o.b_}; }
  SilverExact operator*(const SilverExact& o) const {
    return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
  }
  SilverExact inverse() const;  // throws DivisionByZero
  SilverExact operator/(const SilverExact& o) const { return *this * o.inverse(); }
  SilverExact scaled(const Rational& q) const { return {a_ * q, b_ * q}; }
  SilverExact pow(int e) const;

  bool operator==(const SilverExact& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const SilverExact& o) const { return !(*this == o); }

  int sign() const;
  bool operator<(const SilverExact& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const SilverExact& o) const { return (*this - o).sign() <= 0; }

  // Membership in (1/2)Z[lambda] = (1/2)Z[sqrt2].
  bool in_half_z_lambda() const;

  double approx() const;
  RatInterval enclosure(unsigned bits) const;
  std::string decimal(int digits = 12) const;
  // "(p + q*sqrt2)/d" with integers p, q, d.
  std::string to_string() const;
  static SilverExact parse(const std::string& s);

 private:
  Rational a_, b_;
};

// Unit-prefix power form v = prefix * sign * base^exponent, base tau or
// lambda.  Exponents are searched in [-64, 64]; prefixes come from the fixed
// sets below.  Absent result means no such form, which is not an error.
struct PowerForm {
  enum class Base { Tau, Lambda };
  enum class Prefix { One, Half, Fifth, Tenth, TwoTauMinus1Over5, TwoTauMinus1Over10 };
  Base base;
  Prefix prefix;
  int sign;      // +1 or -1
  int exponent;  // v = prefix * sign * base^exponent

  std::string to_string() const;  // e.g. "tau^-8/10", "(2*tau-1)/5 * tau^-5"
};

// Golden prefixes: {1, 1/2, 1/5, 1/10, (2tau-1)/5, (2tau-1)/10}.
std::optional<PowerForm> power_form(const GoldenExact& v);  // throws ZeroValue on 0
// Silver prefixes: {1, 1/2}.
std::optional<PowerForm> power_form(const SilverExact& v);  // throws ZeroValue on 0

std::ostream& operator<<(std::ostream& os, const GoldenExact& v);
std::ostream& operator<<(std::ostream& os, const SilverExact& v);

namespace detail {
RatInterval sqrt5_enclosure(unsigned bits);
RatInterval sqrt2_enclosure(unsigned bits);
}  // namespace detail

}  // namespace patchfreq

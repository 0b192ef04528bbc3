#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace patchfreq {

using BigInt = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, always normalized to lowest terms with
// positive denominator (the backend maintains both invariants).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

BigInt pow10(unsigned k);

// Parses "n" or "n/d"; throws Error(SchemaError) on malformed input.
Rational parse_rational(const std::string& s);

std::string rational_string(const Rational& q);

// Closed interval with rational endpoints, used for certified decimal output.
struct RatInterval {
  Rational lo, hi;

  RatInterval() = default;
  RatInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}
  static RatInterval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval scaled(const Rational& q) const {
    return q >= 0 ? RatInterval{lo * q, hi * q} : RatInterval{hi * q, lo * q};
  }
};

// Formats the number enclosed by refine(bits) to `digits` significant digits.
// `refine` must produce nested intervals whose width tends to zero unless the
// value is exactly rational (lo == hi).
std::string decimal_from_enclosure(const std::function<RatInterval(unsigned)>& refine,
                                   int digits);

}  // namespace patchfreq

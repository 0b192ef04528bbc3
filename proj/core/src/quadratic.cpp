#include "patchfreq/quadratic.hpp"

#include "patchfreq/errors.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace patchfreq {

namespace {

int quad_sign(const Rational& p, const Rational& q, int d) {
  int sp = sign_of(p), sq = sign_of(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  return sp * sign_of(p * p - d * q * q);
}

constexpr double kSqrt5 = 2.2360679774997896964;
constexpr double kSqrt2 = 1.4142135623730950488;

// Shared formatter for "(p + q*SYM)/d".
std::string quad_string(const Rational& a, const Rational& b, const char* sym) {
  BigInt d = lcm(den(a), den(b));
  BigInt p = num(a) * (d / den(a));
  BigInt q = num(b) * (d / den(b));
  std::ostringstream os;
  os << "(" << p;
  if (q >= 0)
    os << " + " << q;
  else
    os << " - " << -q;
  os << "*" << sym << ")/" << d;
  return os.str();
}

// Parses "(p + q*SYM)/d", "(p + q*SYM)" or a bare rational.
std::pair<Rational, Rational> quad_parse(const std::string& s, const std::string& sym) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) fail(Errc::SchemaError, "empty exact value");
  if (t[0] != '(') return {parse_rational(t), Rational(0)};
  auto close = t.find(')');
  if (close == std::string::npos) fail(Errc::SchemaError, "missing ')' in '" + s + "'");
  std::string inner = t.substr(1, close - 1);
  std::string rest = t.substr(close + 1);
  Rational d(1);
  if (!rest.empty()) {
    if (rest[0] != '/') fail(Errc::SchemaError, "expected '/denominator' in '" + s + "'");
    d = parse_rational(rest.substr(1));
    if (d == 0) fail(Errc::SchemaError, "zero denominator in '" + s + "'");
  }
  auto star = inner.find("*" + sym);
  if (star == std::string::npos || star + 1 + sym.size() != inner.size())
    fail(Errc::SchemaError, "expected 'p + q*" + sym + "' in '" + s + "'");
  // Split off the q term: scan back from '*' to the sign that starts the term.
  size_t split = star;
  while (split > 0 && inner[split - 1] != '+' && inner[split - 1] != '-') --split;
  if (split == 0) fail(Errc::SchemaError, "expected two terms in '" + s + "'");
  char op = inner[split - 1];
  std::string pstr = inner.substr(0, split - 1);
  std::string qstr = inner.substr(split, star - split);
  if (pstr.empty() || qstr.empty()) fail(Errc::SchemaError, "malformed exact value '" + s + "'");
  Rational p = parse_rational(pstr);
  Rational q = parse_rational(qstr);
  if (op == '-') q = -q;
  return {p / d, q / d};
}

}  // namespace

GoldenExact GoldenExact::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q(tau)");
  Rational n = a_ * a_ + a_ * b_ - b_ * b_;
  return {(a_ + b_) / n, -b_ / n};
}

GoldenExact GoldenExact::pow(int e) const {
  GoldenExact base = e < 0 ? inverse() : *this;
  unsigned k = static_cast<unsigned>(e < 0 ? -static_cast<long long>(e) : e);
  GoldenExact r(1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

int GoldenExact::sign() const {
  // a + b tau = (a + b/2) + (b/2) sqrt5
  return quad_sign(a_ + b_ / 2, b_ / 2, 5);
}

bool GoldenExact::in_tenth_z_tau() const { return 10 % den(a_) == 0 && 10 % den(b_) == 0; }

double GoldenExact::approx() const {
  return to_double(a_) + to_double(b_) * (1 + kSqrt5) / 2;
}

RatInterval GoldenExact::enclosure(unsigned bits) const {
  if (b_ == 0) return RatInterval::point(a_);
  RatInterval s5 = detail::sqrt5_enclosure(bits);
  RatInterval tau = (s5 + RatInterval::point(1)).scaled(Rational(1, 2));
  return tau.scaled(b_) + RatInterval::point(a_);
}

std::string GoldenExact::decimal(int digits) const {
  return decimal_from_enclosure([this](unsigned bits) { return enclosure(bits); }, digits);
}

std::string GoldenExact::to_string() const { return quad_string(a_, b_, "tau"); }

GoldenExact GoldenExact::parse(const std::string& s) {
  auto [a, b] = quad_parse(s, "tau");
  return {a, b};
}

SilverExact SilverExact::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q(sqrt2)");
  Rational n = a_ * a_ - 2 * b_ * b_;
  return {a_ / n, -b_ / n};
}

SilverExact SilverExact::pow(int e) const {
  SilverExact base = e < 0 ? inverse() : *this;
  unsigned k = static_cast<unsigned>(e < 0 ? -static_cast<long long>(e) : e);
  SilverExact r(1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

int SilverExact::sign() const { return quad_sign(a_, b_, 2); }

bool SilverExact::in_half_z_lambda() const { return 2 % den(a_) == 0 && 2 % den(b_) == 0; }

double SilverExact::approx() const { return to_double(a_) + to_double(b_) * kSqrt2; }

RatInterval SilverExact::enclosure(unsigned bits) const {
  if (b_ == 0) return RatInterval::point(a_);
  RatInterval s2 = detail::sqrt2_enclosure(bits);
  return s2.scaled(b_) + RatInterval::point(a_);
}

std::string SilverExact::decimal(int digits) const {
  return decimal_from_enclosure([this](unsigned bits) { return enclosure(bits); }, digits);
}

std::string SilverExact::to_string() const { return quad_string(a_, b_, "sqrt2"); }

SilverExact SilverExact::parse(const std::string& s) {
  auto [a, b] = quad_parse(s, "sqrt2");
  return {a, b};
}

namespace {

const char* prefix_str(PowerForm::Prefix p) {
  switch (p) {
    case PowerForm::Prefix::One: return "";
    case PowerForm::Prefix::Half: return "2";
    case PowerForm::Prefix::Fifth: return "5";
    case PowerForm::Prefix::Tenth: return "10";
    case PowerForm::Prefix::TwoTauMinus1Over5: return "5";
    case PowerForm::Prefix::TwoTauMinus1Over10: return "10";
  }
  return "";
}

bool prefix_has_sqrt5(PowerForm::Prefix p) {
  return p == PowerForm::Prefix::TwoTauMinus1Over5 || p == PowerForm::Prefix::TwoTauMinus1Over10;
}

template <class V>
std::optional<PowerForm> power_form_impl(const V& v, PowerForm::Base base,
                                         const std::vector<std::pair<PowerForm::Prefix, V>>& prefixes,
                                         const V& unit, double unit_log) {
  if (v.is_zero()) fail(Errc::ZeroValue, "power form of zero");
  int sgn = v.sign();
  for (const auto& [tag, pre] : prefixes) {
    V w = v / pre;
    if (sgn < 0) w = -w;
    double lw = std::log(w.approx()) / unit_log;
    if (!std::isfinite(lw)) continue;
    long guess = std::lround(lw);
    for (long m = guess - 1; m <= guess + 1; ++m) {
      if (m < -64 || m > 64) continue;
      if (unit.pow(static_cast<int>(m)) == w)
        return PowerForm{base, tag, sgn, static_cast<int>(m)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string PowerForm::to_string() const {
  std::string b = base == Base::Tau ? "tau" : "lambda";
  std::string out;
  if (sign < 0) out += "-";
  if (prefix_has_sqrt5(prefix)) out += "(2*tau-1)*";
  out += b + "^" + std::to_string(exponent);
  const char* d = prefix_str(prefix);
  if (*d) out += std::string("/") + d;
  return out;
}

std::optional<PowerForm> power_form(const GoldenExact& v) {
  using P = PowerForm::Prefix;
  GoldenExact two_tau_m1(-1, 2);  // 2 tau - 1 = sqrt5
  static const double log_tau = std::log((1 + kSqrt5) / 2);
  std::vector<std::pair<P, GoldenExact>> prefixes = {
      {P::One, GoldenExact(1)},
      {P::Half, GoldenExact(Rational(1, 2), 0)},
      {P::Fifth, GoldenExact(Rational(1, 5), 0)},
      {P::Tenth, GoldenExact(Rational(1, 10), 0)},
      {P::TwoTauMinus1Over5, two_tau_m1.scaled(Rational(1, 5))},
      {P::TwoTauMinus1Over10, two_tau_m1.scaled(Rational(1, 10))},
  };
  return power_form_impl(v, PowerForm::Base::Tau, prefixes, GoldenExact::tau(), log_tau);
}

std::optional<PowerForm> power_form(const SilverExact& v) {
  using P = PowerForm::Prefix;
  static const double log_lambda = std::log(1 + kSqrt2);
  std::vector<std::pair<P, SilverExact>> prefixes = {
      {P::One, SilverExact(1)},
      {P::Half, SilverExact(Rational(1, 2), 0)},
  };
  return power_form_impl(v, PowerForm::Base::Lambda, prefixes, SilverExact::lambda(), log_lambda);
}

std::ostream& operator<<(std::ostream& os, const GoldenExact& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const SilverExact& v) { return os << v.to_string(); }

}  // namespace patchfreq

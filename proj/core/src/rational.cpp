#include "patchfreq/rational.hpp"

#include "patchfreq/errors.hpp"

#include <sstream>

namespace patchfreq {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroValue: return "ZeroValue";
    case Errc::NotInGoldenSubfield: return "NotInGoldenSubfield";
    case Errc::InternalDerivationError: return "InternalDerivationError";
    case Errc::AnchorNotShallow: return "AnchorNotShallow";
    case Errc::UnknownTileClass: return "UnknownTileClass";
    case Errc::OverlappingTiles: return "OverlappingTiles";
    case Errc::DisconnectedPatch: return "DisconnectedPatch";
    case Errc::NonGenericCut: return "NonGenericCut";
    case Errc::RegionTooSmall: return "RegionTooSmall";
    case Errc::UnrecognizedEdge: return "UnrecognizedEdge";
    case Errc::NoValidLift: return "NoValidLift";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Error";
}

BigInt pow10(unsigned k) {
  BigInt r = 1;
  BigInt b = 10;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  Rational mn = a, mx = a;
  for (const Rational* p : {&b, &c, &d}) {
    if (*p < mn) mn = *p;
    if (*p > mx) mx = *p;
  }
  return {mn, mx};
}

Rational parse_rational(const std::string& s) {
  auto bad = [&]() { fail(Errc::SchemaError, "malformed rational '" + s + "'"); };
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) bad();
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(t));
    BigInt n(t.substr(0, slash));
    BigInt d(t.substr(slash + 1));
    if (d == 0) bad();
    return Rational(n, d);
  } catch (const std::exception&) {
    bad();
  }
  return Rational();  // unreachable
}

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  if (den(q) == 1)
    os << num(q);
  else
    os << num(q) << "/" << den(q);
  return os.str();
}

namespace {

// Renders |v| = mant/scale rounded to `digits` significant digits.
// Returns the digit string and the decimal exponent of its leading digit.
struct Digits {
  std::string digits;
  long exp10;
};

Digits round_digits(const Rational& v, int digits) {
  // Find e with 10^e <= v < 10^(e+1).
  long e = 0;
  Rational ten(10), one(1);
  if (v >= one) {
    Rational p(1);
    while (p * ten <= v) {
      p *= ten;
      ++e;
    }
  } else {
    Rational p(1);
    while (v < p) {
      p /= ten;
      --e;
    }
  }
  // n = round(v * 10^(digits-1-e)), round-half-up.
  long shift = digits - 1 - e;
  Rational scaled = v;
  if (shift >= 0)
    scaled *= Rational(pow10(static_cast<unsigned>(shift)));
  else
    scaled /= Rational(pow10(static_cast<unsigned>(-shift)));
  // round half up: n = floor(scaled + 1/2); scaled is nonnegative here
  Rational t = scaled + Rational(1, 2);
  BigInt n = num(t) / den(t);
  if (n >= pow10(static_cast<unsigned>(digits))) {
    n /= 10;
    ++e;
  }
  std::ostringstream os;
  os << n;
  std::string ds = os.str();
  while (static_cast<int>(ds.size()) < digits) ds = "0" + ds;  // defensive
  return {ds, e};
}

std::string format_digits(bool negative, const Digits& d) {
  const std::string& m = d.digits;
  long e = d.exp10;
  std::string out;
  if (e >= 0 && e <= 15) {
    if (e + 1 >= static_cast<long>(m.size())) {
      out = m + std::string(e + 1 - m.size(), '0');
    } else {
      out = m.substr(0, e + 1) + "." + m.substr(e + 1);
    }
  } else if (e < 0 && e >= -9) {
    out = "0." + std::string(-e - 1, '0') + m;
  } else {
    out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e);
  }
  return negative ? "-" + out : out;
}

}  // namespace

std::string decimal_from_enclosure(const std::function<RatInterval(unsigned)>& refine,
                                   int digits) {
  for (unsigned bits = 64;; bits *= 2) {
    RatInterval iv = refine(bits);
    if (iv.lo == iv.hi) {
      const Rational& v = iv.lo;
      if (v == 0) return "0";
      Digits d = round_digits(abs_rat(v), digits);
      return format_digits(v < 0, d);
    }
    if (iv.contains_zero()) {
      if (bits > 4096) fail(Errc::InternalDerivationError, "decimal of un-separated value");
      continue;
    }
    bool neg = iv.hi < 0;
    Rational lo = neg ? -iv.hi : iv.lo;
    Rational hi = neg ? -iv.lo : iv.hi;
    Digits dl = round_digits(lo, digits);
    Digits dh = round_digits(hi, digits);
    if (dl.exp10 == dh.exp10 && dl.digits == dh.digits) return format_digits(neg, dl);
    if (bits > 1u << 20) fail(Errc::InternalDerivationError, "decimal failed to converge");
  }
}

}  // namespace patchfreq

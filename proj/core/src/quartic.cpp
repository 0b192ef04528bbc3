#include "patchfreq/quartic.hpp"

#include "patchfreq/errors.hpp"
#include "patchfreq/quadratic.hpp"

#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>

namespace patchfreq {

namespace {

// sign of p + q*sqrt(d) for squarefree d > 0, exact.
int quad_sign(const Rational& p, const Rational& q, int d) {
  int sp = sign_of(p), sq = sign_of(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  int s = sign_of(p * p - d * q * q);
  return sp * s;
}

struct Quad5 {  // p + q*sqrt5
  Rational p, q;
  Quad5 operator*(const Quad5& o) const { return {p * o.p + 5 * q * o.q, p * o.q + q * o.p}; }
  Quad5 operator-(const Quad5& o) const { return {p - o.p, q - o.q}; }
  int sign() const { return quad_sign(p, q, 5); }
};

// Nested enclosure of the positive root of t^2 - d in [lo0, hi0].
class SqrtEnclosure {
 public:
  SqrtEnclosure(int d, Rational lo, Rational hi)
      : d_(d), lo_(std::move(lo)), hi_(std::move(hi)) {}

  RatInterval get(unsigned bits) {
    std::lock_guard<std::mutex> lock(mu_);
    while (done_ < bits) {
      Rational mid = (lo_ + hi_) / 2;
      if (mid * mid - d_ < 0)
        lo_ = mid;
      else
        hi_ = mid;
      ++done_;
    }
    return {lo_, hi_};
  }

 private:
  std::mutex mu_;
  int d_;
  Rational lo_, hi_;
  unsigned done_ = 0;
};

SqrtEnclosure& sqrt5_cache() {
  static SqrtEnclosure e(5, Rational(2), Rational(9, 4));
  return e;
}

SqrtEnclosure& sqrt2_cache() {
  static SqrtEnclosure e(2, Rational(1), Rational(3, 2));
  return e;
}

// Enclosure of x = 2 cos(pi/10): the root of t^4 - 5t^2 + 5 in [1.9, 1.91],
// where the polynomial is increasing.
class XEnclosure {
 public:
  RatInterval get(unsigned bits) {
    std::lock_guard<std::mutex> lock(mu_);
    while (done_ < bits) {
      Rational mid = (lo_ + hi_) / 2;
      Rational m2 = mid * mid;
      if (m2 * m2 - 5 * m2 + 5 < 0)
        lo_ = mid;
      else
        hi_ = mid;
      ++done_;
    }
    return {lo_, hi_};
  }

 private:
  std::mutex mu_;
  Rational lo_{Rational(19, 10)}, hi_{Rational(191, 100)};
  unsigned done_ = 0;
};

XEnclosure& x_cache() {
  static XEnclosure e;
  return e;
}

constexpr double kX = 1.9021130325903071442;

}  // namespace

RatInterval x_enclosure(unsigned bits) { return x_cache().get(bits); }

QuarticReal QuarticReal::operator*(const QuarticReal& o) const {
  Rational d[7];
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      d[i + j] += c_[i] * o.c_[j];
    }
  }
  // x^4 = 5x^2 - 5, x^5 = 5x^3 - 5x, x^6 = 20x^2 - 25
  return {d[0] - 5 * d[4] - 25 * d[6], d[1] - 5 * d[5], d[2] + 5 * d[4] + 20 * d[6],
          d[3] + 5 * d[5]};
}

QuarticReal QuarticReal::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in K");
  // Solve M v = e0 where column j of M holds the coefficients of this * x^j.
  Rational m[4][5];
  QuarticReal col = *this;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    // col *= x
    col = QuarticReal(-5 * col.c_[3], col.c_[0], col.c_[1] + 5 * col.c_[3], col.c_[2]);
  }
  m[0][4] = 1;
  m[1][4] = m[2][4] = m[3][4] = 0;
  for (int p = 0; p < 4; ++p) {
    int piv = -1;
    for (int i = p; i < 4; ++i)
      if (m[i][p] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) fail(Errc::InternalDerivationError, "singular multiplication matrix in K");
    if (piv != p)
      for (int k = 0; k <= 4; ++k) std::swap(m[piv][k], m[p][k]);
    Rational inv_p = Rational(1) / m[p][p];
    for (int k = p; k <= 4; ++k) m[p][k] *= inv_p;
    for (int i = 0; i < 4; ++i) {
      if (i == p || m[i][p] == 0) continue;
      Rational f = m[i][p];
      for (int k = p; k <= 4; ++k) m[i][k] -= f * m[p][k];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

QuarticReal QuarticReal::operator/(const QuarticReal& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero in K");
  return *this * o.inverse();
}

int QuarticReal::sign() const {
  if (is_zero()) return 0;
  // Fast path: double evaluation with a conservative error bound.
  {
    double t0 = to_double(c_[0]);
    double t1 = to_double(c_[1]) * kX;
    double t2 = to_double(c_[2]) * (kX * kX);
    double t3 = to_double(c_[3]) * (kX * kX * kX);
    double v = ((t3 + t2) + t1) + t0;
    double mag = std::abs(t0) + std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (std::abs(v) > mag * 1e-12 + 1e-300) return v > 0 ? 1 : -1;
  }
  // Exact: write the value as A + B x with A, B in Q(sqrt5), x^2 = (5+sqrt5)/2.
  Quad5 A{c_[0] + Rational(5, 2) * c_[2], c_[2] / 2};
  Quad5 B{c_[1] + Rational(5, 2) * c_[3], c_[3] / 2};
  int sa = A.sign();
  int sb = B.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // x > 0
  if (sa == sb) return sa;
  // Opposite halves: compare A^2 against B^2 x^2.  D = 0 would force the
  // degree-4 generator into Q(sqrt5), so D is never zero here.
  Quad5 x2{Rational(5, 2), Rational(1, 2)};
  Quad5 D = A * A - B * B * x2;
  int sd = D.sign();
  if (sd == 0) fail(Errc::InternalDerivationError, "sign descent hit impossible tie");
  return sa * sd;
}

double QuarticReal::approx() const {
  return to_double(c_[0]) + to_double(c_[1]) * kX + to_double(c_[2]) * (kX * kX) +
         to_double(c_[3]) * (kX * kX * kX);
}

GoldenExact QuarticReal::to_golden() const {
  if (c_[1] != 0 || c_[3] != 0)
    fail(Errc::NotInGoldenSubfield, "value has odd-degree part: " + coeff_string());
  // c0 + c2 x^2 with x^2 = tau + 2
  return GoldenExact(c_[0] + 2 * c_[2], c_[2]);
}

QuarticReal QuarticReal::from_golden(const GoldenExact& g) {
  // a + b tau = (a - 2b) + b x^2
  return {g.a() - 2 * g.b(), 0, g.b(), 0};
}

RatInterval QuarticReal::enclosure(unsigned bits) const {
  if (is_rational()) return RatInterval::point(c_[0]);
  RatInterval xi = x_enclosure(bits);
  RatInterval acc = RatInterval::point(c_[3]);
  for (int i = 2; i >= 0; --i) acc = acc * xi + RatInterval::point(c_[i]);
  return acc;
}

std::string QuarticReal::decimal(int digits) const {
  return decimal_from_enclosure([this](unsigned bits) { return enclosure(bits); }, digits);
}

std::string QuarticReal::coeff_string() const {
  std::ostringstream os;
  os << rational_string(c_[0]) << "," << rational_string(c_[1]) << "," << rational_string(c_[2])
     << "," << rational_string(c_[3]);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuarticReal& v) { return os << v.coeff_string(); }

namespace detail {
RatInterval sqrt5_enclosure(unsigned bits) { return sqrt5_cache().get(bits); }
RatInterval sqrt2_enclosure(unsigned bits) { return sqrt2_cache().get(bits); }
}  // namespace detail

}  // namespace patchfreq

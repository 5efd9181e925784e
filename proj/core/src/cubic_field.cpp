#include "kol/cubic_field.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kol {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// q, r with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

}  // namespace

CubicNumber::CubicNumber(Rational c0, Rational c1, Rational c2)
    : c_{std::move(c0), std::move(c1), std::move(c2)} {
  for (auto& v : c_) v.canonicalize();
}

bool CubicNumber::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

bool CubicNumber::is_integral() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

CubicNumber& CubicNumber::operator+=(const CubicNumber& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

CubicNumber& CubicNumber::operator-=(const CubicNumber& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

CubicNumber& CubicNumber::operator*=(const CubicNumber& o) {
  const auto& a = c_;
  const auto& b = o.c_;
  Rational d0 = a[0] * b[0];
  Rational d1 = a[0] * b[1] + a[1] * b[0];
  Rational d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  Rational d3 = a[1] * b[2] + a[2] * b[1];
  Rational d4 = a[2] * b[2];
  // alpha^3 = 1 + 2 alpha^2,  alpha^4 = 2 + alpha + 4 alpha^2
  c_[0] = d0 + d3 + 2 * d4;
  c_[1] = d1 + d4;
  c_[2] = d2 + 2 * d3 + 4 * d4;
  return *this;
}

CubicNumber& CubicNumber::operator/=(const CubicNumber& o) { return *this *= o.inverse(); }

CubicNumber operator-(const CubicNumber& a) { return {-a.c_[0], -a.c_[1], -a.c_[2]}; }

bool operator==(const CubicNumber& a, const CubicNumber& b) {
  return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
}

CubicNumber CubicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(alpha)");
  // Extended Euclid: find s with s*a + t*m = g (g constant), m = x^3 - 2x^2 - 1.
  Poly m{-1, 0, -2, 1};
  Poly a{c_[0], c_[1], c_[2]};
  trim(a);
  Poly r0 = m, r1 = a;
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // m is irreducible, so the final remainder is a nonzero constant.
  const Rational g = r1.at(0);
  Poly s = s1;
  s.resize(3);
  return {s[0] / g, s[1] / g, s[2] / g};
}

std::string CubicNumber::to_string() const {
  std::ostringstream os;
  os << rational_string(c_[0]) << " + " << rational_string(c_[1]) << "*a + "
     << rational_string(c_[2]) << "*a^2";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CubicNumber& x) { return os << x.to_string(); }

CubicNumber cubic_mul(const CubicNumber& a, const CubicNumber& b) { return a * b; }

CubicNumber cubic_inv(const CubicNumber& a) { return a.inverse(); }

CubicInt operator*(const CubicInt& a, const CubicInt& b) {
  auto mul = [](std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("CubicInt product overflow");
    return r;
  };
  auto add = [](std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("CubicInt sum overflow");
    return r;
  };
  const auto& x = a.c;
  const auto& y = b.c;
  std::int64_t d0 = mul(x[0], y[0]);
  std::int64_t d1 = add(mul(x[0], y[1]), mul(x[1], y[0]));
  std::int64_t d2 = add(add(mul(x[0], y[2]), mul(x[1], y[1])), mul(x[2], y[0]));
  std::int64_t d3 = add(mul(x[1], y[2]), mul(x[2], y[1]));
  std::int64_t d4 = mul(x[2], y[2]);
  return {add(add(d0, d3), mul(2, d4)), add(d1, d4), add(add(d2, mul(2, d3)), mul(4, d4))};
}

InternalPoint& InternalPoint::operator+=(const InternalPoint& o) {
  re += o.re;
  im_s += o.im_s;
  return *this;
}

InternalPoint& InternalPoint::operator-=(const InternalPoint& o) {
  re -= o.re;
  im_s -= o.im_s;
  return *this;
}

InternalPoint operator*(const InternalPoint& a, const InternalPoint& b) {
  return {a.re * b.re - imag_beta_squared() * a.im_s * b.im_s, a.re * b.im_s + a.im_s * b.re};
}

InternalPoint operator*(const Rational& s, const InternalPoint& a) {
  const CubicNumber k(s);
  return {k * a.re, k * a.im_s};
}

std::string InternalPoint::to_string() const {
  return "(" + re.to_string() + ") + i*Im(b)*(" + im_s.to_string() + ")";
}

const CubicNumber& imag_beta_squared() {
  static const CubicNumber value(Rational(-1), Rational(-1), Rational(3, 4));
  return value;
}

namespace {

EmbeddingConstants compute_embedding() {
  using boost::multiprecision::sqrt;
  EmbeddingConstants k;
  k.precision = 45;
  auto p = [](const HighPrecision& x) { return x * x * x - 2 * x * x - 1; };
  HighPrecision lo = 2.2, hi = 2.21;
  for (int i = 0; i < 40; ++i) {
    HighPrecision mid = (lo + hi) / 2;
    if (p(mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  HighPrecision x = (lo + hi) / 2;
  for (int i = 0; i < 8; ++i) x -= p(x) / (3 * x * x - 4 * x);
  k.alpha = x;
  k.beta_re = 1 - x / 2;
  // Im(beta)^2 = 1/alpha - Re(beta)^2 (unimodular: alpha |beta|^2 = 1).
  k.beta_im = sqrt(1 / x - k.beta_re * k.beta_re);
  k.alpha_d = static_cast<double>(k.alpha);
  k.beta_re_d = static_cast<double>(k.beta_re);
  k.beta_im_d = static_cast<double>(k.beta_im);
  k.beta2_re_d = static_cast<double>(2 - x * x / 2);
  k.beta2_im_d = static_cast<double>(k.beta_im * (2 - x));
  return k;
}

HighPrecision to_hp(const Rational& r) {
  HighPrecision num, den;
  mpfr_set_z(num.backend().data(), r.get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den.backend().data(), r.get_den_mpz_t(), MPFR_RNDN);
  return num / den;
}

}  // namespace

const EmbeddingConstants& embedding() {
  static const EmbeddingConstants k = compute_embedding();
  return k;
}

HighPrecision embed_real_hp(const CubicNumber& a) {
  const auto& k = embedding();
  return to_hp(a[0]) + k.alpha * (to_hp(a[1]) + k.alpha * to_hp(a[2]));
}

double embed_real(const CubicNumber& a) { return static_cast<double>(embed_real_hp(a)); }

double embed_real(const CubicInt& a) {
  const auto& k = embedding();
  const long double al = static_cast<long double>(k.alpha);
  return static_cast<double>(a.c[0] + al * (a.c[1] + al * a.c[2]));
}

InternalPoint internal_decompose(const CubicNumber& a) {
  // beta = (1 - a/2) + i Im(b) * 1,  beta^2 = (2 - a^2/2) + i Im(b) * (2 - a)
  static const CubicNumber beta_re(1, Rational(-1, 2), 0);
  static const CubicNumber beta2_re(2, 0, Rational(-1, 2));
  static const CubicNumber beta2_s(2, -1, 0);
  CubicNumber r = CubicNumber(a[0]) + CubicNumber(a[1]) * beta_re + CubicNumber(a[2]) * beta2_re;
  CubicNumber s = CubicNumber(a[1]) + CubicNumber(a[2]) * beta2_s;
  return {r, s};
}

Complex embed_internal(const InternalPoint& p) {
  const auto& k = embedding();
  return {embed_real(p.re), static_cast<double>(k.beta_im * embed_real_hp(p.im_s))};
}

Complex embed_internal(const CubicNumber& a) { return embed_internal(internal_decompose(a)); }

Complex embed_internal(const CubicInt& a) {
  const auto& k = embedding();
  return {a.c[0] + a.c[1] * k.beta_re_d + a.c[2] * k.beta2_re_d,
          a.c[1] * k.beta_im_d + a.c[2] * k.beta2_im_d};
}

}  // namespace kol

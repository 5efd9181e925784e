#pragma once

// Exact arithmetic in the cubic field Q(alpha), alpha^3 = 2 alpha^2 + 1,
// and in the internal plane Q(alpha) + i Im(beta) Q(alpha), where beta is
// the complex root of x^3 - 2x^2 - 1 with positive imaginary part.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

#include "kol/error.hpp"

namespace kol {

using Rational = mpq_class;
using HighPrecision = boost::multiprecision::mpfr_float_50;
using Complex = std::complex<double>;

/// Element c0 + c1*alpha + c2*alpha^2 of Q(alpha). The same triple denotes
/// c0 + c1*beta + c2*beta^2 under the complex embedding.
class CubicNumber {
 public:
  CubicNumber() = default;
  CubicNumber(Rational c0, Rational c1 = 0, Rational c2 = 0);
  CubicNumber(long c0) : CubicNumber(Rational(c0)) {}  // NOLINT(google-explicit-constructor)

  static CubicNumber alpha() { return {0, 1, 0}; }

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;

  CubicNumber inverse() const;

  CubicNumber& operator+=(const CubicNumber& o);
  CubicNumber& operator-=(const CubicNumber& o);
  CubicNumber& operator*=(const CubicNumber& o);
  CubicNumber& operator/=(const CubicNumber& o);

  friend CubicNumber operator+(CubicNumber a, const CubicNumber& b) { return a += b; }
  friend CubicNumber operator-(CubicNumber a, const CubicNumber& b) { return a -= b; }
  friend CubicNumber operator*(CubicNumber a, const CubicNumber& b) { return a *= b; }
  friend CubicNumber operator/(CubicNumber a, const CubicNumber& b) { return a /= b; }
  friend CubicNumber operator-(const CubicNumber& a);
  friend bool operator==(const CubicNumber& a, const CubicNumber& b);

  /// "c0 + c1*a + c2*a^2" with reduced rationals.
  std::string to_string() const;

 private:
  std::array<Rational, 3> c_{};
};

std::ostream& operator<<(std::ostream& os, const CubicNumber& x);

CubicNumber cubic_mul(const CubicNumber& a, const CubicNumber& b);
/// Throws DivisionByZero for a == 0.
CubicNumber cubic_inv(const CubicNumber& a);

/// Integer subring Z[alpha] with 64-bit components. Used for site positions,
/// where exact rationals would be wasteful.
struct CubicInt {
  std::array<std::int64_t, 3> c{};

  constexpr CubicInt() = default;
  constexpr CubicInt(std::int64_t c0, std::int64_t c1, std::int64_t c2) : c{c0, c1, c2} {}

  CubicNumber exact() const { return {Rational(c[0]), Rational(c[1]), Rational(c[2])}; }

  constexpr CubicInt& operator+=(const CubicInt& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr CubicInt& operator-=(const CubicInt& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend constexpr CubicInt operator+(CubicInt a, const CubicInt& b) { return a += b; }
  friend constexpr CubicInt operator-(CubicInt a, const CubicInt& b) { return a -= b; }
  friend constexpr CubicInt operator-(const CubicInt& a) { return {-a.c[0], -a.c[1], -a.c[2]}; }
  friend constexpr CubicInt operator*(std::int64_t s, const CubicInt& a) {
    return {s * a.c[0], s * a.c[1], s * a.c[2]};
  }
  /// Ring product; throws std::overflow_error if a component leaves int64.
  friend CubicInt operator*(const CubicInt& a, const CubicInt& b);
  friend constexpr bool operator==(const CubicInt&, const CubicInt&) = default;
  friend constexpr auto operator<=>(const CubicInt&, const CubicInt&) = default;
};

struct CubicIntHash {
  std::size_t operator()(const CubicInt& x) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : x.c) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Complex number re + i*Im(beta)*im_s with re, im_s in Q(alpha) evaluated
/// at the real root. Closed under + and * because Im(beta)^2 lies in Q(alpha).
struct InternalPoint {
  CubicNumber re;
  CubicNumber im_s;

  InternalPoint() = default;
  InternalPoint(CubicNumber r, CubicNumber s = {}) : re(std::move(r)), im_s(std::move(s)) {}

  InternalPoint& operator+=(const InternalPoint& o);
  InternalPoint& operator-=(const InternalPoint& o);
  friend InternalPoint operator+(InternalPoint a, const InternalPoint& b) { return a += b; }
  friend InternalPoint operator-(InternalPoint a, const InternalPoint& b) { return a -= b; }
  friend InternalPoint operator-(const InternalPoint& a) { return {-a.re, -a.im_s}; }
  friend InternalPoint operator*(const InternalPoint& a, const InternalPoint& b);
  friend InternalPoint operator*(const Rational& s, const InternalPoint& a);
  friend bool operator==(const InternalPoint& a, const InternalPoint& b) = default;

  std::string to_string() const;
};

/// Im(beta)^2 = (3/4) alpha^2 - alpha - 1.
const CubicNumber& imag_beta_squared();

/// Real root alpha and the complex root beta (Im beta > 0) to `precision`
/// decimal digits, plus double-precision copies for hot loops.
struct EmbeddingConstants {
  HighPrecision alpha;
  HighPrecision beta_re;
  HighPrecision beta_im;
  int precision = 0;

  double alpha_d = 0;
  double beta_re_d = 0;
  double beta_im_d = 0;
  /// Re(beta^2), Im(beta^2) for fast star images of integer triples.
  double beta2_re_d = 0;
  double beta2_im_d = 0;

  Complex beta() const { return {beta_re_d, beta_im_d}; }
};

/// Bisection on [2.2, 2.21] followed by Newton; computed once.
const EmbeddingConstants& embedding();

HighPrecision embed_real_hp(const CubicNumber& a);
double embed_real(const CubicNumber& a);
double embed_real(const CubicInt& a);

/// The conjugate alpha -> beta as a complex number.
Complex embed_internal(const CubicNumber& a);
Complex embed_internal(const InternalPoint& p);
Complex embed_internal(const CubicInt& a);

/// Splits the beta-embedding of `a` into R + i*Im(beta)*S, R, S in Q(alpha).
InternalPoint internal_decompose(const CubicNumber& a);

}  // namespace kol

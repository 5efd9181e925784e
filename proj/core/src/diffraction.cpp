#include "kol/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kol/parallel.hpp"
#include "kol/windows.hpp"

namespace kol::dif {

namespace {

using Matrix = std::array<std::array<CubicNumber, 3>, 3>;

// Solves m * X = I over Q(alpha) by Gauss-Jordan elimination.
Matrix invert(Matrix m) {
  Matrix inv;
  for (std::size_t i = 0; i < 3; ++i) inv[i][i] = CubicNumber(1);
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 3) throw DegenerateGeometry("singular lattice matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const CubicNumber s = m[col][col].inverse();
    for (std::size_t j = 0; j < 3; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const CubicNumber f = m[r][col];
      for (std::size_t j = 0; j < 3; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

CubicNumber poly(const Rational& c0, const Rational& c1, const Rational& c2) { return {c0, c1, c2}; }

long max_abs(const std::vector<PeakIndex>& peaks) {
  long b = 0;
  for (const auto& n : peaks) b = std::max({b, std::abs(n.nA), std::abs(n.nB), std::abs(n.nC)});
  return b;
}

// Powers z^-b .. z^b of three unit phases, then products over the peaks.
class PhaseTable {
 public:
  explicit PhaseTable(long bound) : bound_(bound), pw_(3 * (2 * bound + 1)) {}

  void set(const std::array<Complex, 3>& base) {
    const auto w = static_cast<std::size_t>(2 * bound_ + 1);
    for (std::size_t j = 0; j < 3; ++j) {
      Complex* row = &pw_[j * w];
      const auto mid = static_cast<std::size_t>(bound_);
      row[mid] = 1;
      const Complex conj = std::conj(base[j]);
      for (std::size_t e = 1; e <= mid; ++e) {
        row[mid + e] = row[mid + e - 1] * base[j];
        row[mid - e] = row[mid - e + 1] * conj;
      }
    }
  }

  Complex at(const PeakIndex& n) const {
    const auto w = static_cast<std::size_t>(2 * bound_ + 1);
    auto idx = [&](long v) { return static_cast<std::size_t>(v + bound_); };
    return pw_[idx(n.nA)] * pw_[w + idx(n.nB)] * pw_[2 * w + idx(n.nC)];
  }

 private:
  long bound_;
  std::vector<Complex> pw_;
};

constexpr std::size_t kBatches = 20;

}  // namespace

const DualBasis& dual_basis() {
  static const DualBasis basis = [] {
    const auto& lat = ms::lattice_basis();
    const CubicNumber& k2 = imag_beta_squared();
    Matrix m;
    for (std::size_t i = 0; i < 3; ++i)
      m[i] = {lat.v[i].physical, lat.v[i].internal.re, k2 * lat.v[i].internal.im_s};
    const Matrix inv = invert(m);
    DualBasis d;
    const double im_beta = embedding().beta_im_d;
    for (std::size_t j = 0; j < 3; ++j) {
      d.w[j] = {inv[0][j], inv[1][j], inv[2][j], {}};
      d.w[j].numeric = {embed_real(inv[0][j]), embed_real(inv[1][j]), im_beta * embed_real(inv[2][j])};
      d.pi[j] = inv[0][j];
    }
    return d;
  }();
  return basis;
}

PeakPosition peak_position(const PeakIndex& n) {
  const auto& d = dual_basis();
  const std::array<long, 3> c{n.nA, n.nB, n.nC};
  PeakPosition out;
  for (std::size_t j = 0; j < 3; ++j) {
    const CubicNumber s(c[j]);
    out.k += s * d.w[j].p;
    out.k_star.re += s * d.w[j].q;
    out.k_star.im_s += s * d.w[j].t;
  }
  out.k_numeric = embed_real(out.k);
  out.k_star_numeric = embed_internal(out.k_star);
  return out;
}

std::string_view name(Deformation d) {
  switch (d) {
    case Deformation::none:
      return "none";
    case Deformation::equal_lengths:
      return "equal_lengths";
    case Deformation::integer_lengths:
      return "integer_lengths";
  }
  return "?";
}

Deformation deformation_from_name(std::string_view s) {
  if (s == "none") return Deformation::none;
  if (s == "equal" || s == "equal_lengths") return Deformation::equal_lengths;
  if (s == "integer" || s == "integer_lengths") return Deformation::integer_lengths;
  throw UnknownName("unknown deformation: " + std::string(s));
}

CubicNumber integer_length_unit() { return poly(Rational(1, 4), Rational(-15, 4), Rational(7, 4)); }

const DeformationParams& deformation_params(Deformation d) {
  static const std::array<DeformationParams, 3> table = [] {
    const auto& perron = seq::substitution_data().perron;
    const CubicNumber l = perron.mean_length;
    std::array<DeformationParams, 3> t;
    t[0].kind = Deformation::none;
    t[0].unit = l;
    t[0].lengths = perron.lengths;
    t[0].period_shift = {1, 1, 1};

    t[1].kind = Deformation::equal_lengths;
    t[1].a = poly(Rational(5, 2), Rational(1, 2), Rational(-1, 2));
    t[1].b_cofactor = poly(Rational(-31, 59), Rational(17, 59), Rational(1, 59));
    t[1].unit = l;
    t[1].lengths = {l, l, l};
    t[1].period_shift = {1, 1, 1};

    const CubicNumber lt = integer_length_unit();
    t[2].kind = Deformation::integer_lengths;
    t[2].a = poly(Rational(-1, 2), Rational(-15, 2), Rational(7, 2));
    t[2].b_cofactor = poly(Rational(3, 59), Rational(379, 59), Rational(-179, 59));
    t[2].unit = 2 * lt;
    t[2].lengths = {6 * lt, 4 * lt, 2 * lt};
    t[2].period_shift = {3, 2, 1};

    for (auto& p : t) {
      p.a_numeric = embed_real(p.a);
      p.b_numeric = embedding().beta_im_d * embed_real(p.b_cofactor);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(d)];
}

CubicNumber deform(const CubicNumber& x, const DeformationParams& p) {
  const InternalPoint s = ms::star(x);
  return x + p.a * s.re + p.b_cofactor * imag_beta_squared() * s.im_s;
}

std::vector<CubicNumber> deform_sites(const std::vector<ms::SitePoint>& sites,
                                      const DeformationParams& p) {
  // deform is Q-linear, so three images of the power basis suffice.
  const std::array<CubicNumber, 3> img{deform(CubicNumber(1), p), deform({0, 1, 0}, p),
                                       deform({0, 0, 1}, p)};
  std::vector<CubicNumber> out;
  out.reserve(sites.size());
  for (const auto& s : sites) {
    CubicNumber v;
    for (std::size_t i = 0; i < 3; ++i)
      if (s.pos.c[i] != 0) v += CubicNumber(Rational(s.pos.c[i])) * img[i];
    out.push_back(std::move(v));
  }
  return out;
}

std::string_view name(Method m) { return m == Method::window ? "window" : "sum"; }

WindowSamples window_samples(std::size_t n, std::uint64_t seed) {
  return {win::attractor_sample(win::WindowLabel::Omega, n, seed).points, seed};
}

std::vector<Amplitude> fb_window(const std::vector<PeakIndex>& peaks, const DeformationParams& p,
                                 const WindowSamples& samples) {
  const auto& d = dual_basis();
  const std::size_t n = samples.points.size();
  const long bound = max_abs(peaks);
  std::array<std::array<double, 2>, 3> coef{};
  for (std::size_t j = 0; j < 3; ++j) {
    const double pj = embed_real(d.pi[j]);
    coef[j] = {-2 * std::numbers::pi * (pj * p.a_numeric - d.w[j].numeric[1]),
               -2 * std::numbers::pi * (pj * p.b_numeric - d.w[j].numeric[2])};
  }
  std::vector<std::vector<Complex>> sums(kBatches, std::vector<Complex>(peaks.size()));
  std::vector<std::size_t> counts(kBatches);
  parallel_for(kBatches, [&](std::size_t b) {
    const std::size_t lo = n * b / kBatches;
    const std::size_t hi = n * (b + 1) / kBatches;
    PhaseTable table(bound);
    auto& acc = sums[b];
    for (std::size_t s = lo; s < hi; ++s) {
      const Complex y = samples.points[s];
      std::array<Complex, 3> base;
      for (std::size_t j = 0; j < 3; ++j)
        base[j] = std::polar(1.0, coef[j][0] * y.real() + coef[j][1] * y.imag());
      table.set(base);
      for (std::size_t i = 0; i < peaks.size(); ++i) acc[i] += table.at(peaks[i]);
    }
    counts[b] = hi - lo;
  });
  const double scale = embed_real(seq::substitution_data().perron.mean_length.inverse());
  std::vector<Amplitude> out(peaks.size());
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    std::array<Complex, kBatches> means;
    Complex total = 0;
    for (std::size_t b = 0; b < kBatches; ++b) {
      means[b] = counts[b] ? sums[b][i] / static_cast<double>(counts[b]) : Complex{};
      total += sums[b][i];
    }
    const Complex mean = n ? total / static_cast<double>(n) : Complex{};
    double var = 0;
    for (auto m : means) var += std::norm(m - mean);
    var /= static_cast<double>(kBatches * (kBatches - 1));
    out[i] = {scale * mean, scale * std::sqrt(var)};
  }
  return out;
}

Amplitude fb_window(const PeakIndex& n, const DeformationParams& p, std::size_t samples,
                    std::uint64_t seed) {
  return fb_window(std::vector{n}, p, window_samples(samples, seed)).front();
}

std::vector<double> deformed_positions(double L, const DeformationParams& p) {
  const auto sites = ms::sites_in_range(L);
  std::vector<double> out;
  out.reserve(sites.size());
  for (const auto& s : sites) {
    const Complex z = embed_internal(s.pos);
    out.push_back(embed_real(s.pos) + p.a_numeric * z.real() + p.b_numeric * z.imag());
  }
  return out;
}

std::vector<Complex> fb_sum(const std::vector<PeakIndex>& peaks, const std::vector<double>& points,
                            double L) {
  const auto& d = dual_basis();
  std::array<double, 3> pj{};
  for (std::size_t j = 0; j < 3; ++j) pj[j] = embed_real(d.pi[j]);
  const long bound = max_abs(peaks);
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (points.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<Complex>> part(chunks, std::vector<Complex>(peaks.size()));
  parallel_for(chunks, [&](std::size_t c) {
    PhaseTable table(bound);
    for (std::size_t s = c * kChunk; s < std::min(points.size(), (c + 1) * kChunk); ++s) {
      std::array<Complex, 3> base;
      for (std::size_t j = 0; j < 3; ++j) base[j] = std::polar(1.0, -2 * std::numbers::pi * pj[j] * points[s]);
      table.set(base);
      for (std::size_t i = 0; i < peaks.size(); ++i) part[c][i] += table.at(peaks[i]);
    }
  });
  std::vector<Complex> out(peaks.size());
  for (const auto& p : part)
    for (std::size_t i = 0; i < peaks.size(); ++i) out[i] += p[i];
  for (auto& v : out) v /= 2 * L;
  return out;
}

Complex fb_sum(const PeakIndex& n, const DeformationParams& p, double L) {
  return fb_sum(std::vector{n}, deformed_positions(L, p), L).front();
}

Complex exponential_sum(double k, const std::vector<double>& points, double L) {
  Complex s = 0;
  for (double x : points) s += std::polar(1.0, -2 * std::numbers::pi * k * x);
  return s / (2 * L);
}

std::vector<PeakIndex> peak_indices(int bound) {
  if (bound < 0 || bound > limits::kMaxIndexBound) throw ResourceLimit("index bound above 10");
  std::vector<std::pair<double, PeakIndex>> keyed;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        const PeakIndex n{a, b, c};
        keyed.emplace_back(peak_position(n).k_numeric, n);
      }
  std::ranges::sort(keyed);
  std::vector<PeakIndex> out;
  out.reserve(keyed.size());
  for (const auto& [_, n] : keyed) out.push_back(n);
  return out;
}

std::vector<SpectrumEntry> spectrum_table(Deformation d, Method m, const SpectrumConfig& cfg) {
  if (cfg.samples > limits::kMaxSamples) throw ResourceLimit("sample count above cap");
  if (cfg.L > 1e6) throw ResourceLimit("sum range above 1e6");
  const auto peaks = peak_indices(cfg.bound);
  const auto& p = deformation_params(d);
  std::vector<SpectrumEntry> out(peaks.size());
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    out[i].index = peaks[i];
    out[i].k = peak_position(peaks[i]).k_numeric;
    out[i].method = m;
  }
  if (m == Method::window) {
    const auto amp = fb_window(peaks, p, window_samples(cfg.samples, cfg.seed));
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      out[i].amplitude = amp[i].value;
      out[i].std_error = amp[i].std_error;
    }
  } else {
    const auto amp = fb_sum(peaks, deformed_positions(cfg.L, p), cfg.L);
    for (std::size_t i = 0; i < peaks.size(); ++i) out[i].amplitude = amp[i];
  }
  for (auto& e : out) e.intensity = std::norm(e.amplitude);
  return out;
}

std::array<CubicNumber, 2> periodicity_brackets(const DeformationParams& p) {
  const auto& d = dual_basis();
  const std::array<long, 3> m{p.period_shift.nA, p.period_shift.nB, p.period_shift.nC};
  const CubicNumber lambda = p.unit.inverse();
  CubicNumber sq, st;
  for (std::size_t j = 0; j < 3; ++j) {
    sq += CubicNumber(m[j]) * d.w[j].q;
    st += CubicNumber(m[j]) * d.w[j].t;
  }
  return {p.a * lambda - sq, p.b_cofactor * lambda - st};
}

std::vector<PeakIndex> periodicity_peaks() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},  {0, 0, 1},  {1, 1, 0},
          {1, 0, 1}, {0, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
}

Report periodicity_check(Deformation d, const std::vector<PeakIndex>& peaks, double L,
                         double tolerance) {
  const auto& p = deformation_params(d);
  Report r;
  r.suite = "periodicity";
  r.parameters["params"] = std::string(name(d));
  r.parameters["L"] = std::to_string(static_cast<long>(L));
  if (d != Deformation::none) {
    const auto br = periodicity_brackets(p);
    r.add("bracket a/unit - sum q is exactly zero", br[0].is_zero(), br[0].to_string());
    r.add("bracket b/unit - sum t is exactly zero", br[1].is_zero(), br[1].to_string());
    r.add("period shift lands on 1/unit exactly",
          peak_position(p.period_shift).k == p.unit.inverse());
  }
  std::vector<PeakIndex> all = peaks;
  for (const auto& n : peaks) all.push_back(n + p.period_shift);
  const auto amp = fb_sum(all, deformed_positions(L, p), L);
  double worst = 0;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const double diff = std::abs(amp[i] - amp[i + peaks.size()]);
    worst = std::max(worst, diff);
    if (d != Deformation::none) {
      const auto& n = peaks[i];
      r.add("|c(" + std::to_string(n.nA) + "," + std::to_string(n.nB) + "," + std::to_string(n.nC) +
                ") - c(shifted)|",
            diff <= tolerance, diff, tolerance);
    }
  }
  if (d == Deformation::none)
    r.add("undeformed spectrum is not periodic", worst > tolerance, worst, tolerance,
          "largest difference over the shifted pairs");
  return r;
}

Report verify_deformation(std::size_t n) {
  Report r;
  r.suite = "deformation";
  r.parameters["n"] = std::to_string(n);
  const auto sites = ms::central_sites(n);
  const auto& lat = ms::lattice_basis();
  const double tol = 1e-5;
  auto close = [&](std::string label, double got, double want) {
    r.add(std::move(label), std::abs(got - want) <= tol, got, want);
  };

  for (Deformation d : {Deformation::equal_lengths, Deformation::integer_lengths}) {
    const auto& p = deformation_params(d);
    const std::string tag(name(d));
    bool system = true;
    for (std::size_t i = 0; i < 3; ++i) system = system && deform(lat.v[i].physical, p) == p.lengths[i];
    r.add(tag + ": bond lengths map to the target lengths exactly", system);

    const auto y = deform_sites(sites, p);
    bool gaps = true;
    bool monotone = true;
    for (std::size_t i = 1; i < y.size(); ++i) {
      const CubicNumber g = y[i] - y[i - 1];
      gaps = gaps && g == p.lengths[seq::index(sites[i - 1].letter)];
      monotone = monotone && embed_real_hp(g) > 0;
    }
    r.add(tag + ": consecutive gaps exact", gaps);
    r.add(tag + ": order preserved", monotone);
    if (d == Deformation::equal_lengths) {
      const CubicNumber inv = p.unit.inverse();
      bool consecutive = true;
      for (std::size_t i = 0; i < y.size() && consecutive; ++i) {
        const CubicNumber q = y[i] * inv;
        const Rational expected = Rational(static_cast<long>(i)) - Rational(static_cast<long>(n / 2));
        consecutive = q == CubicNumber(expected);
      }
      r.add(tag + ": positions are l times consecutive integers", consecutive);
    }
  }
  // Independent route: solve (v_i)_1 + a (v_i)_2 + b (v_i)_3 = w_i u in
  // double precision by Cramer's rule.
  auto solve = [&](std::array<double, 3> w) {
    std::array<std::array<double, 3>, 3> m;
    std::array<double, 3> rhs;
    for (std::size_t i = 0; i < 3; ++i) {
      m[i] = {lat.matrix[i][1], lat.matrix[i][2], -w[i]};
      rhs[i] = -lat.matrix[i][0];
    }
    auto det = [](const std::array<std::array<double, 3>, 3>& x) {
      return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
             x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
             x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
    };
    const double d = det(m);
    std::array<double, 3> out{};
    for (std::size_t c = 0; c < 3; ++c) {
      auto mc = m;
      for (std::size_t i = 0; i < 3; ++i) mc[i][c] = rhs[i];
      out[c] = det(mc) / d;
    }
    return out;
  };
  const auto& eq = deformation_params(Deformation::equal_lengths);
  const auto& in = deformation_params(Deformation::integer_lengths);
  const auto se = solve({1, 1, 1});
  const auto si = solve({6, 4, 2});
  close("equal_lengths a", eq.a_numeric, se[0]);
  close("equal_lengths b", eq.b_numeric, se[1]);
  close("equal_lengths l", embed_real(eq.unit), se[2]);
  close("integer_lengths l~", embed_real(integer_length_unit()), si[2]);
  close("integer_lengths a~", in.a_numeric, si[0]);
  close("integer_lengths b~", in.b_numeric, si[1]);
  r.add("a = l - 1", eq.a == seq::substitution_data().perron.mean_length - CubicNumber(1));
  return r;
}

}  // namespace kol::dif

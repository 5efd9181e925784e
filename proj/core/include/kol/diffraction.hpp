#pragma once

// Dual lattice, peak positions and Fourier-Bohr amplitudes of the model set
// and of its linear deformations x -> x + a Re(x*) + b Im(x*).

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "kol/cubic_field.hpp"
#include "kol/modelset.hpp"
#include "kol/report.hpp"
#include "kol/rng.hpp"

namespace kol::dif {

/// Dual vector w_j = (p_j, q_j, Im(beta) t_j) with p, q, t in Q(alpha).
struct DualVector {
  CubicNumber p;
  CubicNumber q;
  CubicNumber t;
  std::array<double, 3> numeric{};
};

struct DualBasis {
  std::array<DualVector, 3> w;
  /// Physical projections p_A, p_B, p_C.
  std::array<CubicNumber, 3> pi;
};

/// Solved exactly over Q(alpha); throws DegenerateGeometry if singular.
const DualBasis& dual_basis();

struct PeakIndex {
  long nA = 0;
  long nB = 0;
  long nC = 0;
  friend bool operator==(const PeakIndex&, const PeakIndex&) = default;
  friend auto operator<=>(const PeakIndex&, const PeakIndex&) = default;
  PeakIndex operator-() const { return {-nA, -nB, -nC}; }
  PeakIndex operator+(const PeakIndex& o) const { return {nA + o.nA, nB + o.nB, nC + o.nC}; }
};

struct PeakPosition {
  CubicNumber k;
  /// Internal companion as Re + i Im(beta) S.
  InternalPoint k_star;
  double k_numeric = 0;
  Complex k_star_numeric;
};
PeakPosition peak_position(const PeakIndex& n);

enum class Deformation { none, equal_lengths, integer_lengths };
std::string_view name(Deformation d);
/// Accepts none|equal|integer and the long names; throws UnknownName.
Deformation deformation_from_name(std::string_view s);

struct DeformationParams {
  Deformation kind = Deformation::none;
  CubicNumber a;
  /// b = Im(beta) * b_cofactor.
  CubicNumber b_cofactor;
  /// Common multiple of the deformed bond lengths (l, or 2 l~).
  CubicNumber unit;
  /// Bond lengths after deformation for A, B, C.
  std::array<CubicNumber, 3> lengths;
  /// Index step (for unit^-1) in the dual lattice.
  PeakIndex period_shift;
  double a_numeric = 0;
  double b_numeric = 0;
};
const DeformationParams& deformation_params(Deformation d);

/// l~ = (7 alpha^2 - 15 alpha + 1) / 4.
CubicNumber integer_length_unit();

/// Deformed position x + a R(x) + b_cofactor Im(beta)^2 S(x), exact.
CubicNumber deform(const CubicNumber& x, const DeformationParams& p);
std::vector<CubicNumber> deform_sites(const std::vector<ms::SitePoint>& sites,
                                      const DeformationParams& p);

enum class Method { window, sum };
std::string_view name(Method m);

struct Amplitude {
  Complex value;
  double std_error = 0;
};

/// Area-uniform samples of Omega shared by every peak of one evaluation.
struct WindowSamples {
  std::vector<Complex> points;
  std::uint64_t seed = 0;
};
WindowSamples window_samples(std::size_t n, std::uint64_t seed);

/// (1/|Gamma|) * integral over Omega of exp(-2 pi i (k phi(y) - k*.y)),
/// as the mean over the samples times 1/l, with a 20-batch standard error.
std::vector<Amplitude> fb_window(const std::vector<PeakIndex>& peaks, const DeformationParams& p,
                                 const WindowSamples& samples);
Amplitude fb_window(const PeakIndex& n, const DeformationParams& p, std::size_t samples,
                    std::uint64_t seed);

/// Numeric positions x + phi(x*) of the sites in [-L, L].
std::vector<double> deformed_positions(double L, const DeformationParams& p);

/// (1/2L) * sum over the points of exp(-2 pi i k x).
std::vector<Complex> fb_sum(const std::vector<PeakIndex>& peaks, const std::vector<double>& points,
                            double L);
Complex fb_sum(const PeakIndex& n, const DeformationParams& p, double L);

/// Same estimator at an arbitrary k.
Complex exponential_sum(double k, const std::vector<double>& points, double L);

struct SpectrumEntry {
  PeakIndex index;
  double k = 0;
  Complex amplitude;
  double intensity = 0;
  Method method = Method::window;
  double std_error = 0;
};

struct SpectrumConfig {
  int bound = 3;
  std::size_t samples = 1'000'000;
  double L = 50'000;
  std::uint64_t seed = kDefaultSeed;
};

/// All peaks with |n_i| <= bound, sorted by k then index.
std::vector<PeakIndex> peak_indices(int bound);
std::vector<SpectrumEntry> spectrum_table(Deformation d, Method m, const SpectrumConfig& cfg);

/// Square-bracket terms a*unit^-1 - sum q and b_cofactor*unit^-1 - sum t of
/// the period shift; both vanish exactly for the two deformations.
std::array<CubicNumber, 2> periodicity_brackets(const DeformationParams& p);

/// Peaks compared under the default period shift by the exponential sum.
std::vector<PeakIndex> periodicity_peaks();
Report periodicity_check(Deformation d, const std::vector<PeakIndex>& peaks, double L,
                         double tolerance = 0.01);

Report verify_deformation(std::size_t n);

}  // namespace kol::dif

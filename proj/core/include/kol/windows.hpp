#pragma once

// Affine similarities of the internal plane, the windows Omega_A, Omega_B,
// Omega_C and Omega_AB they generate, their boundary, and the numerical
// certificates built on top (rhombus margins, membership, tiling, area,
// box-counting dimension).

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "kol/cubic_field.hpp"
#include "kol/geometry.hpp"
#include "kol/report.hpp"

namespace kol::win {

/// z -> mult * z + off, exact.
struct AffineSimilarity {
  InternalPoint mult{CubicNumber(1)};
  InternalPoint off{};

  InternalPoint operator()(const InternalPoint& z) const { return mult * z + off; }
  friend bool operator==(const AffineSimilarity&, const AffineSimilarity&) = default;
};

/// (a o b)(z) = a(b(z)).
AffineSimilarity map_compose(const AffineSimilarity& a, const AffineSimilarity& b);

/// Numeric copy of an AffineSimilarity for hot loops.
struct NumericMap {
  Complex m{1, 0};
  Complex d{0, 0};

  Complex operator()(Complex z) const { return m * z + d; }
  Complex inverse(Complex z) const { return (z - d) / m; }
  NumericMap then(const NumericMap& inner) const { return {m * inner.m, m * inner.d + d}; }
  double ratio() const { return std::abs(m); }
};

NumericMap numeric(const AffineSimilarity& f);

/// Exact inverse in the internal plane; throws DivisionByZero at 0.
InternalPoint inverse(const InternalPoint& z);

/// c0 + c1*beta + c2*beta^2 as an InternalPoint.
InternalPoint beta_poly(const Rational& c0, const Rational& c1, const Rational& c2);

/// Unique fixed point off / (1 - mult); throws DegenerateGeometry for
/// translations.
InternalPoint fixed_point(const AffineSimilarity& f);

enum class MapId { identity, f0, f1, f2, f3, f4, g1, g2, g3, tau, kappa };

const AffineSimilarity& get_map(MapId id);
/// Composition left to right: compose({a, b, c}) = a o b o c.
AffineSimilarity compose(std::initializer_list<MapId> ids);
std::string_view name(MapId id);
/// Throws UnknownName.
MapId map_from_name(std::string_view s);

struct SpecialPoints {
  /// P[1] ... P[14]; P[0] is unused.
  std::array<InternalPoint, 15> P;
  /// E[1] ... E[4]; E[0] is unused.
  std::array<Complex, 5> E;
  std::array<Complex, 15> Pn;
};

const SpecialPoints& special_points();

Report verify_map_identities();
Report verify_point_identities();

enum class WindowLabel { A, B, C, AB, Omega };
std::string_view name(WindowLabel l);
/// Throws UnknownName.
WindowLabel window_from_name(std::string_view s);

/// Seed of every cloud and centre of the inversion tau.
Complex seed_point();

/// Radius of a disk about the seed that contains Omega_AB.
double omega_ab_radius();

struct PointCloud {
  std::string label;
  std::vector<Complex> points;
  /// Index of the first map applied (0..3 for f1,f2,f3,f4), for shading.
  std::vector<std::uint8_t> piece;
  int depth = -1;
  std::size_t samples = 0;
  std::string mode;
  std::uint64_t seed = 0;
  /// Every point of the represented set lies within this distance of a
  /// cloud point.
  double enclosure = 0;
};

/// Words with combined contraction at most |beta|^depth (f1, f3 count 1,
/// f2 counts 3) applied to the seed. Throws ResourceLimit above the caps.
PointCloud attractor_cloud(WindowLabel label, int depth);

/// Independent area-uniform samples: each sample applies `steps` random maps
/// to the seed with squared-ratio probabilities.
PointCloud attractor_sample(WindowLabel label, std::size_t n, std::uint64_t seed, int steps = 48);

/// Number of leaves attractor_cloud(AB, depth) would produce.
std::size_t attractor_leaf_count(int depth);

/// The composed maps F_w of those leaves, in the same order.
std::vector<NumericMap> attractor_leaf_maps(int depth);

enum class BoundaryScope {
  edge,       // [P2, P3]
  omega_ab,   // all four edges of Omega_AB
  omega,      // boundary of Omega_A, Omega_B, Omega_C together
};

/// Ordered points of [P2,P3] at contraction depth (g1, g3 count 2, g2
/// counts 3), expanded to the requested scope.
PointCloud boundary_cloud(int depth, BoundaryScope scope = BoundaryScope::edge);

/// The rhombus with corners E1..E4 and its images under g-words.
geom::Quad rhombus();

/// Containment, disjointness and neighbouring-intersection checks.
Report rhombus_verify(double threshold = 1e-6);

enum class Verdict { Inside, Outside, Undecided };
std::string_view name(Verdict v);

/// Certified membership test for a window at the origin.
Verdict membership(Complex z, WindowLabel label = WindowLabel::AB, int max_depth = 30);

struct InnerPointResult {
  double distance_zero = 0;
  double distance_minus_beta = 0;
  Verdict zero = Verdict::Undecided;
  Verdict minus_beta = Verdict::Undecided;
};
InnerPointResult inner_point_distances(int depth = 18);
Report inner_point_check(int depth = 18, double threshold = 0.01);

/// Lattice of periods of Omega: 1 - beta and beta^2 - 2 beta.
std::array<Complex, 2> tiling_lattice();

struct TilingResult {
  std::size_t samples = 0;
  std::size_t decided = 0;
  std::size_t exactly_once = 0;
  std::size_t multiply_covered = 0;
  std::size_t uncovered = 0;
};
TilingResult tiling_check(std::size_t n, std::uint64_t seed, int max_depth = 30);

struct AreaEstimate {
  double value = 0;
  double std_error = 0;
  std::size_t samples = 0;
  std::size_t undecided = 0;
};
/// Throws Error below 10^4 samples.
AreaEstimate area_estimate(WindowLabel label, std::size_t samples, std::uint64_t seed,
                           int max_depth = 30);

/// Exact area |Im beta| (alpha^2 - alpha) of Omega.
double omega_area();

struct DimensionEstimate {
  double slope = 0;
  geom::BoxCount counts;
};
/// Box counting on the edge cloud over dyadic scales above the cloud
/// resolution. Throws Error below depth 12.
DimensionEstimate boundary_dimension(int depth);
/// Same estimator on the straight segment [P2, P3] sampled at `points` evenly
/// spaced positions.
DimensionEstimate segment_dimension(std::size_t points = 65537);
/// -log(golden ratio) / log|beta|.
double boundary_dimension_target();

Report ifs_consistency(int depth);

}  // namespace kol::win

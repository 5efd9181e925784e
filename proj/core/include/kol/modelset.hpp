#pragma once

// The cut-and-project scheme R x C with lattice Gamma spanned by
// (l_i, l_i*) for the tile lengths l_A, l_B, l_C, the point set of left
// endpoints of the bi-infinite (3,1) block tiling, and the finite checks
// that tie the two together.

#include <array>
#include <cstdint>
#include <vector>

#include "kol/cubic_field.hpp"
#include "kol/report.hpp"
#include "kol/sequences.hpp"
#include "kol/windows.hpp"

namespace kol::ms {

struct LatticeVector {
  CubicNumber physical;
  InternalPoint internal;
};

struct LatticeBasis {
  /// v_A, v_B, v_C.
  std::array<LatticeVector, 3> v;
  /// Row i: (physical, Re internal, Im internal) of v_i.
  std::array<std::array<double, 3>, 3> matrix{};
  double determinant = 0;
  /// |Gamma| / Im(beta) = 3 alpha^2 - 4 alpha, exact.
  CubicNumber covolume_cofactor;
};

const LatticeBasis& lattice_basis();

/// |Gamma| evaluated from the exact cofactor.
double covolume();

/// Galois conjugate alpha -> beta, exact.
InternalPoint star(const CubicNumber& x);

/// l_A, l_B, l_C in Z[alpha].
const std::array<CubicInt, 3>& tile_lengths();

struct SitePoint {
  CubicInt pos;
  seq::Letter letter = seq::Letter::A;
  friend bool operator==(const SitePoint&, const SitePoint&) = default;
};

/// Left endpoints of the tiling of the bi-infinite block word B|A, sorted by
/// position: n_left sites left of 0 and n_right sites from 0 on. Site 0
/// carries A and site -alpha carries B.
std::vector<SitePoint> sigma_kol_sites(std::size_t n_right, std::size_t n_left);

/// All sites in [-L, L].
std::vector<SitePoint> sites_in_range(double L);

/// n/2 sites on each side of the seam (the extra one on the right).
std::vector<SitePoint> central_sites(std::size_t n);

win::WindowLabel window_of(seq::Letter l);

struct SubsetResult {
  std::size_t sites = 0;
  std::size_t inside = 0;
  std::size_t outside = 0;
  std::size_t undecided = 0;
  /// Sites whose three letter-window verdicts are all decided.
  std::size_t decided = 0;
  /// Of those, sites inside their own window and outside the other two.
  std::size_t agree = 0;
};
SubsetResult window_subset(std::size_t n, int depth);
Report verify_window_subset(std::size_t n, int depth);

struct DensityResult {
  double L = 0;
  std::size_t count = 0;
  double density = 0;
  std::array<double, 3> by_letter{};
};
/// Sites in [-L, L] divided by 2L. Throws ResourceLimit below L = 100.
DensityResult density_empirical(double L);

/// (alpha^2 - alpha) * l == 3 alpha^2 - 4 alpha.
bool density_identity();

struct GenericityResult {
  std::size_t sites = 0;
  int depth = 0;
  /// Smallest distance from a star image to the boundary cloud of Omega.
  double min_distance = 0;
  /// min_distance minus the cloud's enclosure radius.
  double lower_bound = 0;
  double enclosure = 0;
  /// Counts of distances in [10^-(i+1), 10^-i) for i = 0..7, last bin below.
  std::array<std::size_t, 9> histogram{};
};
GenericityResult genericity_probe(std::size_t n, int depth);

/// Distance from each point to the depth-d boundary cloud of Omega.
std::vector<double> boundary_distances(const std::vector<Complex>& points, int depth);

struct SymmetryResult {
  bool symmetric = false;
  double half_width = 0;
  std::size_t sites = 0;
  std::size_t unmatched = 0;
};
/// A and B sites of central_sites(n) within [-alpha/2 - L, -alpha/2 + L]
/// for the largest L the patch covers, compared exactly with their images
/// under x -> -alpha - x.
SymmetryResult inversion_symmetry_check(std::size_t n);

/// Generators 1 - alpha, alpha^2 - 2 alpha of G'.
std::array<CubicInt, 2> coset_generators();

struct CosetResult {
  long m = 0;
  long n = 0;
  SitePoint site;
  std::size_t hits = 0;
  std::size_t undecided = 0;
};
/// Searches |m|, |n| <= radius for x - m g1 - n g2 in the model set.
/// Throws NotFound when nothing is found.
CosetResult coset_locate(const CubicInt& x, long radius = 5, int depth = 30);

struct WindowSpec {
  win::WindowLabel label = win::WindowLabel::Omega;
  Complex shift{0, 0};
};

struct CutProjectResult {
  std::vector<SitePoint> sites;
  std::size_t candidates = 0;
  std::size_t undecided = 0;
};
/// Lattice points with physical part in [-L, L] and star image inside
/// shift + window, letter taken from the sub-window that contains it.
CutProjectResult cut_and_project(const WindowSpec& spec, double L, int depth = 30);

/// Positions in [0, radius] of the difference set Lambda - Lambda over the
/// sites in [-L, L], and the smallest gap between them.
struct MeyerResult {
  std::size_t distinct = 0;
  double min_gap = 0;
};
MeyerResult meyer_gap(double L, double radius = 10);

/// Every gap between consecutive sites is exactly l_A, l_B or l_C, and
/// belongs to the letter on its left.
bool bond_lengths_exact(const std::vector<SitePoint>& sites);

}  // namespace kol::ms

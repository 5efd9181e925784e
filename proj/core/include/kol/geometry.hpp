#pragma once

// Planar helpers on std::complex<double>: convex polygons with signed
// margins, a uniform-grid nearest-neighbour index, and box counting.

#include <array>
#include <complex>
#include <span>
#include <unordered_map>
#include <vector>

namespace kol::geom {

using Complex = std::complex<double>;

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Convex polygon with counter-clockwise vertices.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// Reorders to counter-clockwise; throws DegenerateGeometry when the
  /// vertices are collinear or the polygon is not convex.
  explicit ConvexPolygon(std::vector<Complex> vertices);

  std::span<const Complex> vertices() const { return v_; }
  double area() const;

  /// Minimum signed distance of p to the edge lines, positive inside.
  double inside_margin(Complex p) const;
  /// Euclidean distance from p to the polygon (0 inside).
  double distance(Complex p) const;

 private:
  std::vector<Complex> v_;
};

using Quad = ConvexPolygon;

/// Largest gap along any edge normal of either polygon; positive means the
/// polygons are disjoint, negative means they overlap by that depth.
double separation(const ConvexPolygon& a, const ConvexPolygon& b);

/// Smallest inside_margin of the vertices of `inner` w.r.t. `outer`;
/// positive means strict containment.
double containment_margin(const ConvexPolygon& inner, const ConvexPolygon& outer);

/// Andrew's monotone chain; returns counter-clockwise hull.
std::vector<Complex> convex_hull(std::vector<Complex> points);

/// Uniform grid for nearest-neighbour queries on a static cloud.
class PointIndex {
 public:
  PointIndex(std::span<const Complex> points, double cell);
  /// Distance to the closest stored point (infinity if empty).
  double nearest_distance(Complex p) const;
  std::size_t size() const { return points_.size(); }

 private:
  using Key = std::pair<long, long>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<long>()(k.first * 73856093L ^ k.second * 19349663L);
    }
  };
  Key key(Complex p) const;

  std::vector<Complex> points_;
  double cell_;
  long max_ring_ = 0;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> grid_;
};

/// Symmetric Hausdorff distance between two clouds.
double hausdorff(std::span<const Complex> a, std::span<const Complex> b, double cell);

struct BoxCount {
  std::vector<double> epsilon;
  std::vector<double> count;
  double slope = 0;
};

/// Occupied-box counts at each epsilon and the least-squares slope of
/// log N against log(1/epsilon).
BoxCount box_counting(std::span<const Complex> points, std::span<const double> epsilons);

}  // namespace kol::geom

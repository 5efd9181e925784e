#include "kol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "kol/error.hpp"

namespace kol::geom {

ConvexPolygon::ConvexPolygon(std::vector<Complex> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw DegenerateGeometry("polygon needs at least three vertices");
  double a = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) a += cross(v_[i], v_[(i + 1) % v_.size()]);
  if (a < 0) std::reverse(v_.begin(), v_.end());
  const double scale = std::abs(a) + 1e-300;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Complex e0 = v_[(i + 1) % v_.size()] - v_[i];
    const Complex e1 = v_[(i + 2) % v_.size()] - v_[(i + 1) % v_.size()];
    const double turn = cross(e0, e1);
    if (std::abs(turn) <= 1e-14 * scale) throw DegenerateGeometry("collinear polygon vertices");
    if (turn < 0) throw DegenerateGeometry("polygon is not convex");
  }
}

double ConvexPolygon::area() const {
  double a = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) a += cross(v_[i], v_[(i + 1) % v_.size()]);
  return a / 2;
}

double ConvexPolygon::inside_margin(Complex p) const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Complex e = v_[(i + 1) % v_.size()] - v_[i];
    m = std::min(m, cross(e, p - v_[i]) / std::abs(e));
  }
  return m;
}

double ConvexPolygon::distance(Complex p) const {
  if (inside_margin(p) >= 0) return 0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Complex a = v_[i];
    const Complex e = v_[(i + 1) % v_.size()] - a;
    double t = std::real((p - a) * std::conj(e)) / std::norm(e);
    t = std::clamp(t, 0.0, 1.0);
    d = std::min(d, std::abs(p - (a + t * e)));
  }
  return d;
}

double separation(const ConvexPolygon& a, const ConvexPolygon& b) {
  double best = -std::numeric_limits<double>::infinity();
  auto scan = [&](const ConvexPolygon& poly, const ConvexPolygon& other) {
    const auto v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Complex e = v[(i + 1) % v.size()] - v[i];
      // outward normal of a counter-clockwise polygon
      const Complex n = Complex(e.imag(), -e.real()) / std::abs(e);
      double hi = -std::numeric_limits<double>::infinity();
      for (auto z : v) hi = std::max(hi, std::real(z * std::conj(n)));
      double lo = std::numeric_limits<double>::infinity();
      for (auto z : other.vertices()) lo = std::min(lo, std::real(z * std::conj(n)));
      best = std::max(best, lo - hi);
    }
  };
  scan(a, b);
  scan(b, a);
  return best;
}

double containment_margin(const ConvexPolygon& inner, const ConvexPolygon& outer) {
  double m = std::numeric_limits<double>::infinity();
  for (auto z : inner.vertices()) m = std::min(m, outer.inside_margin(z));
  return m;
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Complex> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i - 1] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

PointIndex::PointIndex(std::span<const Complex> points, double cell)
    : points_(points.begin(), points.end()), cell_(cell) {
  long lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Key k = key(points_[i]);
    grid_[k].push_back(i);
    if (first) {
      lo_x = hi_x = k.first;
      lo_y = hi_y = k.second;
      first = false;
    }
    lo_x = std::min(lo_x, k.first);
    hi_x = std::max(hi_x, k.first);
    lo_y = std::min(lo_y, k.second);
    hi_y = std::max(hi_y, k.second);
  }
  max_ring_ = std::max(hi_x - lo_x, hi_y - lo_y) + 1;
}

PointIndex::Key PointIndex::key(Complex p) const {
  return {static_cast<long>(std::floor(p.real() / cell_)),
          static_cast<long>(std::floor(p.imag() / cell_))};
}

double PointIndex::nearest_distance(Complex p) const {
  if (points_.empty()) return std::numeric_limits<double>::infinity();
  const Key c = key(p);
  double best = std::numeric_limits<double>::infinity();
  // Ring r covers all points within distance r*cell; stop once the best
  // candidate is provably closer than anything in later rings.
  for (long r = 0;; ++r) {
    for (long dx = -r; dx <= r; ++dx) {
      for (long dy = -r; dy <= r; ++dy) {
        if (std::max(std::labs(dx), std::labs(dy)) != r) continue;
        auto it = grid_.find({c.first + dx, c.second + dy});
        if (it == grid_.end()) continue;
        for (auto i : it->second) best = std::min(best, std::abs(points_[i] - p));
      }
    }
    if (best <= static_cast<double>(r) * cell_) break;
    if (r > max_ring_ + std::labs(c.first) + std::labs(c.second) + 2) break;
  }
  return best;
}

double hausdorff(std::span<const Complex> a, std::span<const Complex> b, double cell) {
  PointIndex ia(a, cell), ib(b, cell);
  double d = 0;
  for (auto z : a) d = std::max(d, ib.nearest_distance(z));
  for (auto z : b) d = std::max(d, ia.nearest_distance(z));
  return d;
}

BoxCount box_counting(std::span<const Complex> points, std::span<const double> epsilons) {
  BoxCount bc;
  struct PairHash {
    std::size_t operator()(const std::pair<long, long>& k) const noexcept {
      return std::hash<long>()(k.first * 73856093L ^ k.second * 19349663L);
    }
  };
  for (double eps : epsilons) {
    std::unordered_set<std::pair<long, long>, PairHash> boxes;
    boxes.reserve(points.size());
    for (auto z : points)
      boxes.insert({static_cast<long>(std::floor(z.real() / eps)),
                    static_cast<long>(std::floor(z.imag() / eps))});
    bc.epsilon.push_back(eps);
    bc.count.push_back(static_cast<double>(boxes.size()));
  }
  const std::size_t n = bc.epsilon.size();
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = std::log(1.0 / bc.epsilon[i]);
      const double y = std::log(bc.count[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    bc.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return bc;
}

}  // namespace kol::geom

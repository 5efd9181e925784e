#include <algorithm>
#include <cmath>
#include <vector>

#include "kol/windows.hpp"

namespace kol::win {

namespace {

// Inverse-map descent for Omega_AB.
//
// Outer certificate: Omega_AB lies in the convex hull of a depth-12 cloud
// dilated by the cloud's enclosure radius, and in the disk of radius
// omega_ab_radius() about the seed.
// Inner certificate: disks centred at attractor points F_w(0) (0 is fixed by
// f1, so these lie in Omega_AB) whose radius is a lower bound for the
// distance to the boundary cloud minus that cloud's enclosure radius.
class Oracle {
 public:
  Oracle() {
    centre_ = seed_point();
    radius_ = omega_ab_radius();

    const PointCloud hull_cloud = attractor_cloud(WindowLabel::AB, kHullDepth);
    hull_ = geom::ConvexPolygon(geom::convex_hull(hull_cloud.points));
    slack_ = hull_cloud.enclosure + 1e-12;

    const std::array<MapId, 3> ids{MapId::f1, MapId::f2, MapId::f3};
    for (std::size_t i = 0; i < 3; ++i) f_[i] = numeric(get_map(ids[i]));

    const PointCloud boundary = boundary_cloud(kBoundaryDepth, BoundaryScope::omega_ab);
    const geom::PointIndex index(boundary.points, 0.02);
    for (const auto& m : attractor_leaf_maps(kDiskDepth)) {
      const Complex c = m.d;  // F_w(0)
      const double r = index.nearest_distance(c) - boundary.enclosure - 1e-12;
      if (r > 0) {
        disk_centre_.push_back(c);
        disk_radius_.push_back(r);
      }
    }
    build_grid();
  }

  Verdict contains(Complex z, int max_depth) const {
    struct Node {
      Complex z;
      int level;
    };
    std::vector<Node> stack{{z, 0}};
    bool undecided = false;
    std::size_t visited = 0;
    while (!stack.empty()) {
      const Node node = stack.back();
      stack.pop_back();
      if (!maybe_inside(node.z)) continue;
      if (certainly_inside(node.z)) return Verdict::Inside;
      if (node.level >= max_depth || ++visited > kNodeBudget) {
        undecided = true;
        continue;
      }
      for (std::size_t i = 0; i < 3; ++i)
        stack.push_back({f_[i].inverse(node.z), node.level + kWeight[i]});
    }
    return undecided ? Verdict::Undecided : Verdict::Outside;
  }

 private:
  static constexpr int kHullDepth = 12;
  static constexpr int kBoundaryDepth = 20;
  static constexpr int kDiskDepth = 12;
  static constexpr std::size_t kNodeBudget = 200000;
  static constexpr std::array<int, 3> kWeight{1, 3, 1};
  static constexpr double kCell = 0.01;

  bool maybe_inside(Complex z) const {
    if (std::abs(z - centre_) > radius_) return false;
    return hull_.distance(z) <= slack_;
  }

  bool certainly_inside(Complex z) const {
    const long ix = static_cast<long>(std::floor((z.real() - x0_) / kCell));
    const long iy = static_cast<long>(std::floor((z.imag() - y0_) / kCell));
    if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) return false;
    const std::size_t cell = static_cast<std::size_t>(iy * nx_ + ix);
    if (full_[cell]) return true;
    for (auto k : lists_[cell])
      if (std::abs(z - disk_centre_[k]) < disk_radius_[k]) return true;
    return false;
  }

  void build_grid() {
    x0_ = centre_.real() - radius_;
    y0_ = centre_.imag() - radius_;
    nx_ = ny_ = static_cast<long>(std::ceil(2 * radius_ / kCell)) + 1;
    full_.assign(static_cast<std::size_t>(nx_ * ny_), 0);
    lists_.assign(static_cast<std::size_t>(nx_ * ny_), {});
    for (std::size_t k = 0; k < disk_centre_.size(); ++k) {
      const Complex c = disk_centre_[k];
      const double r = disk_radius_[k];
      const long ix0 = std::max(0L, static_cast<long>(std::floor((c.real() - r - x0_) / kCell)));
      const long ix1 = std::min(nx_ - 1, static_cast<long>(std::floor((c.real() + r - x0_) / kCell)));
      const long iy0 = std::max(0L, static_cast<long>(std::floor((c.imag() - r - y0_) / kCell)));
      const long iy1 = std::min(ny_ - 1, static_cast<long>(std::floor((c.imag() + r - y0_) / kCell)));
      for (long iy = iy0; iy <= iy1; ++iy) {
        for (long ix = ix0; ix <= ix1; ++ix) {
          const std::size_t cell = static_cast<std::size_t>(iy * nx_ + ix);
          if (full_[cell]) continue;
          const double lx = x0_ + static_cast<double>(ix) * kCell;
          const double ly = y0_ + static_cast<double>(iy) * kCell;
          // farthest and nearest points of the cell from the centre
          const double fx = std::max(std::abs(lx - c.real()), std::abs(lx + kCell - c.real()));
          const double fy = std::max(std::abs(ly - c.imag()), std::abs(ly + kCell - c.imag()));
          if (std::hypot(fx, fy) < r) {
            full_[cell] = 1;
            lists_[cell].clear();
            continue;
          }
          const double nxd = std::max({lx - c.real(), 0.0, c.real() - lx - kCell});
          const double nyd = std::max({ly - c.imag(), 0.0, c.imag() - ly - kCell});
          if (std::hypot(nxd, nyd) < r) lists_[cell].push_back(static_cast<std::uint32_t>(k));
        }
      }
    }
  }

  Complex centre_;
  double radius_ = 0;
  geom::ConvexPolygon hull_;
  double slack_ = 0;
  std::array<NumericMap, 3> f_;
  std::vector<Complex> disk_centre_;
  std::vector<double> disk_radius_;
  double x0_ = 0, y0_ = 0;
  long nx_ = 0, ny_ = 0;
  std::vector<std::uint8_t> full_;
  std::vector<std::vector<std::uint32_t>> lists_;
};

const Oracle& oracle() {
  static const Oracle o;
  return o;
}

Verdict any_of(Verdict a, Verdict b) {
  if (a == Verdict::Inside || b == Verdict::Inside) return Verdict::Inside;
  if (a == Verdict::Outside && b == Verdict::Outside) return Verdict::Outside;
  return Verdict::Undecided;
}

}  // namespace

Verdict membership(Complex z, WindowLabel label, int max_depth) {
  max_depth = std::clamp(max_depth, 0, limits::kMaxDepth);
  const Oracle& o = oracle();
  static const std::array<NumericMap, 4> maps{numeric(get_map(MapId::f1)), numeric(get_map(MapId::f2)),
                                              numeric(get_map(MapId::f3)), numeric(get_map(MapId::f4))};
  auto pre = [&](MapId id) {
    const int k = id == MapId::f1 ? 0 : id == MapId::f2 ? 1 : id == MapId::f3 ? 2 : 3;
    return o.contains(maps[static_cast<std::size_t>(k)].inverse(z), max_depth);
  };
  switch (label) {
    case WindowLabel::AB:
      return o.contains(z, max_depth);
    case WindowLabel::A:
      return pre(MapId::f1);
    case WindowLabel::B:
      return any_of(pre(MapId::f2), pre(MapId::f3));
    case WindowLabel::C:
      return pre(MapId::f4);
    case WindowLabel::Omega:
      return any_of(o.contains(z, max_depth), pre(MapId::f4));
  }
  return Verdict::Undecided;
}

}  // namespace kol::win

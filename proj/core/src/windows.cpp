#include "kol/windows.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "kol/error.hpp"
#include "kol/parallel.hpp"
#include "kol/rng.hpp"

namespace kol::win {

AffineSimilarity map_compose(const AffineSimilarity& a, const AffineSimilarity& b) {
  return {a.mult * b.mult, a.mult * b.off + a.off};
}

NumericMap numeric(const AffineSimilarity& f) { return {embed_internal(f.mult), embed_internal(f.off)}; }

InternalPoint inverse(const InternalPoint& z) {
  const CubicNumber norm = z.re * z.re + imag_beta_squared() * z.im_s * z.im_s;
  if (norm.is_zero()) throw DivisionByZero("inverse of zero in the internal plane");
  const CubicNumber inv = norm.inverse();
  return {z.re * inv, -z.im_s * inv};
}

InternalPoint beta_poly(const Rational& c0, const Rational& c1, const Rational& c2) {
  return internal_decompose(CubicNumber(c0, c1, c2));
}

InternalPoint fixed_point(const AffineSimilarity& f) {
  const InternalPoint one(CubicNumber(1));
  if (f.mult == one) throw DegenerateGeometry("translation has no fixed point");
  return f.off * inverse(one - f.mult);
}

namespace {

using R = Rational;

std::array<AffineSimilarity, 11> make_registry() {
  auto bp = [](long c0, long c1, long c2) { return beta_poly(R(c0), R(c1), R(c2)); };
  std::array<AffineSimilarity, 11> m;
  m[static_cast<int>(MapId::identity)] = {bp(1, 0, 0), bp(0, 0, 0)};
  m[static_cast<int>(MapId::f0)] = {bp(0, 1, 0), bp(0, 0, 1)};
  m[static_cast<int>(MapId::f1)] = {bp(0, 1, 0), bp(0, 0, 0)};
  m[static_cast<int>(MapId::f2)] = {bp(1, 0, 2), bp(1, 0, 2)};
  m[static_cast<int>(MapId::f3)] = {bp(0, 1, 0), bp(0, -1, 1)};
  m[static_cast<int>(MapId::f4)] = {bp(0, 0, 1), bp(0, 0, 1)};
  m[static_cast<int>(MapId::g1)] = {bp(0, 0, -1), bp(0, -1, 0)};
  m[static_cast<int>(MapId::g2)] = {bp(1, 0, 2), bp(1, 0, 1)};
  m[static_cast<int>(MapId::g3)] = {bp(0, 0, -1), bp(0, 0, -1)};
  m[static_cast<int>(MapId::tau)] = {bp(-1, 0, 0), bp(0, -1, 0)};
  m[static_cast<int>(MapId::kappa)] = {bp(-1, 0, 0), bp(1, -1, 0)};
  return m;
}

constexpr std::array<std::string_view, 11> kMapNames{"id", "f0", "f1", "f2",  "f3",   "f4",
                                                     "g1", "g2", "g3", "tau", "kappa"};

const NumericMap& nmap(MapId id) {
  static const auto table = [] {
    std::array<NumericMap, 11> t;
    for (int i = 0; i < 11; ++i) t[i] = numeric(get_map(static_cast<MapId>(i)));
    return t;
  }();
  return table[static_cast<int>(id)];
}

double beta_abs() { return std::abs(embedding().beta()); }

}  // namespace

const AffineSimilarity& get_map(MapId id) {
  static const auto registry = make_registry();
  return registry[static_cast<int>(id)];
}

AffineSimilarity compose(std::initializer_list<MapId> ids) {
  AffineSimilarity r = get_map(MapId::identity);
  for (MapId id : ids) r = map_compose(r, get_map(id));
  return r;
}

std::string_view name(MapId id) { return kMapNames[static_cast<int>(id)]; }

MapId map_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kMapNames.size(); ++i)
    if (kMapNames[i] == s) return static_cast<MapId>(i);
  throw UnknownName("unknown map: " + std::string(s));
}

const SpecialPoints& special_points() {
  static const SpecialPoints sp = [] {
    SpecialPoints s;
    const R h(1, 2);
    auto bp = [&](long c0, long c1, long c2) { return beta_poly(h * c0, h * c1, h * c2); };
    s.P[1] = bp(-1, -3, 1);
    s.P[2] = bp(1, -3, 1);
    s.P[3] = bp(1, 1, -1);
    s.P[4] = bp(-1, 1, -1);
    s.P[5] = bp(0, -1, 0);
    s.P[6] = bp(-1, -1, 1);
    s.P[7] = bp(-1, -1, -1);
    s.P[8] = bp(1, -1, 1);
    s.P[9] = bp(1, -1, -1);
    s.P[10] = bp(1, -1, 0);
    s.P[11] = bp(5, 1, 9);
    s.P[12] = bp(-1, -3, -3);
    s.P[13] = bp(3, -1, 5);
    s.P[14] = bp(2, -1, 3);
    for (int i = 1; i <= 14; ++i) s.Pn[i] = embed_internal(s.P[i]);
    const Complex d = 0.4 * embed_internal(beta_poly(0, -2, 1));
    const Complex i(0, 1);
    s.E[1] = s.Pn[10] - i * d;
    s.E[2] = s.Pn[2] + d;
    s.E[3] = s.Pn[10] + i * d;
    s.E[4] = s.Pn[3] - d;
    return s;
  }();
  return sp;
}

Report verify_map_identities() {
  using enum MapId;
  Report r;
  r.suite = "identities";
  auto eq = [&](std::string label, const AffineSimilarity& lhs, const AffineSimilarity& rhs) {
    r.add(std::move(label), lhs == rhs);
  };
  eq("f1 o tau = tau o f3", compose({f1, tau}), compose({tau, f3}));
  eq("f2 o tau = tau o f2", compose({f2, tau}), compose({tau, f2}));
  eq("f3 o tau = tau o f1", compose({f3, tau}), compose({tau, f1}));
  eq("g1 o kappa = kappa o g3", compose({g1, kappa}), compose({kappa, g3}));
  eq("g2 o kappa = kappa o g2", compose({g2, kappa}), compose({kappa, g2}));
  eq("g3 o kappa = kappa o g1", compose({g3, kappa}), compose({kappa, g1}));
  eq("f2 o tau o f1 = f3 o kappa o g2", compose({f2, tau, f1}), compose({f3, kappa, g2}));
  eq("f2 = f3 o kappa o g3", get_map(f2), compose({f3, kappa, g3}));
  eq("g1 = f3 o tau o f1", get_map(g1), compose({f3, tau, f1}));
  eq("g3 = f1 o tau o f1", get_map(g3), compose({f1, tau, f1}));
  eq("g2 = f1 o tau o f1 o tau o f1", get_map(g2), compose({f1, tau, f1, tau, f1}));
  eq("f1 o f4 = f2", compose({f1, f4}), get_map(f2));
  eq("f0 o f1 = f4", compose({f0, f1}), get_map(f4));
  eq("id o f3 = f3", compose({identity, f3}), get_map(f3));
  eq("tau o tau = id", compose({tau, tau}), get_map(identity));
  eq("kappa o kappa = id", compose({kappa, kappa}), get_map(identity));
  return r;
}

Report verify_point_identities() {
  using enum MapId;
  const auto& s = special_points();
  const auto& P = s.P;
  Report r;
  r.suite = "points";
  auto eq = [&](std::string label, const InternalPoint& lhs, const InternalPoint& rhs) {
    r.add(std::move(label), lhs == rhs);
  };
  auto ap = [](MapId id, const InternalPoint& z) { return get_map(id)(z); };
  const R h(1, 2);
  auto mid = [&](int i, int j) { return h * (P[i] + P[j]); };

  const AffineSimilarity cycle = compose({f3, f1, f1, f3});
  // beta^4 = 2 + beta + 4 beta^2
  const AffineSimilarity eq9_map{beta_poly(2, 1, 4), beta_poly(2, 0, 6)};
  r.add("f3 o f1 o f1 o f3 = beta^4 z + 6 beta^2 + 2", cycle == eq9_map);
  eq("P1 = fixed point of f3 o f1 o f1 o f3", fixed_point(cycle), P[1]);
  eq("P2 = fixed point of f3 o f3 o f1 o f1", fixed_point(compose({f3, f3, f1, f1})), P[2]);
  eq("P2 = f3(P1)", ap(f3, P[1]), P[2]);
  eq("P3 = f1(P2)", ap(f1, P[2]), P[3]);
  eq("P4 = f1(P3)", ap(f1, P[3]), P[4]);
  eq("P1 = f3(P4)", ap(f3, P[4]), P[1]);
  eq("P5 = (P1+P3)/2", mid(1, 3), P[5]);
  eq("P5 = (P2+P4)/2", mid(2, 4), P[5]);
  eq("P5 = (P6+P9)/2", mid(6, 9), P[5]);
  eq("P5 = (P7+P8)/2", mid(7, 8), P[5]);
  eq("P5 = -beta/2", P[5], beta_poly(0, -h, 0));
  eq("P6 = f3(P3)", ap(f3, P[3]), P[6]);
  eq("P7 = f1(P4)", ap(f1, P[4]), P[7]);
  eq("P7 = f2(P1)", ap(f2, P[1]), P[7]);
  eq("P7 = f3(P9)", ap(f3, P[9]), P[7]);
  eq("P7 = tau(P8)", ap(tau, P[8]), P[7]);
  eq("P8 = f2(P3)", ap(f2, P[3]), P[8]);
  eq("P8 = f1(P6)", ap(f1, P[6]), P[8]);
  eq("P8 = f3(P2)", ap(f3, P[2]), P[8]);
  eq("P8 = kappa(P9)", ap(kappa, P[9]), P[8]);
  eq("P9 = f1(P1)", ap(f1, P[1]), P[9]);
  eq("P10 = (P2+P3)/2", mid(2, 3), P[10]);
  eq("P10 = (P8+P9)/2", mid(8, 9), P[10]);
  eq("P1 = tau(P3)", ap(tau, P[3]), P[1]);
  eq("P2 = tau(P4)", ap(tau, P[4]), P[2]);
  eq("P2 = kappa(P3)", ap(kappa, P[3]), P[2]);
  eq("P6 = tau(P9)", ap(tau, P[9]), P[6]);
  eq("P5 = fixed point of tau", fixed_point(get_map(tau)), P[5]);
  eq("P10 = fixed point of kappa", fixed_point(get_map(kappa)), P[10]);

  // Endpoints of the first-level edge pieces, as ordered pairs.
  auto ends = [&](std::string label, std::initializer_list<MapId> w, int a, int b) {
    const AffineSimilarity g = compose(w);
    r.add(std::move(label), g(P[2]) == P[a] && g(P[3]) == P[b]);
  };
  ends("g1: (P2,P3) -> (P2,P8)", {g1}, 2, 8);
  ends("g2: (P2,P3) -> (P8,P9)", {g2}, 8, 9);
  ends("g3: (P2,P3) -> (P9,P3)", {g3}, 9, 3);
  ends("g1 o g3: (P2,P3) -> (P13,P8)", {g1, g3}, 13, 8);
  ends("g1 o g2: (P2,P3) -> (P12,P13)", {g1, g2}, 12, 13);
  ends("g2 o g1 o kappa: (P2,P3) -> (P11,P8)", {g2, g1, kappa}, 11, 8);
  eq("P14 = g1 o g3(P10)", compose({g1, g3})(P[10]), P[14]);
  ends("f1: (P2,P3) -> (P3,P4)", {f1}, 3, 4);
  ends("tau: (P2,P3) -> (P4,P1)", {tau}, 4, 1);
  ends("tau o f1: (P2,P3) -> (P1,P2)", {tau, f1}, 1, 2);

  eq("P2 - P1 = 1", P[2] - P[1], beta_poly(1, 0, 0));
  eq("P2 - P3 = beta^2 - 2 beta", P[2] - P[3], beta_poly(0, -2, 1));
  eq("P2 - P6 = 1 - beta", P[2] - P[6], beta_poly(1, -1, 0));
  return r;
}

std::string_view name(WindowLabel l) {
  switch (l) {
    case WindowLabel::A:
      return "A";
    case WindowLabel::B:
      return "B";
    case WindowLabel::C:
      return "C";
    case WindowLabel::AB:
      return "AB";
    case WindowLabel::Omega:
      return "Omega";
  }
  return "?";
}

WindowLabel window_from_name(std::string_view s) {
  for (auto l : {WindowLabel::A, WindowLabel::B, WindowLabel::C, WindowLabel::AB, WindowLabel::Omega})
    if (name(l) == s) return l;
  throw UnknownName("unknown window: " + std::string(s));
}

Complex seed_point() { return special_points().Pn[5]; }

double omega_ab_radius() {
  static const double r = [] {
    const Complex c = seed_point();
    double best = 0;
    for (MapId id : {MapId::f1, MapId::f2, MapId::f3}) {
      const auto& f = nmap(id);
      best = std::max(best, std::abs(f(c) - c) / (1 - f.ratio()));
    }
    return best * (1 + 1e-12);
  }();
  return r;
}

std::size_t attractor_leaf_count(int depth) {
  if (depth <= 0) return 1;
  std::vector<double> n(static_cast<std::size_t>(depth) + 1, 1.0);
  auto at = [&](int k) { return k <= 0 ? 1.0 : n[static_cast<std::size_t>(k)]; };
  for (int k = 1; k <= depth; ++k) n[static_cast<std::size_t>(k)] = 2 * at(k - 1) + at(k - 3);
  return static_cast<std::size_t>(std::min(n.back(), 1e18));
}

namespace {

constexpr std::size_t kMaxCloudPoints = 40'000'000;

// Leaves of the f1/f2/f3 tree at contraction depth, in DFS order, with the
// index of the first map.
void enumerate_leaves(int depth, const std::function<void(const NumericMap&, int)>& emit) {
  static const std::array<MapId, 3> ids{MapId::f1, MapId::f2, MapId::f3};
  static const std::array<int, 3> weight{1, 3, 1};
  std::function<void(const NumericMap&, int, int)> rec = [&](const NumericMap& m, int level,
                                                              int first) {
    if (level >= depth) {
      emit(m, first);
      return;
    }
    for (int i = 0; i < 3; ++i) rec(m.then(nmap(ids[i])), level + weight[i], first < 0 ? i : first);
  };
  rec(NumericMap{}, 0, -1);
}

void check_depth(int depth) {
  if (depth < 0) throw ResourceLimit("depth must be non-negative");
  if (depth > limits::kMaxCloudDepth)
    throw ResourceLimit("cloud depth above " + std::to_string(limits::kMaxCloudDepth));
}

// Post-maps that carry Omega_AB onto the requested window, with the piece
// index recorded for shading.
std::vector<std::pair<MapId, std::uint8_t>> post_maps(WindowLabel label) {
  switch (label) {
    case WindowLabel::A:
      return {{MapId::f1, 0}};
    case WindowLabel::B:
      return {{MapId::f2, 1}, {MapId::f3, 2}};
    case WindowLabel::C:
      return {{MapId::f4, 3}};
    case WindowLabel::Omega:
      return {{MapId::f1, 0}, {MapId::f2, 1}, {MapId::f3, 2}, {MapId::f4, 3}};
    case WindowLabel::AB:
      break;
  }
  return {};
}

}  // namespace

std::vector<NumericMap> attractor_leaf_maps(int depth) {
  check_depth(depth);
  if (attractor_leaf_count(depth) > kMaxCloudPoints) throw ResourceLimit("too many leaves");
  std::vector<NumericMap> out;
  out.reserve(attractor_leaf_count(depth));
  enumerate_leaves(depth, [&](const NumericMap& m, int) { out.push_back(m); });
  return out;
}

PointCloud attractor_cloud(WindowLabel label, int depth) {
  check_depth(depth);
  const auto post = post_maps(label);
  const std::size_t leaves = attractor_leaf_count(depth) * std::max<std::size_t>(post.size(), 1);
  if (leaves > kMaxCloudPoints) throw ResourceLimit("cloud would exceed the point cap");

  PointCloud cloud;
  cloud.label = std::string(name(label));
  cloud.depth = depth;
  cloud.mode = "full_depth";
  const Complex seed = seed_point();
  std::vector<Complex> base;
  std::vector<std::uint8_t> base_piece;
  base.reserve(attractor_leaf_count(depth));
  enumerate_leaves(depth, [&](const NumericMap& m, int first) {
    base.push_back(m(seed));
    base_piece.push_back(static_cast<std::uint8_t>(std::max(first, 0)));
  });
  const double enclosure = std::pow(beta_abs(), depth) * omega_ab_radius();
  if (post.empty()) {
    cloud.points = std::move(base);
    cloud.piece = std::move(base_piece);
    cloud.enclosure = enclosure;
    return cloud;
  }
  double ratio = 0;
  for (auto [id, piece] : post) {
    const auto& f = nmap(id);
    ratio = std::max(ratio, f.ratio());
    for (auto z : base) {
      cloud.points.push_back(f(z));
      cloud.piece.push_back(piece);
    }
  }
  cloud.enclosure = enclosure * ratio;
  return cloud;
}

PointCloud attractor_sample(WindowLabel label, std::size_t n, std::uint64_t seed, int steps) {
  if (n > limits::kMaxSamples) throw ResourceLimit("sample count above cap");
  const auto& k = embedding();
  const double b2 = 1.0 / k.alpha_d;  // |beta|^2
  // f1, f2, f3 with probabilities |beta|^2, |beta|^6, |beta|^2.
  const std::array<double, 3> cum{b2, b2 + b2 * b2 * b2, 1.0};
  const std::array<MapId, 3> ids{MapId::f1, MapId::f2, MapId::f3};

  const auto post = post_maps(label);
  std::vector<double> post_cum;
  {
    double total = 0;
    for (auto [id, _] : post) {
      const double r = nmap(id).ratio();
      total += r * r;
      post_cum.push_back(total);
    }
    for (auto& v : post_cum) v /= total;
  }

  PointCloud cloud;
  cloud.label = std::string(name(label));
  cloud.mode = "random";
  cloud.samples = n;
  cloud.seed = seed;
  cloud.points.resize(n);
  cloud.piece.resize(n);
  cloud.enclosure = std::pow(beta_abs(), steps) * omega_ab_radius();
  const Complex start = seed_point();
  constexpr std::size_t kBatch = 1 << 14;
  const std::size_t batches = (n + kBatch - 1) / kBatch;
  parallel_for(batches, [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    const std::size_t lo = b * kBatch;
    const std::size_t hi = std::min(n, lo + kBatch);
    for (std::size_t s = lo; s < hi; ++s) {
      Complex z = start;
      int first = 0;
      for (int step = 0; step < steps; ++step) {
        const double u = rng.uniform();
        const int i = u < cum[0] ? 0 : (u < cum[1] ? 1 : 2);
        z = nmap(ids[static_cast<std::size_t>(i)])(z);
        first = i;
      }
      if (!post.empty()) {
        const double u = rng.uniform();
        std::size_t j = 0;
        while (j + 1 < post.size() && u >= post_cum[j]) ++j;
        z = nmap(post[j].first)(z);
        first = post[j].second;
      }
      cloud.points[s] = z;
      cloud.piece[s] = static_cast<std::uint8_t>(first);
    }
  });
  return cloud;
}

geom::Quad rhombus() {
  const auto& E = special_points().E;
  return geom::Quad({E[1], E[2], E[3], E[4]});
}

namespace {

geom::Quad image(const geom::Quad& q, std::initializer_list<MapId> word) {
  NumericMap m;
  for (MapId id : word) m = m.then(nmap(id));
  std::vector<Complex> v;
  for (auto z : q.vertices()) v.push_back(m(z));
  return geom::Quad(std::move(v));
}

double rhombus_anchor_radius() {
  const auto& s = special_points();
  double r = 0;
  for (int j = 1; j <= 4; ++j) r = std::max(r, std::abs(s.E[j] - s.Pn[2]));
  return r;
}

}  // namespace

PointCloud boundary_cloud(int depth, BoundaryScope scope) {
  check_depth(depth);
  const auto& s = special_points();
  std::vector<Complex> edge;
  static const std::array<MapId, 3> ids{MapId::g1, MapId::g2, MapId::g3};
  static const std::array<int, 3> weight{2, 3, 2};
  std::function<void(const NumericMap&, int)> rec = [&](const NumericMap& m, int level) {
    if (level >= depth) {
      edge.push_back(m(s.Pn[2]));
      return;
    }
    for (int i = 0; i < 3; ++i) rec(m.then(nmap(ids[static_cast<std::size_t>(i)])), level + weight[i]);
  };
  rec(NumericMap{}, 0);
  edge.push_back(s.Pn[3]);

  PointCloud cloud;
  cloud.label = "boundary";
  cloud.depth = depth;
  cloud.mode = "full_depth";
  cloud.enclosure = std::pow(beta_abs(), depth) * rhombus_anchor_radius();
  if (scope == BoundaryScope::edge) {
    cloud.points = std::move(edge);
    cloud.piece.assign(cloud.points.size(), 0);
    return cloud;
  }
  std::vector<Complex> ab;
  const std::array<NumericMap, 4> edges{NumericMap{}, nmap(MapId::f1), nmap(MapId::tau),
                                        nmap(MapId::tau).then(nmap(MapId::f1))};
  for (const auto& e : edges)
    for (auto z : edge) ab.push_back(e(z));
  if (scope == BoundaryScope::omega_ab) {
    cloud.points = std::move(ab);
    cloud.piece.assign(cloud.points.size(), 0);
    return cloud;
  }
  cloud.points = ab;
  cloud.piece.assign(ab.size(), 0);
  for (auto [id, piece] : {std::pair{MapId::f1, 1}, std::pair{MapId::f4, 3}}) {
    for (auto z : ab) {
      cloud.points.push_back(nmap(id)(z));
      cloud.piece.push_back(static_cast<std::uint8_t>(piece));
    }
  }
  return cloud;
}

Report rhombus_verify(double threshold) {
  using enum MapId;
  const geom::Quad R = rhombus();
  Report r;
  r.suite = "rhombus";
  auto contain = [&](std::string label, std::initializer_list<MapId> w) {
    const double m = geom::containment_margin(image(R, w), R);
    r.add(std::move(label), m > threshold, m, threshold, "containment margin");
  };
  auto disjoint = [&](std::string label, std::initializer_list<MapId> a,
                      std::initializer_list<MapId> b) {
    const double m = geom::separation(image(R, a), image(R, b));
    r.add(std::move(label), m > threshold, m, threshold, "separation");
  };
  auto touching = [&](std::string label, std::initializer_list<MapId> a,
                      std::initializer_list<MapId> b) {
    const double m = geom::separation(image(R, a), image(R, b));
    r.add(std::move(label), m < 0, m, 0.0, "neighbours, expected to intersect");
  };
  contain("g1(R) in R", {g1});
  contain("g2(R) in R", {g2});
  contain("g3(R) in R", {g3});
  disjoint("g1(R) & g3(R) empty", {g1}, {g3});
  disjoint("g1(R) & g2(g2(R)) empty", {g1}, {g2, g2});
  disjoint("g1(R) & g2(g3(R)) empty", {g1}, {g2, g3});
  disjoint("g2(R) & g1(g1(R)) empty", {g2}, {g1, g1});
  disjoint("g2(R) & g1(g2(R)) empty", {g2}, {g1, g2});
  disjoint("g2(R) & g3(g2(R)) empty", {g2}, {g3, g2});
  disjoint("g2(R) & g3(g3(R)) empty", {g2}, {g3, g3});
  disjoint("g3(R) & g2(g1(R)) empty", {g3}, {g2, g1});
  disjoint("g3(R) & g2(g2(R)) empty", {g3}, {g2, g2});
  touching("g1(R) & g2(g1(R)) meet", {g1}, {g2, g1});
  touching("g2(R) & g1(g3(R)) meet", {g2}, {g1, g3});
  touching("g2(R) & g3(g1(R)) meet", {g2}, {g3, g1});
  touching("g3(R) & g2(g3(R)) meet", {g3}, {g2, g3});
  return r;
}

std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::Inside:
      return "inside";
    case Verdict::Outside:
      return "outside";
    case Verdict::Undecided:
      return "undecided";
  }
  return "?";
}

namespace {

double min_distance(std::span<const Complex> cloud, Complex p) {
  double d = std::numeric_limits<double>::infinity();
  for (auto z : cloud) d = std::min(d, std::abs(z - p));
  return d;
}

}  // namespace

InnerPointResult inner_point_distances(int depth) {
  const PointCloud b = boundary_cloud(depth, BoundaryScope::omega_ab);
  std::vector<Complex> a1, a3;
  for (auto z : b.points) {
    a1.push_back(nmap(MapId::f1)(z));
    a3.push_back(nmap(MapId::f3)(z));
  }
  const Complex minus_beta = -embedding().beta();
  InnerPointResult res;
  res.distance_zero = min_distance(a1, 0.0);
  res.distance_minus_beta = min_distance(a3, minus_beta);
  res.zero = membership(0.0, WindowLabel::A);
  res.minus_beta = membership(minus_beta, WindowLabel::B);
  return res;
}

Report inner_point_check(int depth, double threshold) {
  const auto res = inner_point_distances(depth);
  Report r;
  r.suite = "inner_points";
  r.parameters["depth"] = std::to_string(depth);
  r.add("0 away from boundary of f1(Omega_AB)", res.distance_zero > threshold, res.distance_zero,
        threshold, "distance to boundary cloud");
  r.add("-beta away from boundary of f3(Omega_AB)", res.distance_minus_beta > threshold,
        res.distance_minus_beta, threshold, "distance to boundary cloud");
  r.add("0 inside Omega_A", res.zero == Verdict::Inside, std::string(name(res.zero)));
  r.add("-beta inside Omega_B", res.minus_beta == Verdict::Inside, std::string(name(res.minus_beta)));
  r.add("10 outside Omega", membership(10.0, WindowLabel::Omega) == Verdict::Outside);
  return r;
}

std::array<Complex, 2> tiling_lattice() {
  return {embed_internal(beta_poly(1, -1, 0)), embed_internal(beta_poly(0, -2, 1))};
}

namespace {

double omega_radius() {
  const Complex c = seed_point();
  const auto& f4 = nmap(MapId::f4);
  return std::max(omega_ab_radius(), std::abs(f4(c) - c) + f4.ratio() * omega_ab_radius());
}

}  // namespace

TilingResult tiling_check(std::size_t n, std::uint64_t seed, int max_depth) {
  if (n > 1'000'000) throw ResourceLimit("tiling samples above 10^6");
  const auto [t1, t2] = tiling_lattice();
  const Complex c = seed_point();
  const double rad = omega_radius();
  std::vector<int> status(n);  // 0 undecided, else number of covers + 1
  constexpr std::size_t kBatch = 1024;
  const std::size_t batches = (n + kBatch - 1) / kBatch;
  parallel_for(batches, [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    for (std::size_t s = b * kBatch; s < std::min(n, (b + 1) * kBatch); ++s) {
      const double u = rng.uniform() - 0.5;
      const double v = rng.uniform() - 0.5;
      const Complex z = c + u * t1 + v * t2;
      int covers = 0;
      bool undecided = false;
      for (int m = -4; m <= 4; ++m) {
        for (int k = -4; k <= 4; ++k) {
          const Complex w = z - static_cast<double>(m) * t1 - static_cast<double>(k) * t2;
          if (std::abs(w - c) > rad) continue;
          const Verdict vd = membership(w, WindowLabel::Omega, max_depth);
          if (vd == Verdict::Inside) ++covers;
          if (vd == Verdict::Undecided) undecided = true;
        }
      }
      status[s] = undecided ? 0 : covers + 1;
    }
  });
  TilingResult res;
  res.samples = n;
  for (int st : status) {
    if (st == 0) continue;
    ++res.decided;
    if (st == 2) ++res.exactly_once;
    if (st > 2) ++res.multiply_covered;
    if (st == 1) ++res.uncovered;
  }
  return res;
}

double omega_area() {
  const CubicNumber a = CubicNumber::alpha();
  return embedding().beta_im_d * embed_real(a * a - a);
}

AreaEstimate area_estimate(WindowLabel label, std::size_t samples, std::uint64_t seed,
                           int max_depth) {
  if (samples > limits::kMaxSamples) throw ResourceLimit("sample count above cap");
  if (samples < 10'000) throw Error("area estimate needs at least 10^4 samples");
  const Complex c = seed_point();
  const double rad = label == WindowLabel::C || label == WindowLabel::Omega ? omega_radius()
                                                                            : omega_ab_radius();
  std::vector<std::uint8_t> verdict(samples);
  constexpr std::size_t kBatch = 4096;
  const std::size_t batches = (samples + kBatch - 1) / kBatch;
  parallel_for(batches, [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    for (std::size_t s = b * kBatch; s < std::min(samples, (b + 1) * kBatch); ++s) {
      const Complex z = c + Complex((2 * rng.uniform() - 1) * rad, (2 * rng.uniform() - 1) * rad);
      verdict[s] = static_cast<std::uint8_t>(membership(z, label, max_depth));
    }
  });
  double inside = 0;
  std::size_t undecided = 0;
  for (auto v : verdict) {
    if (v == static_cast<std::uint8_t>(Verdict::Inside)) inside += 1;
    if (v == static_cast<std::uint8_t>(Verdict::Undecided)) {
      inside += 0.5;
      ++undecided;
    }
  }
  const double box = 4 * rad * rad;
  const double p = inside / static_cast<double>(samples);
  AreaEstimate est;
  est.samples = samples;
  est.undecided = undecided;
  est.value = box * p;
  est.std_error = box * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return est;
}

namespace {

std::vector<double> dyadic_scales(double resolution) {
  std::vector<double> eps;
  for (double e = 0.25; e >= 4 * resolution; e /= 2) eps.push_back(e);
  return eps;
}

}  // namespace

DimensionEstimate boundary_dimension(int depth) {
  if (depth < 12) throw Error("box counting needs depth 12 or more");
  const PointCloud cloud = boundary_cloud(depth);
  const auto& s = special_points();
  const double res = std::pow(beta_abs(), depth) * std::abs(s.Pn[3] - s.Pn[2]);
  const auto eps = dyadic_scales(res);
  DimensionEstimate d;
  d.counts = geom::box_counting(cloud.points, eps);
  d.slope = d.counts.slope;
  return d;
}

DimensionEstimate segment_dimension(std::size_t points) {
  const auto& s = special_points();
  const Complex a = s.Pn[2];
  const Complex b = s.Pn[3];
  std::vector<Complex> pts(points);
  for (std::size_t i = 0; i < points; ++i)
    pts[i] = a + (b - a) * (static_cast<double>(i) / static_cast<double>(points - 1));
  const auto eps = dyadic_scales(std::abs(b - a) / static_cast<double>(points));
  DimensionEstimate d;
  d.counts = geom::box_counting(pts, eps);
  d.slope = d.counts.slope;
  return d;
}

double boundary_dimension_target() { return -std::log(std::numbers::phi) / std::log(beta_abs()); }

Report ifs_consistency(int depth) {
  if (depth > 20) throw ResourceLimit("ifs_consistency depth above 20");
  using enum MapId;
  const auto A = attractor_cloud(WindowLabel::A, depth);
  const auto B = attractor_cloud(WindowLabel::B, depth);
  const auto C = attractor_cloud(WindowLabel::C, depth);
  const auto AB = attractor_cloud(WindowLabel::AB, depth);
  auto image = [](const PointCloud& c, MapId id) {
    std::vector<Complex> out;
    out.reserve(c.points.size());
    for (auto z : c.points) out.push_back(nmap(id)(z));
    return out;
  };
  auto join = [](std::initializer_list<std::vector<Complex>> parts) {
    std::vector<Complex> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  Report r;
  r.suite = "ifs";
  r.parameters["depth"] = std::to_string(depth);
  const double cell = 0.02;
  auto check = [&](std::string label, const PointCloud& lhs, const std::vector<Complex>& rhs,
                   double rhs_enclosure) {
    const double hd = geom::hausdorff(lhs.points, rhs, cell);
    const double bound = 2 * (lhs.enclosure + rhs_enclosure);
    r.add(std::move(label), hd <= bound, hd, bound, "Hausdorff distance");
  };
  const double b = beta_abs();
  check("Omega_AB = f1 u f2 u f3 (Omega_AB)", AB,
        join({image(AB, f1), image(AB, f2), image(AB, f3)}), AB.enclosure * b);
  check("Omega_A = f1(Omega_A) u f1(Omega_B)", A, join({image(A, f1), image(B, f1)}),
        B.enclosure * b);
  check("Omega_B = f3(Omega_A) u f3(Omega_B) u f1(Omega_C)", B,
        join({image(A, f3), image(B, f3), image(C, f1)}), B.enclosure * b);
  check("Omega_C = f0(Omega_A)", C, image(A, f0), A.enclosure * b);
  return r;
}

}  // namespace kol::win

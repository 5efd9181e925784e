#include "kol/modelset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "kol/parallel.hpp"

namespace kol::ms {

using seq::Letter;
using win::Verdict;
using win::WindowLabel;

namespace {

CubicNumber det3(const std::array<std::array<CubicNumber, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<Letter> letters_of(WindowLabel label) {
  switch (label) {
    case WindowLabel::A:
      return {Letter::A};
    case WindowLabel::B:
      return {Letter::B};
    case WindowLabel::C:
      return {Letter::C};
    case WindowLabel::AB:
      return {Letter::A, Letter::B};
    case WindowLabel::Omega:
      break;
  }
  return {Letter::A, Letter::B, Letter::C};
}

// Disk about the seed point containing the window.
double window_radius(WindowLabel label) {
  const Complex c = win::seed_point();
  const double r = win::omega_ab_radius();
  double out = 0;
  auto piece = [&](win::MapId id) {
    const auto f = win::numeric(win::get_map(id));
    out = std::max(out, std::abs(f(c) - c) + f.ratio() * r);
  };
  switch (label) {
    case WindowLabel::A:
      piece(win::MapId::f1);
      break;
    case WindowLabel::B:
      piece(win::MapId::f2);
      piece(win::MapId::f3);
      break;
    case WindowLabel::C:
      piece(win::MapId::f4);
      break;
    case WindowLabel::Omega:
      piece(win::MapId::f4);
      [[fallthrough]];
    case WindowLabel::AB:
      out = std::max(out, r);
      break;
  }
  return out;
}

// Letter of the first sub-window certified to hold z.
std::pair<Verdict, Letter> classify(Complex z, const std::vector<Letter>& letters, int depth) {
  bool undecided = false;
  for (Letter l : letters) {
    const Verdict v = win::membership(z, window_of(l), depth);
    if (v == Verdict::Inside) return {Verdict::Inside, l};
    if (v == Verdict::Undecided) undecided = true;
  }
  return {undecided ? Verdict::Undecided : Verdict::Outside, Letter::A};
}

}  // namespace

const LatticeBasis& lattice_basis() {
  static const LatticeBasis basis = [] {
    LatticeBasis b;
    const auto& lengths = seq::substitution_data().perron.lengths;
    std::array<std::array<CubicNumber, 3>, 3> exact;
    for (std::size_t i = 0; i < 3; ++i) {
      b.v[i] = {lengths[i], star(lengths[i])};
      const Complex z = embed_internal(b.v[i].internal);
      b.matrix[i] = {embed_real(lengths[i]), z.real(), z.imag()};
      exact[i] = {lengths[i], b.v[i].internal.re, b.v[i].internal.im_s};
    }
    b.determinant = det3(b.matrix);
    b.covolume_cofactor = det3(exact);
    if (embed_real(b.covolume_cofactor) < 0) b.covolume_cofactor = -b.covolume_cofactor;
    return b;
  }();
  return basis;
}

double covolume() { return embedding().beta_im_d * embed_real(lattice_basis().covolume_cofactor); }

InternalPoint star(const CubicNumber& x) { return internal_decompose(x); }

const std::array<CubicInt, 3>& tile_lengths() {
  static const std::array<CubicInt, 3> l{CubicInt{0, -1, 1}, CubicInt{0, 1, 0}, CubicInt{1, 0, 0}};
  return l;
}

std::vector<SitePoint> sigma_kol_sites(std::size_t n_right, std::size_t n_left) {
  if (n_right + n_left > limits::kMaxSites) throw ResourceLimit("site count above cap");
  const auto w = seq::block_biinfinite(n_left, n_right);
  const auto& len = tile_lengths();
  std::vector<SitePoint> out(n_left + n_right);
  CubicInt x{};
  for (std::size_t i = 0; i < n_left; ++i) {
    x -= len[seq::index(w.left[i])];
    out[n_left - 1 - i] = {x, w.left[i]};
  }
  x = {};
  for (std::size_t i = 0; i < n_right; ++i) {
    out[n_left + i] = {x, w.right[i]};
    x += len[seq::index(w.right[i])];
  }
  return out;
}

std::vector<SitePoint> sites_in_range(double L) {
  if (!(L >= 0) || L > 2.0 * static_cast<double>(limits::kMaxSites))
    throw ResourceLimit("range above cap");
  auto n = static_cast<std::size_t>(std::ceil(0.5 * L)) + 16;
  for (;;) {
    auto sites = sigma_kol_sites(n, n);
    // The rightmost site's tile must end beyond L, the leftmost must start
    // before -L.
    if (embed_real(sites.front().pos) < -L && embed_real(sites.back().pos) > L) {
      std::erase_if(sites, [&](const SitePoint& s) {
        const double x = embed_real(s.pos);
        return x < -L || x > L;
      });
      return sites;
    }
    n *= 2;
  }
}

std::vector<SitePoint> central_sites(std::size_t n) { return sigma_kol_sites(n - n / 2, n / 2); }

WindowLabel window_of(Letter l) {
  switch (l) {
    case Letter::A:
      return WindowLabel::A;
    case Letter::B:
      return WindowLabel::B;
    case Letter::C:
      break;
  }
  return WindowLabel::C;
}

SubsetResult window_subset(std::size_t n, int depth) {
  if (n > 100'000) throw ResourceLimit("subset check above 1e5 sites");
  const auto sites = central_sites(n);
  SubsetResult total;
  total.sites = sites.size();
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (sites.size() + kChunk - 1) / kChunk;
  std::vector<SubsetResult> part(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    SubsetResult& r = part[c];
    for (std::size_t i = c * kChunk; i < std::min(sites.size(), (c + 1) * kChunk); ++i) {
      const Complex z = embed_internal(sites[i].pos);
      std::array<Verdict, 3> v{};
      for (Letter l : seq::kLetters) v[seq::index(l)] = win::membership(z, window_of(l), depth);
      const Verdict own = v[seq::index(sites[i].letter)];
      if (own == Verdict::Inside) ++r.inside;
      if (own == Verdict::Outside) ++r.outside;
      if (own == Verdict::Undecided) ++r.undecided;
      if (std::ranges::none_of(v, [](Verdict x) { return x == Verdict::Undecided; })) {
        ++r.decided;
        const auto inside = std::ranges::count(v, Verdict::Inside);
        if (own == Verdict::Inside && inside == 1) ++r.agree;
      }
    }
  });
  for (const auto& r : part) {
    total.inside += r.inside;
    total.outside += r.outside;
    total.undecided += r.undecided;
    total.decided += r.decided;
    total.agree += r.agree;
  }
  return total;
}

Report verify_window_subset(std::size_t n, int depth) {
  const auto r = window_subset(n, depth);
  Report rep;
  rep.suite = "subset";
  rep.parameters["n"] = std::to_string(n);
  rep.parameters["depth"] = std::to_string(depth);
  const double sites = static_cast<double>(std::max<std::size_t>(r.sites, 1));
  rep.add("no site outside its window", r.outside == 0, static_cast<double>(r.outside), 0.0,
          "undecided " + std::to_string(r.undecided));
  rep.add("inside fraction", static_cast<double>(r.inside) / sites >= 0.99,
          static_cast<double>(r.inside) / sites, 0.99);
  rep.add("letter-window agreement among decided", r.agree == r.decided,
          static_cast<double>(r.agree) / static_cast<double>(std::max<std::size_t>(r.decided, 1)), 1.0);
  rep.add("site 0 inside Omega_A",
          win::membership({0, 0}, WindowLabel::A, depth) == Verdict::Inside);
  rep.add("site -alpha inside Omega_B",
          win::membership(-embedding().beta(), WindowLabel::B, depth) == Verdict::Inside);
  return rep;
}

DensityResult density_empirical(double L) {
  if (!(L >= 100)) throw ResourceLimit("density needs L >= 100");
  const auto sites = sites_in_range(L);
  DensityResult r;
  r.L = L;
  r.count = sites.size();
  r.density = static_cast<double>(r.count) / (2 * L);
  for (const auto& s : sites) r.by_letter[seq::index(s.letter)] += 1;
  for (auto& v : r.by_letter) v /= 2 * L;
  return r;
}

bool density_identity() {
  const CubicNumber a = CubicNumber::alpha();
  return (a * a - a) * seq::substitution_data().perron.mean_length == 3 * a * a - 4 * a;
}

std::vector<double> boundary_distances(const std::vector<Complex>& points, int depth) {
  const auto cloud = win::boundary_cloud(depth, win::BoundaryScope::omega);
  const geom::PointIndex index(cloud.points, 0.02);
  std::vector<double> out(points.size());
  constexpr std::size_t kChunk = 1024;
  parallel_for((points.size() + kChunk - 1) / kChunk, [&](std::size_t c) {
    for (std::size_t i = c * kChunk; i < std::min(points.size(), (c + 1) * kChunk); ++i)
      out[i] = index.nearest_distance(points[i]);
  });
  return out;
}

GenericityResult genericity_probe(std::size_t n, int depth) {
  if (n > 100'000) throw ResourceLimit("genericity probe above 1e5 sites");
  const auto sites = central_sites(n);
  std::vector<Complex> pts;
  pts.reserve(sites.size());
  for (const auto& s : sites) pts.push_back(embed_internal(s.pos));
  const auto d = boundary_distances(pts, depth);
  GenericityResult r;
  r.sites = sites.size();
  r.depth = depth;
  r.enclosure = win::boundary_cloud(depth, win::BoundaryScope::omega).enclosure;
  r.min_distance = d.empty() ? 0 : *std::ranges::min_element(d);
  r.lower_bound = r.min_distance - r.enclosure;
  for (double v : d) {
    std::size_t bin = 0;
    while (bin < 8 && v < std::pow(10.0, -static_cast<double>(bin + 1))) ++bin;
    r.histogram[std::min<std::size_t>(bin, 8)] += 1;
  }
  return r;
}

SymmetryResult inversion_symmetry_check(std::size_t n) {
  if (n > 1'000'000) throw ResourceLimit("symmetry check above 1e6 sites");
  const auto sites = central_sites(n);
  SymmetryResult r;
  if (sites.empty()) return r;
  const CubicInt alpha{0, 1, 0};
  // t = 2x + alpha is odd under the reflection, so the test is exact.
  auto t_of = [&](const CubicInt& x) { return x + x + alpha; };
  const double tl = embed_real(t_of(sites.front().pos));
  const double tr = embed_real(t_of(sites.back().pos));
  const double bound = std::min(-tl, tr) - 1;
  r.half_width = bound / 2;
  std::unordered_set<CubicInt, CubicIntHash> set;
  std::vector<CubicInt> ts;
  for (const auto& s : sites) {
    if (s.letter == Letter::C) continue;
    const CubicInt t = t_of(s.pos);
    if (std::abs(embed_real(t)) > bound) continue;
    set.insert(t);
    ts.push_back(t);
  }
  r.sites = ts.size();
  for (const auto& t : ts)
    if (!set.contains(-t)) ++r.unmatched;
  r.symmetric = r.unmatched == 0 && r.sites > 0;
  return r;
}

std::array<CubicInt, 2> coset_generators() { return {CubicInt{1, -1, 0}, CubicInt{0, -2, 1}}; }

CosetResult coset_locate(const CubicInt& x, long radius, int depth) {
  if (radius < 0 || radius > 1000) throw ResourceLimit("coset search radius above 1000");
  const auto g = coset_generators();
  const auto letters = letters_of(WindowLabel::Omega);
  CosetResult r;
  // Concentric square shells in (m, n).
  for (long s = 0; s <= radius; ++s) {
    for (long m = -s; m <= s; ++m) {
      for (long n = -s; n <= s; ++n) {
        if (std::max(std::abs(m), std::abs(n)) != s) continue;
        const CubicInt y = x - m * g[0] - n * g[1];
        const auto [v, letter] = classify(embed_internal(y), letters, depth);
        if (v == Verdict::Undecided) ++r.undecided;
        if (v != Verdict::Inside) continue;
        if (r.hits++ == 0) {
          r.m = m;
          r.n = n;
          r.site = {y, letter};
        }
      }
    }
  }
  if (r.hits == 0)
    throw NotFound("no coset representative within radius " + std::to_string(radius));
  return r;
}

CutProjectResult cut_and_project(const WindowSpec& spec, double L, int depth) {
  if (!(L >= 0) || L > 10'000) throw ResourceLimit("cut_and_project range above 1e4");
  const auto& k = embedding();
  const Complex centre = win::seed_point() + spec.shift;
  const double R = window_radius(spec.label) * 1.1;
  const double a = k.alpha_d;
  const double a2 = a * a;
  const Complex b = k.beta();
  const Complex b2 = b * b;
  const auto letters = letters_of(spec.label);

  // Coordinates (x, Re, Im) = m0 (1,1,0) + m1 (a, Re b, Im b) + m2 (a^2, Re b^2, Im b^2).
  const std::array<std::array<double, 3>, 3> M{{{1, a, a2}, {1, b.real(), b2.real()}, {0, b.imag(), b2.imag()}}};
  const double det = det3(M);
  // Row 2 of M^-1: cofactors of column 2.
  const std::array<double, 3> inv2{(M[1][0] * M[2][1] - M[1][1] * M[2][0]) / det,
                                   -(M[0][0] * M[2][1] - M[0][1] * M[2][0]) / det,
                                   (M[0][0] * M[1][1] - M[0][1] * M[1][0]) / det};
  double lo2 = 0, hi2 = 0;
  bool first = true;
  for (double x : {-L, L})
    for (double re : {centre.real() - R, centre.real() + R})
      for (double im : {centre.imag() - R, centre.imag() + R}) {
        const double m2 = inv2[0] * x + inv2[1] * re + inv2[2] * im;
        lo2 = first ? m2 : std::min(lo2, m2);
        hi2 = first ? m2 : std::max(hi2, m2);
        first = false;
      }

  struct Candidate {
    CubicInt x;
    Complex z;
  };
  std::vector<Candidate> cand;
  for (auto m2 = static_cast<std::int64_t>(std::floor(lo2)) - 1; m2 <= static_cast<std::int64_t>(std::ceil(hi2)) + 1; ++m2) {
    const double md2 = static_cast<double>(m2);
    const double m1lo = (centre.imag() - R - md2 * b2.imag()) / b.imag();
    const double m1hi = (centre.imag() + R - md2 * b2.imag()) / b.imag();
    for (auto m1 = static_cast<std::int64_t>(std::floor(m1lo)); m1 <= static_cast<std::int64_t>(std::ceil(m1hi)); ++m1) {
      const double md1 = static_cast<double>(m1);
      const double phys = md1 * a + md2 * a2;
      const double inre = md1 * b.real() + md2 * b2.real();
      const double lo = std::max(-L - phys, centre.real() - R - inre);
      const double hi = std::min(L - phys, centre.real() + R - inre);
      for (auto m0 = static_cast<std::int64_t>(std::floor(lo)); m0 <= static_cast<std::int64_t>(std::ceil(hi)); ++m0) {
        const CubicInt x{m0, m1, m2};
        const double xr = embed_real(x);
        if (xr < -L || xr > L) continue;
        const Complex z = embed_internal(x);
        if (std::abs(z - centre) > R) continue;
        cand.push_back({x, z});
      }
    }
  }

  CutProjectResult out;
  out.candidates = cand.size();
  std::vector<std::pair<Verdict, Letter>> verdict(cand.size());
  parallel_for((cand.size() + 255) / 256, [&](std::size_t c) {
    for (std::size_t i = c * 256; i < std::min(cand.size(), (c + 1) * 256); ++i)
      verdict[i] = classify(cand[i].z - spec.shift, letters, depth);
  });
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (verdict[i].first == Verdict::Inside) out.sites.push_back({cand[i].x, verdict[i].second});
    if (verdict[i].first == Verdict::Undecided) ++out.undecided;
  }
  std::ranges::sort(out.sites, {}, [](const SitePoint& s) { return embed_real(s.pos); });
  return out;
}

MeyerResult meyer_gap(double L, double radius) {
  const auto sites = sites_in_range(L);
  std::set<CubicInt> diffs{CubicInt{}};
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double xi = embed_real(sites[i].pos);
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      if (embed_real(sites[j].pos) - xi > radius) break;
      diffs.insert(sites[j].pos - sites[i].pos);
    }
  }
  std::vector<double> v;
  for (const auto& d : diffs) v.push_back(embed_real(d));
  std::ranges::sort(v);
  MeyerResult r;
  r.distinct = v.size();
  r.min_gap = v.size() > 1 ? radius : 0;
  for (std::size_t i = 1; i < v.size(); ++i) r.min_gap = std::min(r.min_gap, v[i] - v[i - 1]);
  return r;
}

bool bond_lengths_exact(const std::vector<SitePoint>& sites) {
  const auto& len = tile_lengths();
  for (std::size_t i = 1; i < sites.size(); ++i)
    if (sites[i].pos - sites[i - 1].pos != len[seq::index(sites[i - 1].letter)]) return false;
  return true;
}

}  // namespace kol::ms

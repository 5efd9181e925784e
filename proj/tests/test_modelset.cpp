#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <set>

#include "kol/modelset.hpp"
#include "support/oracle.hpp"

namespace {

using namespace kol::ms;
using kol::Complex;
using kol::CubicInt;
using kol::CubicNumber;
using kol::InternalPoint;
using kol::Rational;
using kol::seq::Letter;

const Complex b = [] {
  const auto z = oracle::beta();
  return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}();

Complex conj_of(const std::array<long, 3>& c) {
  return static_cast<double>(c[0]) + static_cast<double>(c[1]) * b + static_cast<double>(c[2]) * b * b;
}

char letter_char(Letter l) { return kol::seq::to_char(l); }

TEST(Lattice, Covolume) {
  EXPECT_NEAR(covolume(), 0.5 * std::sqrt(59.0), 1e-9);
  EXPECT_NEAR(covolume(), 3.84057, 1e-5);
  const auto& lat = lattice_basis();
  std::array<std::array<oracle::LD, 3>, 3> m{};
  const std::array<std::array<long, 3>, 3> len{{{0, -1, 1}, {0, 1, 0}, {1, 0, 0}}};
  for (int i = 0; i < 3; ++i) {
    const auto z = oracle::conj(len[i][0], len[i][1], len[i][2]);
    m[i] = {oracle::real(len[i][0], len[i][1], len[i][2]), z.real(), z.imag()};
  }
  EXPECT_NEAR(std::abs(lat.determinant), std::abs(static_cast<double>(oracle::det3(m))), 1e-12);
  const CubicNumber a = CubicNumber::alpha();
  EXPECT_EQ(lat.covolume_cofactor, 3 * a * a - 4 * a);
}

TEST(Lattice, BasisVectorC) {
  const auto& vC = lattice_basis().v[2];
  EXPECT_EQ(vC.physical, CubicNumber(1));
  EXPECT_EQ(vC.internal, InternalPoint(CubicNumber(1)));
}

TEST(Lattice, StarOfAlphaIsInternalPartOfB) {
  EXPECT_EQ(star(CubicNumber::alpha()), lattice_basis().v[1].internal);
}

TEST(Star, Examples) {
  EXPECT_EQ(star(CubicNumber(1)), InternalPoint(CubicNumber(1)));
  const CubicNumber a = CubicNumber::alpha();
  const auto s = star(a * a - a);
  EXPECT_EQ(s.re, CubicNumber(2, 0, Rational(-1, 2)) - CubicNumber(1, Rational(-1, 2)));
  EXPECT_EQ(s.im_s, CubicNumber(1, -1));
  EXPECT_LT(std::abs(embed_internal(s) - (b * b - b)), 1e-14);
}

TEST(Property, StarIsRingHomomorphism) {
  gen::Gen g(41);
  for (int i = 0; i < 10'000; ++i) {
    const auto cx = g.int_triple(1000);
    const auto cy = g.int_triple(1000);
    const CubicNumber x(cx[0], cx[1], cx[2]);
    const CubicNumber y(cy[0], cy[1], cy[2]);
    ASSERT_EQ(star(x + y), star(x) + star(y));
    ASSERT_EQ(star(x * y), star(x) * star(y));
  }
}

TEST(Sites, FirstRightSites) {
  const auto s = sigma_kol_sites(3, 0);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (SitePoint{{0, 0, 0}, Letter::A}));
  EXPECT_EQ(s[1], (SitePoint{{0, -1, 1}, Letter::B}));
  EXPECT_EQ(s[2], (SitePoint{{0, 0, 1}, Letter::C}));
}

TEST(Sites, MinusAlphaCarriesB) {
  const auto s = sigma_kol_sites(1, 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (SitePoint{{0, -1, 0}, Letter::B}));
}

TEST(Sites, MatchExactOracle) {
  const auto got = sigma_kol_sites(20'000, 20'000);
  const auto want = oracle::exact_sites(20'000, 20'000);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    ASSERT_EQ(got[i].pos, CubicInt(want[i].c[0], want[i].c[1], want[i].c[2])) << i;
    ASSERT_EQ(letter_char(got[i].letter), want[i].letter) << i;
  }
}

TEST(Sites, RangeMatchesNumericOracle) {
  const double L = 5'000;
  const auto got = sites_in_range(L);
  std::vector<oracle::Site> want;
  for (const auto& s : oracle::sites(L))
    if (std::abs(s.x) <= L) want.push_back(s);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    ASSERT_NEAR(embed_real(got[i].pos), static_cast<double>(want[i].x), 1e-9);
    ASSERT_EQ(letter_char(got[i].letter), want[i].letter);
  }
}

TEST(Sites, OneTileRange) {
  const double lA = embed_real(CubicNumber(0, -1, 1));
  const auto s = sites_in_range(lA);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].pos, CubicInt(0, -1, 0));
  EXPECT_EQ(s[1].pos, CubicInt(0, 0, 0));
  EXPECT_EQ(s[2].pos, CubicInt(0, -1, 1));
}

TEST(Sites, CentralSplit) {
  const auto s = central_sites(11);
  ASSERT_EQ(s.size(), 11u);
  std::size_t left = 0;
  for (const auto& x : s) left += embed_real(x.pos) < 0;
  EXPECT_EQ(left, 5u);
}

TEST(Sites, InflationClosure) {
  const auto s = sites_in_range(20'000);
  std::set<CubicInt> pos;
  for (const auto& x : s) pos.insert(x.pos);
  const CubicInt a(0, 1, 0);
  std::size_t checked = 0;
  for (const auto& x : s) {
    const CubicInt y = a * x.pos;
    if (std::abs(embed_real(y)) > 19'000) continue;
    ASSERT_TRUE(pos.contains(y)) << embed_real(x.pos);
    ++checked;
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Sites, BondLengths) {
  EXPECT_TRUE(bond_lengths_exact(sites_in_range(1'000)));
  auto s = sites_in_range(100);
  s[5].letter = s[5].letter == Letter::A ? Letter::C : Letter::A;
  EXPECT_FALSE(bond_lengths_exact(s));
}

TEST(Subset, SeedSites) {
  EXPECT_EQ(kol::win::membership(0.0, kol::win::WindowLabel::A), kol::win::Verdict::Inside);
  EXPECT_EQ(kol::win::membership(-b, kol::win::WindowLabel::B), kol::win::Verdict::Inside);
  EXPECT_EQ(window_of(Letter::C), kol::win::WindowLabel::C);
}

TEST(Subset, TenThousandSites) {
  const auto r = window_subset(10'000, 30);
  EXPECT_EQ(r.sites, 10'000u);
  EXPECT_EQ(r.outside, 0u);
  EXPECT_GE(r.inside, 9'900u);
  EXPECT_EQ(r.agree, r.decided);
  EXPECT_TRUE(verify_window_subset(2'000, 30).pass());
}

TEST(Density, IdentityExact) { EXPECT_TRUE(density_identity()); }

TEST(Density, MatchesCountOracle) {
  const double L = 100'000;
  const auto d = density_empirical(L);
  std::size_t count = 0;
  for (const auto& s : oracle::sites(L)) count += std::abs(s.x) <= L;
  EXPECT_EQ(d.count, count);
  const double inv_l = static_cast<double>(1 / (3.5L + oracle::alpha() / 2 - oracle::alpha() * oracle::alpha() / 2));
  EXPECT_NEAR(d.density, inv_l, 1e-3);
  EXPECT_NEAR(d.density, 0.46073, 1e-3);
  EXPECT_THROW(density_empirical(50), kol::ResourceLimit);
}

// Boundary of Omega rebuilt from beta: the edge [P2, P3] by the three
// g-maps, the four edges of Omega_AB, and their images under f1 and f4.
std::vector<Complex> oracle_boundary(int depth) {
  const Complex P2 = 0.5 * (1. - 3. * b + b * b);
  const Complex P3 = 0.5 * (1. + b - b * b);
  struct M {
    Complex m, d;
  };
  const std::array<M, 3> g{M{-b * b, -b}, M{2. * b * b + 1., b * b + 1.}, M{-b * b, -b * b}};
  const std::array<int, 3> w{2, 3, 2};
  std::vector<Complex> edge;
  std::function<void(M, int)> rec = [&](M f, int level) {
    if (level >= depth) {
      edge.push_back(f.m * P2 + f.d);
      return;
    }
    for (int i = 0; i < 3; ++i) rec(M{f.m * g[i].m, f.m * g[i].d + f.d}, level + w[i]);
  };
  rec(M{1, 0}, 0);
  edge.push_back(P3);
  std::vector<Complex> ab;
  for (auto z : edge) {
    ab.push_back(z);
    ab.push_back(b * z);
    ab.push_back(-z - b);
    ab.push_back(-(b * z) - b);
  }
  std::vector<Complex> all = ab;
  for (auto z : ab) {
    all.push_back(b * z);
    all.push_back(b * b * z + b * b);
  }
  return all;
}

TEST(Genericity, BaselineFromOracle) {
  const std::size_t n = 10'000;
  const oracle::Sweep sweep(oracle_boundary(18));
  double oracle_min = INFINITY;
  for (const auto& s : oracle::exact_sites(n / 2, n - n / 2)) oracle_min = std::min(oracle_min, sweep.nearest(conj_of(s.c)));
  const auto g = genericity_probe(n, 18);
  EXPECT_EQ(g.sites, n);
  EXPECT_GT(g.min_distance, 0);
  EXPECT_NEAR(g.min_distance, oracle_min, 1e-9);
  // Frozen from the oracle above.
  constexpr double kBaseline = 0.00294082;
  EXPECT_NEAR(g.min_distance, kBaseline, 0.1 * kBaseline);
  std::size_t total = 0;
  for (auto c : g.histogram) total += c;
  EXPECT_EQ(total, n);
}

TEST(Genericity, InnerSeedImages) {
  const auto d = boundary_distances({Complex(0, 0), -b}, 18);
  EXPECT_GT(d[0], 0.01);
  EXPECT_GT(d[1], 0.01);
}

TEST(Genericity, InjectedBoundaryPoint) {
  const Complex P2 = 0.5 * (1. - 3. * b + b * b);
  EXPECT_LT(boundary_distances({P2}, 18)[0], 1e-12);
}

TEST(Symmetry, SeedPair) {
  const auto s = sigma_kol_sites(1, 1);
  EXPECT_EQ(s[0].pos + s[1].pos, CubicInt(0, -1, 0));
  EXPECT_EQ(s[0].letter, Letter::B);
  EXPECT_EQ(s[1].letter, Letter::A);
}

TEST(Symmetry, ExactOnLargePatch) {
  const auto r = inversion_symmetry_check(100'000);
  EXPECT_TRUE(r.symmetric);
  EXPECT_EQ(r.unmatched, 0u);
  EXPECT_GT(r.sites, 50'000u);
}

TEST(Symmetry, ReflectionOracle) {
  const auto sites = oracle::sites(20'000);
  const oracle::LD a = oracle::alpha();
  std::vector<oracle::LD> ab;
  for (const auto& s : sites)
    if (s.letter != 'C' && std::abs(s.x + a / 2) < 19'000) ab.push_back(s.x);
  std::size_t unmatched = 0;
  for (auto x : ab) {
    const auto y = -a - x;
    const auto it = std::lower_bound(ab.begin(), ab.end(), y - 1e-9L);
    if (it == ab.end() || std::abs(*it - y) > 1e-9L) ++unmatched;
  }
  EXPECT_EQ(unmatched, 0u);
  EXPECT_GT(ab.size(), 10'000u);
}

TEST(Cosets, Origin) {
  const auto c = coset_locate({0, 0, 0});
  EXPECT_EQ(c.m, 0);
  EXPECT_EQ(c.n, 0);
  EXPECT_EQ(c.site.pos, CubicInt(0, 0, 0));
  EXPECT_EQ(c.hits, 1u);
}

TEST(Cosets, One) { EXPECT_EQ(coset_locate({1, 0, 0}).hits, 1u); }

TEST(Property, CosetsHaveExactlyOneHit) {
  gen::Gen g(42);
  const auto [g1, g2] = coset_generators();
  for (int i = 0; i < 100; ++i) {
    const auto c = g.int_triple(3);
    const CubicInt x(c[0], c[1], c[2]);
    const auto r = coset_locate(x);
    ASSERT_EQ(r.hits, 1u) << c[0] << "," << c[1] << "," << c[2];
    ASSERT_EQ(x - r.m * g1 - r.n * g2, r.site.pos);
  }
}

TEST(CutProject, EqualsTiling) {
  const auto cp = cut_and_project({}, 50);
  EXPECT_EQ(cp.undecided, 0u);
  EXPECT_EQ(cp.sites, sites_in_range(50));
}

TEST(CutProject, SubWindowC) {
  const auto cp = cut_and_project({kol::win::WindowLabel::C, {0, 0}}, 200);
  std::vector<SitePoint> want;
  for (const auto& s : sites_in_range(200))
    if (s.letter == Letter::C) want.push_back(s);
  EXPECT_EQ(cp.sites, want);
}

TEST(CutProject, FarWindowIsEmpty) {
  EXPECT_TRUE(cut_and_project({kol::win::WindowLabel::Omega, {5, 0}}, 0.01).sites.empty());
  EXPECT_FALSE(cut_and_project({kol::win::WindowLabel::Omega, {100, 0}}, 100).sites.empty());
  EXPECT_THROW(cut_and_project({}, 1e5), kol::ResourceLimit);
}

TEST(Meyer, DifferenceSetUniformlyDiscrete) {
  const auto m = meyer_gap(1'000);
  EXPECT_GT(m.min_gap, 0.1);
  EXPECT_GT(m.distinct, 3u);
}

}  // namespace

#include "kol/verify.hpp"

#include <cmath>

#include "kol/diffraction.hpp"
#include "kol/modelset.hpp"
#include "kol/sequences.hpp"
#include "kol/windows.hpp"

namespace kol {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

// Bits of a block word read seam-outward on the left.
seq::Word left_bits(const seq::BlockWord& left) {
  seq::Word out;
  out.reserve(2 * left.size());
  for (seq::Letter l : left) {
    const auto pair = seq::decode_blocks(std::vector{l});
    out.push_back(pair[1]);
    out.push_back(pair[0]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "identities", "points",      "rhombus",     "sequence",  "density",    "tiling",    "subset",
      "symmetry",   "deformation", "periodicity", "dimension", "genericity", "all"};
  return names;
}

Report suite_identities() {
  Report r;
  r.suite = "identities";
  r.append(win::verify_map_identities());
  r.append(win::verify_point_identities());
  r.add("(alpha^2 - alpha) l = 3 alpha^2 - 4 alpha", ms::density_identity());
  const CubicNumber a = CubicNumber::alpha();
  r.add("Im(beta)^2 = 1/alpha - (1 - alpha/2)^2",
        imag_beta_squared() == a.inverse() - (1 - Rational(1, 2) * a) * (1 - Rational(1, 2) * a));
  return r;
}

Report suite_points() {
  Report r;
  r.suite = "points";
  r.append(win::verify_point_identities());
  r.append(win::inner_point_check());
  return r;
}

Report suite_rhombus() { return win::rhombus_verify(); }

Report suite_sequence(const VerifyConfig& cfg) {
  if (cfg.letters > limits::kMaxSites) throw ResourceLimit("letters above cap");
  Report r;
  r.suite = "sequence";
  const std::size_t n = cfg.letters;
  r.parameters["letters"] = num(n);
  const auto self = seq::kol_selfread(3, 1, n);
  const auto alt = seq::kol_alternating(3, 1, n);
  auto blocks = seq::decode_blocks(seq::block_fixed_point((n + 1) / 2));
  blocks.resize(n);
  r.add("self-reading = alternating substitution", self == alt);
  r.add("self-reading = decoded block substitution", self == blocks);
  const auto rl = seq::verify_runlength_fixed(self);
  r.add("run lengths reproduce the word", rl.ok, static_cast<double>(rl.checked), std::nullopt);

  const auto freq = seq::empirical_frequencies<seq::Bit>(self);
  const auto& perron = seq::substitution_data().perron;
  const double f3 = freq.contains(3) ? freq.at(3) : 0.0;
  r.add("frequency of 3", std::abs(f3 - embed_real(perron.freq3)) <= 1e-2, f3, embed_real(perron.freq3));
  const auto word = seq::block_fixed_point(n / 2);
  const auto bf = seq::empirical_frequencies<seq::Letter>(word);
  for (seq::Letter l : seq::kLetters) {
    const double want = embed_real(perron.frequencies[seq::index(l)]);
    const double got = bf.contains(l) ? bf.at(l) : 0.0;
    r.add(std::string("frequency of ") + seq::to_char(l), std::abs(got - want) <= 1e-2, got, want);
  }
  const auto bi = seq::kol_biinfinite(3, 1, 10'000, 10'000);
  r.add("bi-infinite mirror symmetry", seq::mirror_check(bi), 10'000.0, std::nullopt);
  return r;
}

Report suite_density(const VerifyConfig& cfg) {
  Report r;
  r.suite = "density";
  r.seed = cfg.seed;
  r.parameters["L"] = std::to_string(static_cast<long>(cfg.L));
  r.parameters["samples"] = num(cfg.samples);
  const double inv_l = embed_real(seq::substitution_data().perron.mean_length.inverse());
  r.add("(alpha^2 - alpha) l = 3 alpha^2 - 4 alpha", ms::density_identity());
  const auto& lat = ms::lattice_basis();
  const CubicNumber a = CubicNumber::alpha();
  r.add("|Gamma| / Im(beta) = 3 alpha^2 - 4 alpha", lat.covolume_cofactor == 3 * a * a - 4 * a);
  const double half_root59 = 0.5 * std::sqrt(59.0);
  r.add("|Gamma| = sqrt(59)/2", std::abs(ms::covolume() - half_root59) <= 1e-6, ms::covolume(), half_root59);
  r.add("|det| of the basis matrix", std::abs(std::abs(lat.determinant) - half_root59) <= 1e-9,
        std::abs(lat.determinant), half_root59);
  const auto area = win::area_estimate(win::WindowLabel::Omega, cfg.samples, cfg.seed, cfg.depth);
  const double mu = win::omega_area();
  r.add("mu(Omega) by Monte Carlo within 2%", std::abs(area.value - mu) <= 0.02 * mu, area.value, mu,
        "stderr " + std::to_string(area.std_error));
  r.add("mu(Omega) / |Gamma| = 1/l", std::abs(mu / ms::covolume() - inv_l) <= 1e-12, mu / ms::covolume(), inv_l);
  const auto d = ms::density_empirical(cfg.L);
  r.add("empirical density", std::abs(d.density - inv_l) <= 1e-3, d.density, inv_l);
  const auto& perron = seq::substitution_data().perron;
  for (seq::Letter l : seq::kLetters) {
    const double want = embed_real(perron.frequencies[seq::index(l)]) * inv_l;
    r.add(std::string("density of ") + seq::to_char(l), std::abs(d.by_letter[seq::index(l)] - want) <= 1e-2,
          d.by_letter[seq::index(l)], want);
  }
  return r;
}

Report suite_tiling(const VerifyConfig& cfg) {
  Report r;
  r.suite = "tiling";
  r.seed = cfg.seed;
  r.parameters["n"] = num(cfg.n);
  const auto t = win::tiling_check(cfg.n, cfg.seed, cfg.depth);
  const double decided = static_cast<double>(t.decided) / static_cast<double>(std::max<std::size_t>(t.samples, 1));
  r.add("decided fraction", decided >= 0.99, decided, 0.99);
  r.add("every decided sample covered exactly once", t.exactly_once == t.decided,
        static_cast<double>(t.exactly_once), static_cast<double>(t.decided),
        "multiply covered " + num(t.multiply_covered) + ", uncovered " + num(t.uncovered));
  return r;
}

Report suite_subset(const VerifyConfig& cfg) {
  Report r = ms::verify_window_subset(cfg.n, cfg.depth);
  const auto cp = ms::cut_and_project({}, 100, cfg.depth);
  const auto ref = ms::sites_in_range(100);
  r.add("cut-and-project equals the tiling on [-100, 100]", cp.sites == ref,
        static_cast<double>(cp.sites.size()), static_cast<double>(ref.size()),
        "undecided " + num(cp.undecided));
  r.add("bond lengths are exactly l_A, l_B, l_C", ms::bond_lengths_exact(ms::sites_in_range(1000)));
  const auto meyer = ms::meyer_gap(1000);
  r.add("difference set uniformly discrete on [0, 10]", meyer.min_gap > 0, meyer.min_gap, 0.0);
  return r;
}

Report suite_symmetry(const VerifyConfig& cfg) {
  Report r;
  r.suite = "symmetry";
  r.parameters["n"] = num(cfg.n);
  const auto s = ms::inversion_symmetry_check(cfg.n);
  r.add("A and B sites symmetric about -alpha/2", s.symmetric, static_cast<double>(s.sites), std::nullopt,
        "half width " + std::to_string(s.half_width) + ", unmatched " + num(s.unmatched));
  const std::size_t m = 10'000;
  const auto bits = seq::kol_biinfinite(3, 1, m, m);
  const auto blocks = seq::block_biinfinite(m / 2, m / 2);
  const auto right = seq::decode_blocks(blocks.right);
  r.add("block word decodes to the bi-infinite sequence",
        right == bits.right && left_bits(blocks.left) == bits.left);
  r.add("bit-level mirror symmetry", seq::mirror_check(bits));
  // The B tile [-alpha, 0] decodes to 31 with the centre bit 1 last, and
  // its midpoint is the centre of the geometric symmetry.
  r.add("mirror centre is the B tile left of the seam", blocks.left.front() == seq::Letter::B && bits.left.front() == 1);
  return r;
}

Report suite_deformation(const VerifyConfig& cfg) { return dif::verify_deformation(cfg.n); }

Report suite_periodicity(const VerifyConfig& cfg) {
  Report r;
  r.suite = "periodicity";
  const double L = std::min(cfg.L, 50'000.0);
  r.parameters["L"] = std::to_string(static_cast<long>(L));
  for (auto d : {dif::Deformation::equal_lengths, dif::Deformation::integer_lengths, dif::Deformation::none}) {
    Report one = dif::periodicity_check(d, dif::periodicity_peaks(), L);
    one.suite = std::string(dif::name(d));
    r.append(one);
  }
  return r;
}

Report suite_dimension() {
  Report r;
  r.suite = "dimension";
  const auto d = win::boundary_dimension(16);
  r.add("box-counting dimension at depth 16", d.slope >= 1.12 && d.slope <= 1.32, d.slope,
        win::boundary_dimension_target(), "accepted range [1.12, 1.32]");
  const auto s = win::segment_dimension();
  r.add("segment control", std::abs(s.slope - 1) <= 0.05, s.slope, 1.0);
  return r;
}

Report suite_genericity(const VerifyConfig& cfg) {
  Report r;
  r.suite = "genericity";
  r.parameters["n"] = num(cfg.n);
  r.parameters["depth"] = "18";
  const auto g = ms::genericity_probe(cfg.n, 18);
  r.add("minimum distance to the boundary cloud is positive", g.min_distance > 0, g.min_distance, 0.0,
        "enclosure " + std::to_string(g.enclosure));
  const auto inner = ms::boundary_distances({Complex{0, 0}, -embedding().beta()}, 18);
  r.add("seed images 0 and -beta are inner points", inner[0] > 0.01 && inner[1] > 0.01,
        std::min(inner[0], inner[1]), 0.01);
  return r;
}

Report run_suite(std::string_view suite, const VerifyConfig& cfg) {
  if (suite == "identities") return suite_identities();
  if (suite == "points") return suite_points();
  if (suite == "rhombus") return suite_rhombus();
  if (suite == "sequence") return suite_sequence(cfg);
  if (suite == "density") return suite_density(cfg);
  if (suite == "tiling") return suite_tiling(cfg);
  if (suite == "subset") return suite_subset(cfg);
  if (suite == "symmetry") return suite_symmetry(cfg);
  if (suite == "deformation") return suite_deformation(cfg);
  if (suite == "periodicity") return suite_periodicity(cfg);
  if (suite == "dimension") return suite_dimension();
  if (suite == "genericity") return suite_genericity(cfg);
  if (suite == "all") {
    Report r;
    r.suite = "all";
    r.seed = cfg.seed;
    for (const auto& name : suite_names())
      if (name != "all") r.append(run_suite(name, cfg));
    return r;
  }
  throw UnknownName("unknown suite: " + std::string(suite));
}

}  // namespace kol

// kolakoski: generate, verify, render, diffract, sites.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 resource cap.

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kol/diffraction.hpp"
#include "kol/io.hpp"
#include "kol/modelset.hpp"
#include "kol/sequences.hpp"
#include "kol/verify.hpp"
#include "kol/windows.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

struct Options {
  int p = 3;
  int q = 1;
  std::size_t n = 0;
  double L = 0;
  int depth = -1;
  std::size_t samples = 0;
  int bound = 3;
  std::string params = "none";
  std::string method = "window";
  std::string suite = "all";
  std::string which = "AB";
  std::uint64_t seed = kol::kDefaultSeed;
  std::string out;
  std::string format;
  int width = 1024;
  bool blocks = false;
  bool timing = false;
  bool check_periodicity = false;
};

double round12(double v) { return std::stod(kol::io::fmt(v)); }

void emit(const Options& o, const std::string& content) {
  if (o.out.empty())
    std::cout << content;
  else
    kol::io::atomic_write(o.out, content);
}

ordered_json report_json(const kol::Report& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json j{{"name", c.name}, {"pass", c.pass}};
    if (c.value) j["value"] = round12(*c.value);
    if (c.threshold) j["threshold"] = round12(*c.threshold);
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  ordered_json j{{"suite", r.suite}, {"pass", r.pass()}, {"parameters", params}, {"checks", checks}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

ordered_json header(const std::string& command, const Options& o, ordered_json config) {
  config["seed"] = o.seed;
  return {{"version", kVersion}, {"command", command}, {"config", std::move(config)}, {"seed", o.seed}};
}

using Clock = std::chrono::steady_clock;

void stamp(ordered_json& j, const Options& o, Clock::time_point start) {
  if (o.timing) j["wall_clock_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
}

int cmd_generate(const Options& o) {
  const std::size_t n = o.n ? o.n : 100;
  if (n > kol::limits::kMaxSites) throw kol::ResourceLimit("n above 10^7");
  std::string text;
  if (o.blocks) {
    if (o.p != 3 || o.q != 1) throw kol::InvalidAlphabet("block output exists for p=3, q=1 only");
    text = kol::seq::to_ascii(kol::seq::block_fixed_point(n));
  } else {
    text = kol::seq::to_ascii(kol::seq::kol_selfread(o.p, o.q, n));
  }
  emit(o, text + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto start = Clock::now();
  kol::VerifyConfig cfg;
  if (o.n) cfg.n = o.n;
  if (o.L > 0) cfg.L = o.L;
  if (o.depth >= 0) cfg.depth = o.depth;
  if (o.samples) cfg.samples = o.samples;
  cfg.seed = o.seed;
  if (cfg.n > kol::limits::kMaxSites) throw kol::ResourceLimit("n above 10^7");
  if (cfg.depth > kol::limits::kMaxDepth) throw kol::ResourceLimit("depth above 40");
  if (cfg.samples > kol::limits::kMaxSamples) throw kol::ResourceLimit("samples above 10^8");
  const auto report = kol::run_suite(o.suite, cfg);
  ordered_json j = header("verify", o,
                          {{"suite", o.suite}, {"n", cfg.n}, {"L", round12(cfg.L)}, {"depth", cfg.depth},
                           {"samples", cfg.samples}});
  j["report"] = report_json(report);
  stamp(j, o, start);
  emit(o, j.dump(2) + "\n");
  if (!o.out.empty()) {
    for (const auto& c : report.checks)
      if (!c.pass) std::cerr << "FAILED " << c.name << "\n";
  }
  return report.pass() ? kOk : kCheckFailed;
}

int cmd_render(const Options& o) {
  const auto start = Clock::now();
  using kol::win::WindowLabel;
  const int depth = o.depth >= 0 ? o.depth : 14;
  if (depth > kol::limits::kMaxCloudDepth) throw kol::ResourceLimit("render depth above 25");
  if (o.width < 1 || o.width > kol::limits::kMaxResolution) throw kol::ResourceLimit("width above 8192");
  static const std::array<std::uint8_t, 4> shade{30, 90, 150, 200};
  std::vector<kol::io::Shaded> pts;
  std::size_t cloud_points = 0;
  if (o.which == "boundary") {
    const auto c = kol::win::boundary_cloud(depth, kol::win::BoundaryScope::omega);
    cloud_points = c.points.size();
    for (auto z : c.points) pts.push_back({z, 0});
  } else if (o.which == "tiling") {
    const auto c = kol::win::attractor_cloud(WindowLabel::Omega, depth);
    cloud_points = c.points.size();
    const auto t = kol::win::tiling_lattice();
    int tile = 0;
    for (int m = -1; m <= 1; ++m)
      for (int k = -1; k <= 1; ++k, ++tile) {
        const kol::Complex d = static_cast<double>(m) * t[0] + static_cast<double>(k) * t[1];
        const auto s = static_cast<std::uint8_t>(20 + 25 * tile);
        for (auto z : c.points) pts.push_back({z + d, s});
      }
  } else {
    const auto c = kol::win::attractor_cloud(kol::win::window_from_name(o.which), depth);
    cloud_points = c.points.size();
    for (std::size_t i = 0; i < c.points.size(); ++i) pts.push_back({c.points[i], shade[c.piece[i] % 4]});
  }
  const auto raster = kol::io::rasterize(pts, o.width);
  const std::string path = o.out.empty() ? "render_" + o.which + ".pgm" : o.out;
  kol::io::atomic_write(path, kol::io::to_pgm(raster));
  ordered_json j = header("render", o, {{"which", o.which}, {"depth", depth}, {"width", o.width}});
  j["image"] = {{"path", path}, {"width", raster.width}, {"height", raster.height}, {"points", cloud_points}};
  stamp(j, o, start);
  kol::io::atomic_write(path + ".json", j.dump(2) + "\n");
  return kOk;
}

int cmd_diffract(const Options& o) {
  const auto start = Clock::now();
  using namespace kol::dif;
  const Deformation d = deformation_from_name(o.params);
  if (o.method != "window" && o.method != "sum" && o.method != "both")
    throw kol::UnknownName("unknown method: " + o.method);
  if (o.bound < 0 || o.bound > kol::limits::kMaxIndexBound) throw kol::ResourceLimit("bound above 10");
  SpectrumConfig cfg;
  cfg.bound = o.bound;
  if (o.samples) cfg.samples = o.samples;
  if (o.L > 0) cfg.L = o.L;
  cfg.seed = o.seed;
  if (cfg.samples > kol::limits::kMaxSamples) throw kol::ResourceLimit("samples above 10^8");
  if (cfg.samples < 10'000 && o.method != "sum") throw kol::ResourceLimit("window method needs >= 10^4 samples");
  if (cfg.L < 1000 && o.method != "window") throw kol::ResourceLimit("sum method needs L >= 1000");

  std::vector<SpectrumEntry> rows;
  std::vector<double> delta;
  double worst = 0;
  if (o.method == "both") {
    const auto w = spectrum_table(d, Method::window, cfg);
    const auto s = spectrum_table(d, Method::sum, cfg);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double dd = std::abs(w[i].amplitude - s[i].amplitude);
      worst = std::max(worst, dd);
      rows.push_back(w[i]);
      rows.push_back(s[i]);
      delta.push_back(dd);
      delta.push_back(dd);
    }
  } else {
    rows = spectrum_table(d, o.method == "sum" ? Method::sum : Method::window, cfg);
  }

  ordered_json j = header("diffract", o,
                          {{"params", std::string(name(d))}, {"bound", cfg.bound}, {"method", o.method},
                           {"samples", cfg.samples}, {"L", round12(cfg.L)}});
  const auto& p = deformation_params(d);
  j["deformation"] = {{"a", p.a.to_string()}, {"b_over_im_beta", p.b_cofactor.to_string()},
                      {"a_numeric", round12(p.a_numeric)}, {"b_numeric", round12(p.b_numeric)}};
  j["peaks"] = rows.size();
  if (o.method == "both") j["max_delta"] = round12(worst);
  bool pass = true;
  if (o.check_periodicity) {
    const auto rep = periodicity_check(d, periodicity_peaks(), std::min(cfg.L, 50'000.0));
    j["periodicity"] = report_json(rep);
    pass = rep.pass();
    if (d != Deformation::none) {
      const auto br = periodicity_brackets(p);
      std::cerr << "bracket a: " << br[0] << (br[0].is_zero() ? " (exactly zero)" : "") << "\n";
      std::cerr << "bracket b: " << br[1] << (br[1].is_zero() ? " (exactly zero)" : "") << "\n";
    }
  }
  stamp(j, o, start);

  if (o.format == "json") {
    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& e = rows[i];
      ordered_json r{{"n", {e.index.nA, e.index.nB, e.index.nC}}, {"k", round12(e.k)},
                     {"re_c", round12(e.amplitude.real())}, {"im_c", round12(e.amplitude.imag())},
                     {"intensity", round12(e.intensity)}, {"method", std::string(name(e.method))},
                     {"stderr", round12(e.std_error)}};
      if (!delta.empty()) r["delta"] = round12(delta[i]);
      table.push_back(std::move(r));
    }
    j["spectrum"] = std::move(table);
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, kol::io::spectrum_csv(rows, delta));
    if (!o.out.empty()) kol::io::atomic_write(o.out + ".json", j.dump(2) + "\n");
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_sites(const Options& o) {
  std::vector<kol::ms::SitePoint> sites;
  if (o.L > 0) {
    if (o.L > 1e6) throw kol::ResourceLimit("L above 10^6");
    sites = kol::ms::sites_in_range(o.L);
  } else {
    const std::size_t n = o.n ? o.n : 100;
    if (n > kol::limits::kMaxSites) throw kol::ResourceLimit("n above 10^7");
    sites = kol::ms::central_sites(n);
  }
  emit(o, kol::io::sites_csv(sites));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kolakoski-(3,1) as a cut-and-project model set"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--out", o.out, "output path (stdout if omitted)");
    c->add_flag("--timing", o.timing, "record wall-clock time in reports");
  };

  auto* gen = app.add_subcommand("generate", "write a Kolakoski sequence");
  gen->add_option("--p", o.p, "first letter")->check(CLI::PositiveNumber);
  gen->add_option("--q", o.q, "second letter")->check(CLI::PositiveNumber);
  gen->add_option("--n", o.n, "number of letters");
  gen->add_flag("--blocks", o.blocks, "write the A/B/C block word (p=3, q=1)");
  add_common(gen);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(kol::suite_names()));
  ver->add_option("--n", o.n, "sites or samples");
  ver->add_option("--L", o.L, "half range for density");
  ver->add_option("--depth", o.depth, "membership depth");
  ver->add_option("--samples", o.samples, "Monte Carlo samples");
  ver->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  add_common(ver);

  auto* ren = app.add_subcommand("render", "rasterize a window, the boundary or the tiling");
  ren->add_option("--which", o.which, "A|B|C|AB|Omega|boundary|tiling")
      ->check(CLI::IsMember({"A", "B", "C", "AB", "Omega", "boundary", "tiling"}));
  ren->add_option("--depth", o.depth, "cloud depth");
  ren->add_option("--width", o.width, "image width in pixels");
  ren->add_option("--format", o.format, "pgm")->check(CLI::IsMember({"pgm"}));
  add_common(ren);

  auto* dif = app.add_subcommand("diffract", "Fourier-Bohr amplitudes of the peaks");
  dif->add_option("--params", o.params, "none|equal|integer")
      ->check(CLI::IsMember({"none", "equal", "integer", "equal_lengths", "integer_lengths"}));
  dif->add_option("--bound", o.bound, "largest |n_i|");
  dif->add_option("--method", o.method, "window|sum|both")->check(CLI::IsMember({"window", "sum", "both"}));
  dif->add_option("--samples", o.samples, "Monte Carlo samples for the window method");
  dif->add_option("--L", o.L, "half range for the exponential sum");
  dif->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  dif->add_flag("--check-periodicity", o.check_periodicity, "compare c_k with the shifted peaks");
  add_common(dif);

  auto* sit = app.add_subcommand("sites", "export exact site positions as CSV");
  sit->add_option("--n", o.n, "number of sites around the seam");
  sit->add_option("--L", o.L, "all sites in [-L, L]");
  sit->add_option("--format", o.format, "csv")->check(CLI::IsMember({"csv"}));
  add_common(sit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(o);
    if (ver->parsed()) return cmd_verify(o);
    if (ren->parsed()) return cmd_render(o);
    if (dif->parsed()) return cmd_diffract(o);
    if (sit->parsed()) return cmd_sites(o);
  } catch (const kol::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const kol::InvalidAlphabet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const kol::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

#include "kol/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kol::io {

std::string fmt(double v) {
  if (v == 0) v = 0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const Rational& q) { return q.get_str(); }

void atomic_write(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string sites_csv(const std::vector<ms::SitePoint>& sites) {
  std::ostringstream out;
  out << "index,letter,pos_exact_c0,c1,c2,pos_real\n";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    out << i << ',' << seq::to_char(s.letter) << ',' << s.pos.c[0] << ',' << s.pos.c[1] << ','
        << s.pos.c[2] << ',' << fmt(embed_real(s.pos)) << '\n';
  }
  return out.str();
}

std::string spectrum_csv(const std::vector<dif::SpectrumEntry>& entries, const std::vector<double>& delta) {
  std::ostringstream out;
  out << "nA,nB,nC,k,re_c,im_c,intensity,method,stderr";
  if (!delta.empty()) out << ",delta";
  out << '\n';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    out << e.index.nA << ',' << e.index.nB << ',' << e.index.nC << ',' << fmt(e.k) << ','
        << fmt(e.amplitude.real()) << ',' << fmt(e.amplitude.imag()) << ',' << fmt(e.intensity) << ','
        << dif::name(e.method) << ',' << fmt(e.std_error);
    if (!delta.empty()) out << ',' << fmt(delta.at(i));
    out << '\n';
  }
  return out.str();
}

Raster rasterize(const std::vector<Shaded>& points, int width) {
  if (width < 1 || width > limits::kMaxResolution) throw ResourceLimit("raster width out of range");
  Raster r;
  r.width = width;
  if (points.empty()) {
    r.height = width;
    r.pixels.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(width), 255);
    return r;
  }
  double x0 = points[0].z.real(), x1 = x0, y0 = points[0].z.imag(), y1 = y0;
  for (const auto& p : points) {
    x0 = std::min(x0, p.z.real());
    x1 = std::max(x1, p.z.real());
    y0 = std::min(y0, p.z.imag());
    y1 = std::max(y1, p.z.imag());
  }
  const double pad = 0.02 * std::max(x1 - x0, y1 - y0) + 1e-12;
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  const double scale = width / (x1 - x0);
  r.height = std::clamp(static_cast<int>(std::ceil((y1 - y0) * scale)), 1, limits::kMaxResolution);
  r.pixels.assign(static_cast<std::size_t>(r.width) * static_cast<std::size_t>(r.height), 255);
  for (const auto& p : points) {
    const int ix = std::clamp(static_cast<int>((p.z.real() - x0) * scale), 0, r.width - 1);
    // Image rows run top-down, the imaginary axis bottom-up.
    const int iy = std::clamp(static_cast<int>((y1 - p.z.imag()) * scale), 0, r.height - 1);
    auto& px = r.pixels[static_cast<std::size_t>(iy) * static_cast<std::size_t>(r.width) + static_cast<std::size_t>(ix)];
    px = std::min(px, p.shade);
  }
  return r;
}

std::string to_pgm(const Raster& r) {
  std::string out = "P5\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n255\n";
  out.append(r.pixels.begin(), r.pixels.end());
  return out;
}

}  // namespace kol::io

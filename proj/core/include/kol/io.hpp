#pragma once

// Serialization: fixed-digit floats, CSV rows, PGM rasters, atomic writes.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kol/cubic_field.hpp"
#include "kol/diffraction.hpp"
#include "kol/modelset.hpp"

namespace kol::io {

/// printf "%.12g"; negative zero prints as 0.
std::string fmt(double v);

/// "num/den", or "num" for integers.
std::string fmt(const Rational& q);

/// Writes to a temporary sibling and renames it into place.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Header "index,letter,pos_exact_c0,c1,c2,pos_real".
std::string sites_csv(const std::vector<ms::SitePoint>& sites);

/// Header "nA,nB,nC,k,re_c,im_c,intensity,method,stderr"; with `delta`
/// non-empty a trailing "delta" column holds one value per entry.
std::string spectrum_csv(const std::vector<dif::SpectrumEntry>& entries,
                         const std::vector<double>& delta = {});

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 0 = black
};

struct Shaded {
  Complex z;
  std::uint8_t shade = 0;
};

/// Draws the points over their bounding box (plus a 2% margin) onto a white
/// canvas of the given width; the height follows the aspect ratio.
Raster rasterize(const std::vector<Shaded>& points, int width);

/// Binary P5.
std::string to_pgm(const Raster& r);

}  // namespace kol::io

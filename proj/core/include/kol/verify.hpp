#pragma once

// Named verification suites. Each returns a Report whose checks carry the
// measured value and the threshold it was held to.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kol/report.hpp"
#include "kol/rng.hpp"

namespace kol {

struct VerifyConfig {
  std::size_t n = 10'000;
  double L = 100'000;
  int depth = 30;
  std::size_t samples = 100'000;
  std::uint64_t seed = kDefaultSeed;
  /// Letters for the sequence suite.
  std::size_t letters = 1'000'000;
};

/// identities, points, rhombus, sequence, density, tiling, subset, symmetry,
/// deformation, periodicity, dimension, genericity, all.
const std::vector<std::string>& suite_names();

/// Throws UnknownName.
Report run_suite(std::string_view suite, const VerifyConfig& cfg);

Report suite_identities();
Report suite_points();
Report suite_rhombus();
Report suite_sequence(const VerifyConfig& cfg);
Report suite_density(const VerifyConfig& cfg);
Report suite_tiling(const VerifyConfig& cfg);
Report suite_subset(const VerifyConfig& cfg);
Report suite_symmetry(const VerifyConfig& cfg);
Report suite_deformation(const VerifyConfig& cfg);
Report suite_periodicity(const VerifyConfig& cfg);
Report suite_dimension();
Report suite_genericity(const VerifyConfig& cfg);

}  // namespace kol

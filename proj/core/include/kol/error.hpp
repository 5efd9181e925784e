#pragma once

#include <stdexcept>
#include <string>

namespace kol {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// p == q, or a letter outside the configured alphabet.
class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a documented cap (sites, depth, samples, ...).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Bounded search finished without a result. Not a disproof.
class NotFound : public Error {
 public:
  using Error::Error;
};

class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

namespace limits {
inline constexpr std::size_t kMaxSites = 10'000'000;
inline constexpr int kMaxDepth = 40;
inline constexpr std::size_t kMaxSamples = 100'000'000;
inline constexpr int kMaxCloudDepth = 25;
inline constexpr int kMaxIndexBound = 10;
inline constexpr int kMaxResolution = 8192;
}  // namespace limits

}  // namespace kol

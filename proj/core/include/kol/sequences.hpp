#pragma once

// Kolakoski-(p,q) sequences: self-reading and alternating-substitution
// generators, the block substitution A -> ABC, B -> AB, C -> B for (3,1),
// its Perron data, and finite-prefix diagnostics.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kol/cubic_field.hpp"

namespace kol::seq {

using Bit = std::uint8_t;
using Word = std::vector<Bit>;

enum class Letter : std::uint8_t { A = 0, B = 1, C = 2 };
using BlockWord = std::vector<Letter>;

inline constexpr std::array<Letter, 3> kLetters{Letter::A, Letter::B, Letter::C};

char to_char(Letter l);
Letter letter_from_char(char c);
inline std::size_t index(Letter l) { return static_cast<std::size_t>(l); }

/// Bi-infinite word split at the seam. `left` is stored seam-outward
/// (left[0] is the letter immediately left of the seam).
template <class Symbol>
struct SeamWord {
  std::vector<Symbol> left;
  std::vector<Symbol> right;
};

struct BiWord : SeamWord<Bit> {
  int p = 0;
  int q = 0;
};
using BiBlockWord = SeamWord<Letter>;

/// First n letters of Kol(p,q) by reading run lengths off the word itself.
/// Throws InvalidAlphabet for p == q or p, q < 1.
Word kol_selfread(int p, int q, std::size_t n);

/// First n letters of Kol(p,q) by alternating sigma_0 (even positions) and
/// sigma_1 (odd positions) from the seed p.
Word kol_alternating(int p, int q, std::size_t n);

/// The iterates p, sigma(p), sigma^2(p), ... of the alternating scheme.
std::vector<Word> alternating_iterates(int p, int q, std::size_t count);

/// Bi-infinite Kol(p,q): right = Kol(p,q), left = Kol(q,p) read seam-outward.
BiWord kol_biinfinite(int p, int q, std::size_t n_left, std::size_t n_right);

/// One application of sigma: A -> ABC, B -> AB, C -> B.
BlockWord substitute(std::span<const Letter> w);

/// Prefix of length n of the one-sided fixed point starting with A.
BlockWord block_fixed_point(std::size_t n);

/// Exactly `iterations` applications of sigma to the seed B|A.
BiBlockWord block_biinfinite(int iterations);

/// Smallest iterate of B|A whose sides reach the requested lengths,
/// truncated to them.
BiBlockWord block_biinfinite(std::size_t n_left, std::size_t n_right);

/// A -> 33, B -> 31, C -> 11.
Word decode_blocks(std::span<const Letter> w);

struct PerronData {
  std::array<CubicNumber, 3> lengths;      // l_A, l_B, l_C
  std::array<CubicNumber, 3> frequencies;  // rho_A, rho_B, rho_C
  CubicNumber mean_length;                 // l
  CubicNumber freq3;                       // rho_3
  CubicNumber freq1;                       // rho_1
};

struct SubstitutionData {
  /// M[i][j] = number of occurrences of letter j in sigma(i).
  std::array<std::array<int, 3>, 3> matrix;
  /// det(xI - M) = x^3 + c[2] x^2 + c[1] x + c[0]
  std::array<long, 3> char_poly;
  PerronData perron;
};

const SubstitutionData& substitution_data();

std::array<std::array<long, 3>, 3> matrix_power(const std::array<std::array<int, 3>, 3>& m,
                                                int k);
std::array<long, 3> char_poly(const std::array<std::array<int, 3>, 3>& m);

struct RunlengthReport {
  bool ok = false;
  std::size_t checked = 0;
};

/// Compares the lengths of all complete runs (the trailing run is treated as
/// possibly truncated) with the prefix of w.
RunlengthReport verify_runlength_fixed(std::span<const Bit> w);

template <class Symbol>
std::map<Symbol, double> empirical_frequencies(std::span<const Symbol> w) {
  std::map<Symbol, double> out;
  for (auto s : w) out[s] += 1.0;
  for (auto& [_, v] : out) v /= static_cast<double>(w.size());
  return out;
}

enum class Family { pisot_unimodular, pisot, non_pisot, even_even, mixed_parity, degenerate };

Family classify(int p, int q);
std::string_view to_string(Family f);

/// Mirror symmetry of a bi-infinite Kol(p,q) around the first position left
/// (q == 1) or right (p == 1) of the seam, over the available letters.
bool mirror_check(const BiWord& bi);

struct PatchStatistics {
  std::size_t radius = 0;
  std::size_t distinct = 0;
  /// Largest gap between successive occurrences of any single patch.
  std::size_t max_gap = 0;
  std::map<std::string, std::size_t> counts;
};

template <class Symbol>
PatchStatistics patch_statistics(std::span<const Symbol> w, std::size_t r) {
  PatchStatistics stats;
  stats.radius = r;
  if (r == 0 || w.size() < r) return stats;
  std::string key(r, '\0');
  std::unordered_map<std::string, std::size_t> last;
  for (std::size_t i = 0; i + r <= w.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) key[j] = static_cast<char>('0' + static_cast<int>(w[i + j]));
    auto [it, inserted] = last.try_emplace(key, i);
    if (!inserted) {
      stats.max_gap = std::max(stats.max_gap, i - it->second);
      it->second = i;
    }
    ++stats.counts[key];
  }
  stats.distinct = stats.counts.size();
  return stats;
}

std::string to_ascii(std::span<const Bit> w);
std::string to_ascii(std::span<const Letter> w);

}  // namespace kol::seq

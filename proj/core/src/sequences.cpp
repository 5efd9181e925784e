#include "kol/sequences.hpp"

#include <algorithm>
#include <string>

namespace kol::seq {

namespace {

void check_alphabet(int p, int q) {
  if (p < 1 || q < 1) throw InvalidAlphabet("letters must be positive");
  if (p == q) throw InvalidAlphabet("degenerate alphabet: p == q");
  if (p > 9 || q > 9) throw InvalidAlphabet("letters above 9 have no single-character encoding");
}

constexpr std::array<std::string_view, 3> kImages{"ABC", "AB", "B"};

}  // namespace

char to_char(Letter l) { return "ABC"[index(l)]; }

Letter letter_from_char(char c) {
  switch (c) {
    case 'A':
      return Letter::A;
    case 'B':
      return Letter::B;
    case 'C':
      return Letter::C;
    default:
      throw InvalidAlphabet(std::string("not a block letter: ") + c);
  }
}

Word kol_selfread(int p, int q, std::size_t n) {
  check_alphabet(p, q);
  Word w;
  w.reserve(n + 9);
  // Run i has letter p (i even) or q (i odd) and length w[i]. When run i
  // starts at position i, w[i] is that run's own first letter.
  for (std::size_t run = 0; w.size() < n; ++run) {
    const Bit letter = static_cast<Bit>(run % 2 == 0 ? p : q);
    const std::size_t len = run < w.size() ? w[run] : letter;
    w.insert(w.end(), len, letter);
  }
  w.resize(n);
  return w;
}

std::vector<Word> alternating_iterates(int p, int q, std::size_t count) {
  check_alphabet(p, q);
  std::vector<Word> out;
  Word w{static_cast<Bit>(p)};
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(w);
    Word next;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Bit letter = static_cast<Bit>(j % 2 == 0 ? p : q);
      next.insert(next.end(), w[j], letter);
    }
    w = std::move(next);
  }
  return out;
}

Word kol_alternating(int p, int q, std::size_t n) {
  check_alphabet(p, q);
  if (n == 0) return {};
  // With p == 1 the seed is a fixed point of sigma_0; Kol(1,q) = 1 Kol(q,1).
  if (p == 1) {
    Word tail = kol_alternating(q, 1, n - 1);
    tail.insert(tail.begin(), 1);
    return tail;
  }
  Word w{static_cast<Bit>(p)};
  while (w.size() < n) {
    Word next;
    next.reserve(w.size() * static_cast<std::size_t>(std::max(p, q)));
    for (std::size_t j = 0; j < w.size() && next.size() < n + 9; ++j) {
      const Bit letter = static_cast<Bit>(j % 2 == 0 ? p : q);
      next.insert(next.end(), w[j], letter);
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

BiWord kol_biinfinite(int p, int q, std::size_t n_left, std::size_t n_right) {
  BiWord bi;
  bi.p = p;
  bi.q = q;
  bi.right = kol_selfread(p, q, n_right);
  bi.left = kol_selfread(q, p, n_left);
  return bi;
}

BlockWord substitute(std::span<const Letter> w) {
  BlockWord out;
  out.reserve(w.size() * 2 + 2);
  for (Letter l : w)
    for (char c : kImages[index(l)]) out.push_back(letter_from_char(c));
  return out;
}

BlockWord block_fixed_point(std::size_t n) {
  BlockWord w{Letter::A};
  while (w.size() < n) w = substitute(w);
  w.resize(n);
  return w;
}

namespace {

// sigma applied to a seam-outward left half: images are reversed.
BlockWord substitute_left(std::span<const Letter> left) {
  BlockWord out;
  out.reserve(left.size() * 2 + 2);
  for (Letter l : left) {
    const auto img = kImages[index(l)];
    for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(letter_from_char(*it));
  }
  return out;
}

}  // namespace

BiBlockWord block_biinfinite(int iterations) {
  BiBlockWord w{{Letter::B}, {Letter::A}};
  for (int k = 0; k < iterations; ++k) {
    w.left = substitute_left(w.left);
    w.right = substitute(w.right);
  }
  return w;
}

BiBlockWord block_biinfinite(std::size_t n_left, std::size_t n_right) {
  BiBlockWord w{{Letter::B}, {Letter::A}};
  while (w.left.size() < n_left || w.right.size() < n_right) {
    w.left = substitute_left(w.left);
    w.right = substitute(w.right);
  }
  w.left.resize(n_left);
  w.right.resize(n_right);
  return w;
}

Word decode_blocks(std::span<const Letter> w) {
  static constexpr std::array<std::array<Bit, 2>, 3> kCode{{{3, 3}, {3, 1}, {1, 1}}};
  Word out;
  out.reserve(2 * w.size());
  for (Letter l : w) {
    out.push_back(kCode[index(l)][0]);
    out.push_back(kCode[index(l)][1]);
  }
  return out;
}

std::array<std::array<long, 3>, 3> matrix_power(const std::array<std::array<int, 3>, 3>& m,
                                                int k) {
  std::array<std::array<long, 3>, 3> r{};
  for (int i = 0; i < 3; ++i) r[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    std::array<std::array<long, 3>, 3> next{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) next[i][j] += r[i][l] * m[l][j];
    r = next;
  }
  return r;
}

std::array<long, 3> char_poly(const std::array<std::array<int, 3>, 3>& m) {
  const long trace = m[0][0] + m[1][1] + m[2][2];
  const long minors = static_cast<long>(m[0][0]) * m[1][1] - static_cast<long>(m[0][1]) * m[1][0] +
                      static_cast<long>(m[0][0]) * m[2][2] - static_cast<long>(m[0][2]) * m[2][0] +
                      static_cast<long>(m[1][1]) * m[2][2] - static_cast<long>(m[1][2]) * m[2][1];
  const long det = static_cast<long>(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   static_cast<long>(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   static_cast<long>(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return {-det, minors, -trace};
}

namespace {

SubstitutionData make_substitution_data() {
  SubstitutionData d;
  d.matrix = {};
  for (std::size_t i = 0; i < 3; ++i)
    for (char c : kImages[i]) ++d.matrix[i][index(letter_from_char(c))];
  d.char_poly = char_poly(d.matrix);

  const Rational h(1, 2);
  auto& pd = d.perron;
  pd.lengths = {CubicNumber(0, -1, 1), CubicNumber(0, 1, 0), CubicNumber(1, 0, 0)};
  pd.frequencies = {CubicNumber(-h, 3 * h, -h), CubicNumber(0, -2, 1), CubicNumber(3 * h, h, -h)};
  pd.mean_length = CubicNumber(0);
  for (std::size_t i = 0; i < 3; ++i) pd.mean_length += pd.frequencies[i] * pd.lengths[i];
  // 3s: two per A, one per B, counted per letter of the decoded word.
  pd.freq3 = (CubicNumber(2) * pd.frequencies[0] + pd.frequencies[1]) * CubicNumber(h);
  pd.freq1 = CubicNumber(1) - pd.freq3;
  return d;
}

}  // namespace

const SubstitutionData& substitution_data() {
  static const SubstitutionData d = make_substitution_data();
  return d;
}

RunlengthReport verify_runlength_fixed(std::span<const Bit> w) {
  RunlengthReport rep;
  if (w.size() < 2) return rep;
  std::size_t run_index = 0;
  std::size_t i = 0;
  bool ok = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (j == w.size()) break;  // trailing run may be truncated
    if (run_index >= w.size() || w[run_index] != j - i) {
      ok = false;
      ++run_index;
      break;
    }
    ++run_index;
    i = j;
  }
  rep.checked = run_index;
  rep.ok = ok && run_index > 0;
  return rep;
}

Family classify(int p, int q) {
  if (p == q) return Family::degenerate;
  const bool p_odd = p % 2 != 0;
  const bool q_odd = q % 2 != 0;
  if (!p_odd && !q_odd) return Family::even_even;
  if (p_odd != q_odd) return Family::mixed_parity;
  if (p == q + 2 || q == p + 2) return Family::pisot_unimodular;
  const long d = p - q;
  return 2L * (p + q) >= d * d ? Family::pisot : Family::non_pisot;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::pisot_unimodular:
      return "pisot_unimodular";
    case Family::pisot:
      return "pisot";
    case Family::non_pisot:
      return "non_pisot";
    case Family::even_even:
      return "even_even";
    case Family::mixed_parity:
      return "mixed_parity";
    case Family::degenerate:
      return "degenerate";
  }
  return "unknown";
}

bool mirror_check(const BiWord& bi) {
  // Centre on left[0] (q == 1): left[j+1] mirrors right[j].
  // Centre on right[0] (p == 1): right[j+1] mirrors left[j].
  const Word* centre_side;
  const Word* other;
  if (bi.q == 1) {
    centre_side = &bi.left;
    other = &bi.right;
  } else if (bi.p == 1) {
    centre_side = &bi.right;
    other = &bi.left;
  } else {
    return false;
  }
  if (centre_side->empty()) return true;
  const std::size_t n = std::min(centre_side->size() - 1, other->size());
  for (std::size_t j = 0; j < n; ++j)
    if ((*centre_side)[j + 1] != (*other)[j]) return false;
  return true;
}

std::string to_ascii(std::span<const Bit> w) {
  std::string s;
  s.reserve(w.size());
  for (Bit b : w) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::string to_ascii(std::span<const Letter> w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(to_char(l));
  return s;
}

}  // namespace kol::seq

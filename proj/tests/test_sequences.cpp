#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "kol/sequences.hpp"
#include "support/oracle.hpp"

namespace {

using namespace kol::seq;
using kol::CubicNumber;
using kol::Rational;

Word bits(std::string_view s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Bit>(c - '0'));
  return w;
}

BlockWord blocks(std::string_view s) {
  BlockWord w;
  for (char c : s) w.push_back(letter_from_char(c));
  return w;
}

TEST(SelfRead, ClassicalPrefix) { EXPECT_EQ(to_ascii(kol_selfread(2, 1, 16)), "2211212212211211"); }

TEST(SelfRead, ThreeOnePrefix) { EXPECT_EQ(to_ascii(kol_selfread(3, 1, 12)), "333111333131"); }

TEST(SelfRead, OneTwoIsOneThenClassical) {
  EXPECT_EQ(to_ascii(kol_selfread(1, 2, 5)), "12211");
  const auto w = kol_selfread(1, 2, 1000);
  const auto c = kol_selfread(2, 1, 999);
  EXPECT_TRUE(std::equal(c.begin(), c.end(), w.begin() + 1));
}

TEST(SelfRead, RejectsDegenerateAlphabet) {
  EXPECT_THROW(kol_selfread(3, 3, 10), kol::InvalidAlphabet);
  EXPECT_THROW(kol_selfread(0, 1, 10), kol::InvalidAlphabet);
  EXPECT_THROW(kol_alternating(2, 2, 10), kol::InvalidAlphabet);
}

TEST(SelfRead, MatchesRunExpansionOracle) {
  for (auto [p, q] : {std::pair{2, 1}, {1, 2}, {3, 1}, {1, 3}, {5, 3}, {4, 1}}) {
    EXPECT_EQ(to_ascii(kol_selfread(p, q, 100'000)), oracle::kolakoski(p, q, 100'000)) << p << "," << q;
  }
}

TEST(Alternating, ClassicalIterates) {
  const auto it = alternating_iterates(2, 1, 5);
  ASSERT_EQ(it.size(), 5u);
  EXPECT_EQ(to_ascii(it[0]), "2");
  EXPECT_EQ(to_ascii(it[1]), "22");
  EXPECT_EQ(to_ascii(it[2]), "2211");
  EXPECT_EQ(to_ascii(it[3]), "221121");
  EXPECT_EQ(to_ascii(it[4]), "221121221");
}

TEST(Alternating, AgreesWithSelfReading) {
  EXPECT_EQ(kol_alternating(3, 1, 12), kol_selfread(3, 1, 12));
  for (auto [p, q] : {std::pair{2, 1}, {1, 2}, {3, 1}, {1, 3}})
    EXPECT_EQ(kol_alternating(p, q, 50'000), kol_selfread(p, q, 50'000)) << p << "," << q;
}

TEST(Alternating, SeedLetter) { EXPECT_EQ(to_ascii(kol_alternating(2, 1, 1)), "2"); }

TEST(Blocks, FixedPointPrefix) {
  EXPECT_EQ(to_ascii(block_fixed_point(12)), "ABCABBABCABA");
  EXPECT_EQ(to_ascii(block_fixed_point(1)), "A");
}

TEST(Blocks, BiinfiniteIterates) {
  const auto one = block_biinfinite(1);
  EXPECT_EQ(to_ascii(one.right), "ABC");
  const auto two = block_biinfinite(2);
  EXPECT_EQ(to_ascii(two.right), "ABCABB");
  auto left = two.left;
  std::reverse(left.begin(), left.end());
  EXPECT_EQ(to_ascii(left), "ABCAB");
}

TEST(Blocks, BiinfiniteMatchesStringOracle) {
  const auto w = block_biinfinite(5'000, 5'000);
  const auto o = oracle::block_tiling(5'000);
  std::string left(o.left.rbegin(), o.left.rend());
  EXPECT_EQ(to_ascii(w.right), o.right.substr(0, 5'000));
  EXPECT_EQ(to_ascii(w.left), left.substr(0, 5'000));
}

TEST(Blocks, Decode) {
  EXPECT_EQ(to_ascii(decode_blocks(blocks("A"))), "33");
  EXPECT_TRUE(decode_blocks(BlockWord{}).empty());
  EXPECT_EQ(to_ascii(decode_blocks(blocks("ABCAB"))), "3331113331");
  EXPECT_EQ(to_ascii(decode_blocks(blocks("ABCABB"))), "333111333131");
}

TEST(Substitution, Matrix) {
  const auto& d = substitution_data();
  const std::array<std::array<int, 3>, 3> want{{{1, 1, 1}, {1, 1, 0}, {0, 1, 0}}};
  EXPECT_EQ(d.matrix, want);
  EXPECT_EQ(d.char_poly, (std::array<long, 3>{-1, 0, -2}));
  const auto m3 = matrix_power(d.matrix, 3);
  for (const auto& row : m3)
    for (long v : row) EXPECT_GT(v, 0);
}

TEST(Substitution, PerronData) {
  const auto& p = substitution_data().perron;
  const CubicNumber a = CubicNumber::alpha();
  EXPECT_EQ(p.frequencies[1], a * a - 2 * a);
  const double al = static_cast<double>(oracle::alpha());
  EXPECT_NEAR(embed_real(p.frequencies[1]), al * al - 2 * al, 1e-12);
  EXPECT_NEAR(embed_real(p.frequencies[1]), 0.4533977, 1e-7);
  EXPECT_EQ(p.frequencies[0], Rational(1, 2) * (-a * a + 3 * a - 1));
  EXPECT_EQ(p.frequencies[0] + p.frequencies[1] + p.frequencies[2], CubicNumber(1));
  EXPECT_EQ(p.freq3, Rational(1, 2) * (a - 1));
  EXPECT_NEAR(embed_real(p.freq3), 0.60278, 1e-5);
  EXPECT_EQ(p.freq3 + p.freq1, CubicNumber(1));
  CubicNumber ell;
  for (int i = 0; i < 3; ++i) ell += p.frequencies[static_cast<std::size_t>(i)] * p.lengths[static_cast<std::size_t>(i)];
  EXPECT_EQ(ell, p.mean_length);
  EXPECT_EQ(p.mean_length, CubicNumber(Rational(7, 2), Rational(1, 2), Rational(-1, 2)));
}

TEST(Substitution, LengthsAreLeftEigenvector) {
  const auto& d = substitution_data();
  const CubicNumber a = CubicNumber::alpha();
  for (std::size_t i = 0; i < 3; ++i) {
    CubicNumber s;
    for (std::size_t j = 0; j < 3; ++j) s += d.matrix[i][j] * d.perron.lengths[j];
    EXPECT_EQ(s, a * d.perron.lengths[i]);
  }
}

TEST(Substitution, FrequenciesAreRightEigenvector) {
  const auto& d = substitution_data();
  const CubicNumber a = CubicNumber::alpha();
  for (std::size_t j = 0; j < 3; ++j) {
    CubicNumber s;
    for (std::size_t i = 0; i < 3; ++i) s += d.matrix[i][j] * d.perron.frequencies[i];
    EXPECT_EQ(s, a * d.perron.frequencies[j]);
  }
}

TEST(Runlength, LongPrefix) {
  const auto r = verify_runlength_fixed(kol_selfread(3, 1, 1'000'000));
  EXPECT_TRUE(r.ok);
  EXPECT_GT(r.checked, 100'000u);
}

TEST(Runlength, HandCheckedCounterexample) { EXPECT_FALSE(verify_runlength_fixed(bits("331")).ok); }

TEST(Runlength, ClassicalWord) { EXPECT_TRUE(verify_runlength_fixed(bits("2211212212")).ok); }

TEST(Runlength, AllGeneratedPrefixes) {
  for (auto [p, q] : {std::pair{2, 1}, {1, 2}, {3, 1}, {1, 3}})
    EXPECT_TRUE(verify_runlength_fixed(kol_selfread(p, q, 100'000)).ok) << p << "," << q;
}

TEST(Frequencies, ThreesInLongPrefix) {
  const auto w = kol_selfread(3, 1, 1'000'000);
  const auto f = empirical_frequencies<Bit>(w);
  EXPECT_NEAR(f.at(3), 0.60278, 1e-2);
}

TEST(Frequencies, BlocksInLongPrefix) {
  const auto w = block_fixed_point(1'000'000);
  const auto f = empirical_frequencies<Letter>(w);
  EXPECT_NEAR(f.at(Letter::A), 0.376, 1e-2);
  EXPECT_NEAR(f.at(Letter::B), 0.454, 1e-2);
  EXPECT_NEAR(f.at(Letter::C), 0.170, 1e-2);
}

TEST(Frequencies, ConstantWord) {
  const auto f = empirical_frequencies<Bit>(bits("333"));
  EXPECT_EQ(f.at(3), 1.0);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(3, 1), Family::pisot_unimodular);
  EXPECT_EQ(classify(1, 3), Family::pisot_unimodular);
  // 2(5 + 1) = 12 < (5 - 1)^2 = 16.
  EXPECT_EQ(classify(5, 1), Family::non_pisot);
  // 2(7 + 3) = 20 >= 16.
  EXPECT_EQ(classify(7, 3), Family::pisot);
  EXPECT_EQ(classify(2, 1), Family::mixed_parity);
  EXPECT_EQ(classify(4, 2), Family::even_even);
  EXPECT_EQ(classify(3, 3), Family::degenerate);
  EXPECT_EQ(to_string(Family::pisot_unimodular), "pisot_unimodular");
}

TEST(Mirror, ThreeOneBiinfinite) { EXPECT_TRUE(mirror_check(kol_biinfinite(3, 1, 10'000, 10'000))); }

TEST(Mirror, ClassicalBiinfinite) {
  const auto bi = kol_biinfinite(2, 1, 14, 14);
  std::string left = to_ascii(bi.left);
  std::reverse(left.begin(), left.end());
  EXPECT_EQ(left + "|" + to_ascii(bi.right), "11221221211221|22112122122112");
  EXPECT_TRUE(mirror_check(kol_biinfinite(2, 1, 10'000, 10'000)));
}

TEST(Mirror, SingleLetterWindow) { EXPECT_TRUE(mirror_check(kol_biinfinite(3, 1, 1, 0))); }

TEST(Mirror, DetectsBrokenSymmetry) {
  auto bi = kol_biinfinite(3, 1, 100, 100);
  bi.right[50] = bi.right[50] == 3 ? 1 : 3;
  EXPECT_FALSE(mirror_check(bi));
}

TEST(Patches, SingleLetters) {
  const auto w = kol_selfread(3, 1, 10'000);
  EXPECT_EQ(patch_statistics<Bit>(w, 1).distinct, 2u);
}

TEST(Patches, RadiusFourBaseline) {
  const auto w = kol_selfread(3, 1, 1'000'000);
  const auto s = patch_statistics<Bit>(w, 4);
  const std::string o = oracle::kolakoski(3, 1, 1'000'000);
  std::map<std::string, std::size_t> last;
  std::size_t gap = 0;
  for (std::size_t i = 0; i + 4 <= o.size(); ++i) {
    auto [it, fresh] = last.try_emplace(o.substr(i, 4), i);
    if (!fresh) {
      gap = std::max(gap, i - it->second);
      it->second = i;
    }
  }
  EXPECT_EQ(s.distinct, last.size());
  EXPECT_EQ(s.max_gap, gap);
  EXPECT_EQ(s.distinct, 10u);
  EXPECT_EQ(s.max_gap, 32u);
}

TEST(Patches, PeriodicWord) {
  const auto s = patch_statistics<Bit>(bits("31313131313131"), 2);
  EXPECT_EQ(s.distinct, 2u);
  EXPECT_EQ(s.max_gap, 2u);
}

TEST(Property, CrossGeneratorEquality) {
  gen::Gen g(11);
  const auto self = kol_selfread(3, 1, 1'000'000);
  const auto alt = kol_alternating(3, 1, 1'000'000);
  auto dec = decode_blocks(block_fixed_point(500'000));
  ASSERT_EQ(self, alt);
  ASSERT_EQ(self, dec);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(g.integer(1, 5'000));
    auto d = decode_blocks(block_fixed_point((n + 1) / 2));
    d.resize(n);
    ASSERT_EQ(kol_selfread(3, 1, n), d) << n;
    ASSERT_EQ(kol_alternating(3, 1, n), d) << n;
  }
}

TEST(Property, SubstitutionExtendsFixedPoint) {
  gen::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(g.integer(1, 20'000));
    const auto w = block_fixed_point(n);
    const auto s = substitute(w);
    ASSERT_GE(s.size(), w.size());
    ASSERT_EQ(s, block_fixed_point(s.size())) << n;
  }
}

TEST(Property, AbelianizationMatchesMatrixPowers) {
  const auto& m = substitution_data().matrix;
  for (Letter start : kLetters) {
    BlockWord w{start};
    for (int k = 0; k <= 12; ++k) {
      std::array<long, 3> counts{};
      for (Letter l : w) ++counts[index(l)];
      const auto mk = matrix_power(m, k);
      EXPECT_EQ(counts, mk[index(start)]) << "k = " << k;
      w = substitute(w);
    }
  }
}

TEST(Property, FrequencyErrorShrinks) {
  const double want = embed_real(substitution_data().perron.frequencies[0]);
  const auto w = block_fixed_point(1'000'000);
  double previous = 1;
  for (std::size_t n : {1'000u, 100'000u, 1'000'000u}) {
    const auto f = empirical_frequencies<Letter>(std::span(w).first(n));
    const double err = std::abs(f.at(Letter::A) - want);
    EXPECT_LE(err, previous + 1e-3) << n;
    previous = err;
  }
  EXPECT_LE(previous, 1e-2);
}

}  // namespace

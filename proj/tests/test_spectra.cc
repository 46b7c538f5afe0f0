#include <gtest/gtest.h>

#include "brute.h"
#include "circmagic/spectra.h"

using namespace circmagic;

namespace {

std::vector<Int> js(const std::vector<AdmissibleChar>& chars) {
  std::vector<Int> out;
  for (const auto& c : chars) out.push_back(c.j);
  return out;
}

std::vector<brute::I> offsets(const ConnectionSet& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

}  // namespace

TEST(Spectra, CyclotomicPolynomialsAreExact) {
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_poly(105);
  ASSERT_EQ(p.size(), 49u);
  bool saw_two = false;
  for (const auto& c : p) saw_two = saw_two || c == -2;
  EXPECT_TRUE(saw_two);
  EXPECT_EQ(cyclotomic_poly(12), (Polynomial{1, 0, -1, 0, 1}));
}

TEST(Spectra, Gamma3AndSixtyFixtures) {
  const ConnectionSet g3(24, {1, 2, 3});
  const auto a = admissible_set(g3);
  EXPECT_EQ(js(a), (std::vector<Int>{3, 8, 9, 15, 16, 21}));
  for (const auto& c : a) {
    const TypeTag want = c.j % 8 == 0 ? TypeTag::T2 : TypeTag::T1;
    EXPECT_EQ(c.types, std::vector<TypeTag>{want}) << c.j;
  }
  const auto b = admissible_set(ConnectionSet(60, {5, 6, 12}));
  EXPECT_EQ(js(b), (std::vector<Int>{2, 14, 15, 22, 26, 34, 38, 45, 46, 58}));
  for (const auto& c : b) {
    const TypeTag want = c.j % 15 == 0 ? TypeTag::T1 : TypeTag::T3;
    EXPECT_EQ(c.types, std::vector<TypeTag>{want}) << c.j;
  }
  EXPECT_TRUE(admissible_set(ConnectionSet(7, {1, 2, 3})).empty());
}

TEST(Spectra, WitnessShapes) {
  const ConnectionSet g3(24, {1, 2, 3});
  const auto w1 = type1_test(g3, 3);
  ASSERT_TRUE(w1);
  // j s2 = n0 (1 + 2 k1) with j = 3, n0 = 6 forces s2 = ±2.
  EXPECT_EQ(std::min(mod(w1->assignment[1], 24), mod(-w1->assignment[1], 24)), 2);
  EXPECT_FALSE(type1_test(g3, 8));
  EXPECT_TRUE(type2_test(g3, 8));
  const ConnectionSet s60(60, {5, 6, 12});
  const auto w15 = type1_test(s60, 15);
  ASSERT_TRUE(w15);
  EXPECT_EQ(std::min(mod(w15->assignment[1], 60), mod(-w15->assignment[1], 60)), 5);
  const auto w3 = type3_test(s60, 2);
  ASSERT_TRUE(w3);
  EXPECT_EQ(w3->variant, 2);
  EXPECT_FALSE(type3_test(s60, 15));
  const ConnectionSet s(60, {1, 5, 9});
  EXPECT_TRUE(type1_test(s, 5));
  EXPECT_TRUE(type2_test(s, 5));
}

// Every congruence witness re-substitutes, every admissible j vanishes
// numerically, and every numerically vanishing j is found.
TEST(Spectra, CongruenceEngineMatchesFloatingPoint) {
  for (Int n = 7; n <= 72; ++n) {
    for (const auto& s : enumerate_sets(n)) {
      const auto chars = admissible_set(s);
      for (const auto& c : chars) {
        for (const auto& w : c.witnesses) EXPECT_TRUE(witness_holds(s, c.j, w));
      }
      EXPECT_EQ(js(chars), brute::admissible(n, offsets(s))) << s.to_string();
    }
  }
}

TEST(Spectra, CyclotomicEngineMatchesCongruenceEngine) {
  for (Int n : {24, 30, 36, 60, 84, 90}) {
    const CharacterOracle oracle(n);
    for (const auto& s : enumerate_sets(n)) {
      EXPECT_EQ(oracle.zero_set(s), js(admissible_set(s))) << s.to_string();
    }
  }
  EXPECT_TRUE(char_sum_is_zero(ConnectionSet(24, {1, 2, 3}), 8));
  EXPECT_FALSE(char_sum_is_zero(ConnectionSet(24, {1, 2, 3}), 4));
}

TEST(Spectra, AdmissibleSetIsSymmetricAndMultiplierCovariant) {
  for (Int n : {24, 36, 60}) {
    for (const auto& s : enumerate_sets(n)) {
      const auto a = js(admissible_set(s));
      for (Int j : a) EXPECT_TRUE(std::binary_search(a.begin(), a.end(), n - j));
      for (Int q : {Int{5}, Int{7}}) {
        if (gcd(q, n) != 1) continue;
        // chi_j(qS) = chi_{qj}(S)
        auto b = js(admissible_set(multiply(s, q)));
        std::vector<Int> img;
        for (Int j : b) img.push_back(mul_mod(q, j, n));
        std::sort(img.begin(), img.end());
        EXPECT_EQ(img, a);
      }
    }
  }
}

TEST(Spectra, CandidateFilter) {
  EXPECT_EQ(candidate_filter(ConnectionSet(7, {1, 2, 3})).kind, FilterResult::Kind::kEmpty);
  EXPECT_TRUE(candidate_filter(ConnectionSet(24, {1, 2, 3})).passed());
  // A common divisor of every admissible j rules the set out.
  for (Int n = 7; n <= 60; ++n) {
    for (const auto& s : enumerate_sets(n)) {
      const auto a = js(admissible_set(s));
      const auto f = candidate_filter(s);
      if (a.empty()) {
        EXPECT_EQ(f.kind, FilterResult::Kind::kEmpty);
        continue;
      }
      Int g = n;
      for (Int j : a) g = gcd(g, j);
      EXPECT_EQ(f.passed(), g == 1) << s.to_string();
      if (!f.passed()) EXPECT_EQ(f.divisor, g);
    }
  }
}

TEST(Spectra, TagProfile) {
  const auto p = tag_profile(admissible_set(ConnectionSet(24, {1, 2, 3})));
  EXPECT_FALSE(p.empty);
  EXPECT_TRUE(p.any_t1 && p.any_t2);
  EXPECT_FALSE(p.all_t1 || p.all_t2 || p.any_t3);
  const auto q = tag_profile(admissible_set(ConnectionSet(105, {1, 6, 34})));
  EXPECT_TRUE(q.all_t2);
}

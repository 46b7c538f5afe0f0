#include <gtest/gtest.h>

#include "brute.h"
#include "circmagic/families.h"

using namespace circmagic;

TEST(Families, SerializationRoundTrips) {
  for (Int n : {12, 24, 60, 105, 420, 1540}) {
    for (const auto& f : enumerate_families(n)) {
      EXPECT_EQ(parse_family(to_string(f)), f);
      EXPECT_EQ(family_order(f), n);
    }
  }
  EXPECT_THROW(parse_family("Foo[3]"), std::invalid_argument);
  EXPECT_THROW(parse_family("T1a[5"), std::invalid_argument);
  EXPECT_THROW(parse_family("T1a[5,5]"), DomainError);
  EXPECT_THROW(parse_family("Pr[4]"), DomainError);
  EXPECT_THROW(parse_family("T1b[3,5,9]"), DomainError);
}

TEST(Families, RawElementsSolveTheirCongruences) {
  for (Int n = 60; n <= 2000; n += 4) {
    for (const auto& f : enumerate_families(n)) {
      const auto raw = family_raw_elements(f);
      if (const auto* x = std::get_if<T1Case1>(&f)) {
        EXPECT_EQ(raw[2], *brute::crt({{0, 4}, {2, x->d}, {-2, x->d1}}));
      } else if (const auto* y = std::get_if<T1Case2>(&f)) {
        EXPECT_EQ(raw[0], y->d);
        const brute::I b = raw[1];
        EXPECT_EQ(brute::md(b - (2 - y->d), 4), 0) << to_string(f);
        EXPECT_EQ(brute::md(b, y->d1), 0) << to_string(f);
        EXPECT_EQ(brute::md(b + y->d, y->d2), 0) << to_string(f);
        EXPECT_EQ(brute::gcd(b, y->d), 1) << to_string(f);
      }
    }
  }
}

TEST(Families, WorkedSets) {
  EXPECT_EQ(family_connection_set(T1Case1{5, 77}), ConnectionSet(1540, {2, 152, 385}));
  EXPECT_EQ(family_connection_set(T1Case2{5, 7, 11}), ConnectionSet(1540, {5, 413, 737}));
  const auto raw = family_raw_elements(T1Case2{1, 5, 77});
  EXPECT_EQ(raw[1], 1385);
  EXPECT_EQ(raw[2], 1309);
  EXPECT_EQ(family_connection_set(T1Case2{1, 5, 77}), ConnectionSet(1540, {1, 155, 231}));
  EXPECT_EQ(family_connection_set(T2Family{5, 7}), ConnectionSet(105, {1, 6, 34}));
  EXPECT_EQ(family_connection_set(MobiusLadderLex{3}), ConnectionSet(12, {1, 3, 5}));
  EXPECT_EQ(family_connection_set(PrismLex{3}), ConnectionSet(12, {2, 3, 4}));
  EXPECT_EQ(family_connection_set(CycleLex{8}), ConnectionSet(24, {1, 7, 9}));
}

TEST(Families, EnumerationAtWorkedOrders) {
  const std::vector<Family> f1540 = {MobiusLadderLex{385}, PrismLex{385},     T1Case1{5, 77},
                                     T1Case1{7, 55},       T1Case1{11, 35},   T1Case2{1, 5, 77},
                                     T1Case2{1, 7, 55},    T1Case2{1, 11, 35}, T1Case2{5, 7, 11}};
  EXPECT_EQ(enumerate_families(1540), f1540);
  EXPECT_EQ(enumerate_families(12), (std::vector<Family>{MobiusLadderLex{3}, PrismLex{3}, CycleLex{4}}));
  EXPECT_EQ(enumerate_families(105), (std::vector<Family>{CycleLex{35}, T2Family{5, 7}}));
  EXPECT_EQ(enumerate_families(8), (std::vector<Family>{MobiusLadderLex{2}}));
}

TEST(Families, RecognitionMatchesBruteForceMultipliers) {
  for (Int n : {12, 24, 36, 60, 105, 140}) {
    for (const auto& s : enumerate_sets(n)) {
      const auto all = recognize_all(s);
      for (const auto& r : all) EXPECT_EQ(multiply(s, r.q), family_connection_set(r.family));
      // Cross-check: a family matches iff the canonical forms agree.
      std::size_t expect_count = 0;
      for (const auto& f : enumerate_families(n)) {
        const auto t = family_connection_set(f);
        const auto bt = brute::canonical(n, {t.a(), t.b(), t.c()});
        const auto bs = brute::canonical(n, {s.a(), s.b(), s.c()});
        expect_count += bt == bs ? 1 : 0;
      }
      EXPECT_EQ(all.size(), expect_count) << s.to_string();
    }
  }
  const auto r = recognize(ConnectionSet(24, {1, 6, 11}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->family, Family(MobiusLadderLex{6}));
  EXPECT_EQ(recognize(ConnectionSet(24, {1, 7, 9}))->family, Family(CycleLex{8}));
  EXPECT_FALSE(recognize(ConnectionSet(24, {1, 2, 3})));
  EXPECT_FALSE(recognize(ConnectionSet(24, {1, 7, 9}), FamilyFilter::kType1));
}

TEST(Families, KnownStatus) {
  EXPECT_TRUE(family_is_distance_magic(CycleLex{8}));
  EXPECT_FALSE(family_is_distance_magic(CycleLex{6}));
  EXPECT_TRUE(family_is_distance_magic(CycleLex{9}));
  EXPECT_FALSE(family_is_distance_magic(T2Family{2, 5}));
  EXPECT_TRUE(is_trivial(PrismLex{3}));
  EXPECT_TRUE(is_type1_family(T1Case2{1, 5, 7}));
  EXPECT_TRUE(is_type2_family(CycleLex{4}));
}

TEST(Families, TypeThreeConditions) {
  const auto t = type3_necessary(ConnectionSet(60, {5, 6, 12}));
  EXPECT_TRUE(t.passed());
  EXPECT_EQ(t.five_multiple, 5);
  EXPECT_THROW(type3_necessary(ConnectionSet(24, {1, 2, 3})), DomainError);
  // Other order-60 candidates with a type-3 character all fail.
  for (const auto& s : enumerate_sets(60)) {
    if (s == ConnectionSet(60, {5, 6, 12})) continue;
    const auto chars = admissible_set(s);
    if (!tag_profile(chars).any_t3 || !candidate_filter(s, chars).passed()) continue;
    EXPECT_FALSE(type3_necessary(s, chars).passed()) << s.to_string();
  }
  // Orders not divisible by 60 fail on divisibility.
  for (Int n : {30, 90, 150}) {
    for (const auto& s : enumerate_sets(n)) {
      const auto chars = admissible_set(s);
      if (!tag_profile(chars).any_t3) continue;
      EXPECT_EQ(type3_necessary(s, chars).failed, Type3Check::Bullet::kDivisibility);
    }
  }
}

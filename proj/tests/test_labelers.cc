#include <gtest/gtest.h>

#include "brute.h"
#include "circmagic/labelers.h"

using namespace circmagic;

namespace {

std::vector<brute::I> offsets_of(const ConnectionSet& s) {
  return {s.a(), -s.a(), s.b(), -s.b(), s.c(), -s.c()};
}

// Labels are a permutation of 1..n with every neighbourhood sum equal.
void expect_magic(const ConnectionSet& s, const Labeling& l) {
  const auto k = brute::magic(s.n(), offsets_of(s), l.values());
  ASSERT_TRUE(k) << s.to_string();
  EXPECT_EQ(*k, 3 * (s.n() + 1)) << s.to_string();
}

bool reuses_t2(Int m) {
  if (brute::gcd(m, 6) != 1) return false;
  for (Int d = 2; d * d < m; ++d) {
    if (m % d == 0 && brute::gcd(d, m / d) == 1) return true;
  }
  return false;
}

}  // namespace

TEST(Labelers, EveryDistanceMagicFamilyUpTo400) {
  for (Int n = 8; n <= 400; ++n) {
    for (const auto& f : enumerate_families(n)) {
      if (!family_is_distance_magic(f)) {
        EXPECT_THROW(label_family(f), DomainError) << to_string(f);
        continue;
      }
      // C3K without a T2 factorization is left to search, which may give up.
      if (const auto* c = std::get_if<CycleLex>(&f); c && !reuses_t2(c->m)) continue;
      expect_magic(family_connection_set(f), label_family(f));
    }
  }
}

TEST(Labelers, LexPairShape) {
  const Labeling l = label_lex_pair(MobiusLadderLex{5});
  for (Int x = 0; x < 10; ++x) {
    EXPECT_EQ(l(x), x + 1);
    EXPECT_EQ(l(x + 10), 20 - x);
  }
}

TEST(Labelers, Case2AntipodalAndQuotient) {
  for (const T1Case2 f : {T1Case2{1, 3, 5}, T1Case2{3, 5, 7}, T1Case2{1, 5, 77}, T1Case2{5, 7, 11}}) {
    const Labeling l = label_t1_case2(f);
    const Int n = family_order(f);
    for (Int x = 0; x < n / 2; ++x) EXPECT_EQ(l(x) + l(x + n / 2), n + 1);
    expect_magic(family_connection_set(f), l);
  }
}

TEST(Labelers, Case2ScaffoldOnlyWorksWithoutTheCommonFactor) {
  const auto check = [](const T1Case2& f, Case2Coordinates c) {
    const auto s = family_connection_set(f);
    return brute::magic(s.n(), offsets_of(s), t1_case2_values(f, c)).has_value();
  };
  EXPECT_TRUE(check(T1Case2{1, 3, 5}, Case2Coordinates::kScaffold));
  EXPECT_TRUE(check(T1Case2{1, 5, 7}, Case2Coordinates::kScaffold));
  EXPECT_FALSE(check(T1Case2{3, 5, 7}, Case2Coordinates::kScaffold));
  EXPECT_TRUE(check(T1Case2{3, 5, 7}, Case2Coordinates::kQuotient));
  EXPECT_TRUE(check(T1Case2{1, 3, 5}, Case2Coordinates::kQuotient));
}

TEST(Labelers, T2TripleSums) {
  for (const T2Family f : {T2Family{5, 7}, T2Family{5, 11}, T2Family{7, 11}}) {
    const Labeling l = label_t2(f);
    const Int n = family_order(f), n0 = f.d * f.d1;
    for (Int x = 0; x < n; ++x) EXPECT_EQ(l(x) + l(x + n0) + l(x + 2 * n0), 3 * (n + 1) / 2);
  }
  EXPECT_THROW(label_t2(T2Family{2, 5}), DomainError);
}

TEST(Labelers, CycleLex) {
  for (Int m : {3, 4, 5, 7, 8, 9, 12, 35, 55, 77}) {
    expect_magic(ConnectionSet(3 * m, {1, m - 1, m + 1}), label_cycle_lex(m));
  }
  EXPECT_THROW(label_cycle_lex(11, {10'000, 0}), SearchFailure);
  EXPECT_THROW(label_cycle_lex(6), DomainError);
  EXPECT_THROW(label_cycle_lex(10), DomainError);
}

TEST(Labelers, SublabelingContract) {
  // (n0, c0) pairs used by the first type-1 family.
  const std::vector<std::pair<Int, Int>> cases = {{15, 4}, {35, 6}, {21, 8}, {33, 10}, {45, 26}, {77, 34}};
  for (auto [n0, c0] : cases) {
    const auto split = tetravalent_sublabeling(n0, c0, {SublabelingMethod::kResidueSplit, {}});
    EXPECT_EQ(split.method, SublabelingMethod::kResidueSplit);
    EXPECT_TRUE(satisfies_sublabeling_contract(split.labeling, n0, c0)) << n0 << "," << c0;
    const auto a = tetravalent_sublabeling(n0, c0);
    EXPECT_TRUE(satisfies_sublabeling_contract(a.labeling, n0, c0)) << n0 << "," << c0;
  }
  EXPECT_THROW(tetravalent_sublabeling(15, 5), DomainError);
  EXPECT_THROW(tetravalent_sublabeling(16, 4), DomainError);
}

TEST(Labelers, ContractRejectsBrokenLabelings) {
  auto sub = tetravalent_sublabeling(15, 4, {SublabelingMethod::kResidueSplit, {}});
  auto v = sub.labeling.values();
  std::swap(v[0], v[2]);
  EXPECT_FALSE(satisfies_sublabeling_contract(Labeling(v), 15, 4));
}

TEST(Labelers, ConnectionSetTransport) {
  for (Int n : {12, 24, 60, 105, 140}) {
    for (const auto& s : enumerate_sets(n)) {
      const auto r = recognize(s);
      if (!r || !family_is_distance_magic(r->family)) continue;
      const auto got = label_connection_set(s);
      ASSERT_TRUE(got.family);
      expect_magic(s, got.labeling);
    }
  }
  const auto g3 = label_connection_set(ConnectionSet(24, {1, 2, 3}));
  EXPECT_FALSE(g3.family);
  EXPECT_TRUE(g3.search);
  expect_magic(ConnectionSet(24, {1, 2, 3}), g3.labeling);
}

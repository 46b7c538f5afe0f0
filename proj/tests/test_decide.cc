#include <gtest/gtest.h>

#include "brute.h"
#include "circmagic/decide.h"

using namespace circmagic;

TEST(Decide, MatchesBruteForceUpTo10) {
  for (Int n = 7; n <= 10; ++n) {
    for (const auto& s : enumerate_sets(n)) {
      const auto v = decide(s);
      ASSERT_NE(v.status, Verdict::kUnknown) << s.to_string();
      const bool dm = brute::any_magic(n, {s.a(), -s.a(), s.b(), -s.b(), s.c(), -s.c()});
      EXPECT_EQ(v.status == Verdict::kYes, dm) << s.to_string();
    }
  }
}

TEST(Decide, CascadeSteps) {
  auto v = decide(ConnectionSet(7, {1, 2, 3}));
  EXPECT_EQ(v.status, Verdict::kNo);
  EXPECT_EQ(v.reason, NoReason::kEmptyKernel);
  EXPECT_EQ(v.step, 1);

  v = decide(ConnectionSet(1540, {2, 152, 385}));
  EXPECT_EQ(v.status, Verdict::kYes);
  ASSERT_TRUE(v.family);
  EXPECT_EQ(v.family->family, Family(T1Case1{5, 77}));

  v = decide(ConnectionSet(105, {1, 6, 34}));
  EXPECT_EQ(v.status, Verdict::kYes);
  EXPECT_EQ(v.family->family, Family(T2Family{5, 7}));

  v = decide(ConnectionSet(24, {1, 2, 3}));
  EXPECT_EQ(v.status, Verdict::kYes);
  EXPECT_EQ(v.step, 6);
  ASSERT_TRUE(v.labeling);
  EXPECT_EQ(verify(Circulant(ConnectionSet(24, {1, 2, 3})), *v.labeling), 75);

  v = decide(ConnectionSet(18, {1, 5, 7}));  // C3K[6]
  EXPECT_EQ(v.status, Verdict::kNo);
}

TEST(Decide, YesAlwaysComesWithEvidence) {
  for (Int n : {12, 16, 24, 36, 105}) {
    for (const auto& s : enumerate_sets(n)) {
      const auto v = decide(s, {{200'000, 0}, {}});
      if (v.status != Verdict::kYes) continue;
      EXPECT_TRUE(v.family || v.labeling) << s.to_string();
      if (v.labeling) {
        EXPECT_EQ(verify(Circulant(s), *v.labeling), 3 * (n + 1)) << s.to_string();
      }
      if (v.family) EXPECT_EQ(multiply(s, v.family->q), family_connection_set(v.family->family));
    }
  }
}

TEST(Decide, InvariantUnderMultipliers) {
  for (Int n : {12, 15, 20, 24}) {
    for (const auto& s : enumerate_sets(n)) {
      const auto v = decide(s).status;
      for (Int q : brute::units(n)) {
        if (q > 7) break;
        EXPECT_EQ(decide(multiply(s, q)).status, v) << s.to_string() << " * " << q;
      }
    }
  }
}

TEST(Decide, RejectsDisconnected) {
  EXPECT_THROW(decide(ConnectionSet(24, {2, 4, 6})), DomainError);
}

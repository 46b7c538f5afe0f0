#include <gtest/gtest.h>

#include "brute.h"
#include "circmagic/modular.h"

using namespace circmagic;

TEST(Modular, ModAndMulModMatchPlainArithmetic) {
  for (Int m = 1; m < 40; ++m) {
    for (Int x = -100; x <= 100; ++x) {
      EXPECT_EQ(mod(x, m), brute::md(x, m));
      EXPECT_EQ(mul_mod(x, x + 7, m), brute::md(x * (x + 7), m));
    }
  }
}

TEST(Modular, MulModSurvivesLargeOperands) {
  const Int m = (Int{1} << 61) - 1;
  // (m - 1)^2 = 1 (mod m)
  EXPECT_EQ(mul_mod(m - 1, m - 1, m), 1);
  EXPECT_EQ(mul_mod(-(m - 1), m - 1, m), m - 1);
}

TEST(Modular, ExtendedGcdIdentity) {
  for (Int a = -30; a <= 30; ++a) {
    for (Int b = -30; b <= 30; ++b) {
      const auto e = extended_gcd(a, b);
      EXPECT_EQ(e.g, brute::gcd(a, b));
      EXPECT_EQ(a * e.x + b * e.y, e.g);
    }
  }
}

TEST(Modular, InverseAgreesWithSearch) {
  for (Int m = 2; m < 60; ++m) {
    for (Int a = -5; a < m; ++a) {
      const auto want = brute::inverse(a, m);
      if (want) {
        EXPECT_EQ(mod_inverse(a, m), *want) << a << " mod " << m;
      } else {
        EXPECT_THROW(mod_inverse(a, m), DomainError);
      }
    }
  }
}

TEST(Modular, CrtAgreesWithStepping) {
  for (Int d = 3; d < 12; d += 2) {
    for (Int d1 = d + 2; d1 < 30; d1 += 2) {
      if (brute::gcd(d, d1) != 1) continue;
      const auto got = crt_solve({{0, 4}, {2, d}, {-2, d1}});
      const auto want = brute::crt({{0, 4}, {2, d}, {-2, d1}});
      ASSERT_TRUE(want.has_value());
      EXPECT_EQ(got.value, *want);
      EXPECT_EQ(got.modulus, 4 * d * d1);
    }
  }
}

TEST(Modular, CrtWorkedValues) {
  EXPECT_EQ(crt_solve({{0, 4}, {2, 5}, {-2, 77}}).value, 152);
  EXPECT_EQ(crt_solve({{0, 4}, {2, 7}, {-2, 55}}).value, 548);
  EXPECT_EQ(crt_solve({}).value, 0);
  EXPECT_EQ(crt_solve({{3, 1}, {1, 2}}).value, 1);
}

TEST(Modular, CrtRejectsSharedFactors) {
  EXPECT_THROW(crt_solve({{1, 6}, {1, 4}}), DomainError);
}

TEST(Modular, PPartAndFactorize) {
  EXPECT_EQ(p_part(60, 5), 5);
  EXPECT_EQ(p_part(60, 2), 4);
  EXPECT_EQ(p_part(60, 7), 1);
  EXPECT_THROW(p_part(60, 4), DomainError);
  for (Int m = 1; m < 500; ++m) {
    Int prod = 1;
    for (const auto& pp : factorize(m)) {
      EXPECT_TRUE(is_prime(pp.prime));
      prod *= pp.value();
      EXPECT_EQ(p_part(m, pp.prime), pp.value());
    }
    EXPECT_EQ(prod, m);
  }
}

TEST(Modular, DivisorsAndUnits) {
  for (Int m = 1; m < 200; ++m) {
    std::vector<Int> d;
    for (Int x = 1; x <= m; ++x) {
      if (m % x == 0) d.push_back(x);
    }
    EXPECT_EQ(divisors(m), d);
    if (m > 1) {
      const auto u = brute::units(m);
      EXPECT_EQ(units(m), std::vector<Int>(u.begin(), u.end()));
    }
  }
}

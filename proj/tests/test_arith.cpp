#include <gtest/gtest.h>

#include <numeric>

#include "circwl/arith.hpp"

using namespace circwl;

TEST(Arith, ModIsNonNegative) {
  EXPECT_EQ(mod(-1, 5), 4);
  EXPECT_EQ(mod(-10, 5), 0);
  EXPECT_EQ(mod(12, 5), 2);
}

TEST(Arith, PrimesBelowFiftyMatchSieve) {
  std::vector<bool> composite(50, false);
  for (int i = 2; i < 50; ++i)
    for (int j = 2 * i; j < 50; j += i) composite[j] = true;
  for (int i = 0; i < 50; ++i) EXPECT_EQ(is_prime(i), i >= 2 && !composite[i]) << i;
}

TEST(Arith, DivisorsAscending) {
  EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<int>{1}));
}

TEST(Arith, UnitsAreCoprimeResidues) {
  for (int n = 2; n <= 40; ++n) {
    std::vector<int> expected;
    for (int x = 1; x < n; ++x)
      if (std::gcd(x, n) == 1) expected.push_back(x);
    EXPECT_EQ(units(n), expected) << n;
  }
}

TEST(Arith, PrimitiveRoots) {
  EXPECT_EQ(smallest_primitive_root(7), 3);
  EXPECT_EQ(smallest_primitive_root(13), 2);
  EXPECT_EQ(smallest_primitive_root(41), 6);
  EXPECT_FALSE(is_primitive_root(2, 7));
  EXPECT_EQ(multiplicative_order(2, 7), 3);
}

TEST(Arith, QuadraticResiduesAgainstSquaring) {
  for (int p : {5, 7, 11, 13, 29}) {
    std::vector<bool> square(p, false);
    for (int x = 1; x < p; ++x) square[x * x % p] = true;
    for (int r : quadratic_residues(p)) EXPECT_TRUE(square[r]);
    for (int r : quadratic_nonresidues(p)) EXPECT_FALSE(square[r]);
    EXPECT_EQ(quadratic_residues(p).size(), static_cast<std::size_t>((p - 1) / 2));
    for (int x = 1; x < p; ++x) EXPECT_EQ(legendre(x, p), square[x] ? 1 : -1);
    EXPECT_EQ(legendre(0, p), 0);
  }
}

TEST(Arith, PerfectSquares) {
  EXPECT_TRUE(is_perfect_square(0));
  EXPECT_TRUE(is_perfect_square(49));
  EXPECT_FALSE(is_perfect_square(50));
  EXPECT_FALSE(is_perfect_square(-4));
  EXPECT_TRUE(is_perfect_square(999999LL * 999999LL));
}

#include "qsl2/qcoeff.hpp"

#include <gtest/gtest.h>

#include <cstdint>

using namespace qsl2;

namespace {

BigradedLaurent q(int k) { return BigradedLaurent::q_power(k); }

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST(Laurent, ArithmeticAndTrim) {
  const Laurent a = Laurent::monomial(1) + Laurent::monomial(-1);
  EXPECT_EQ((a - a), Laurent());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * a).to_string(), "q^2 + 2 + q^-2");
  EXPECT_EQ((a * a).exact_divide(a), a);
  EXPECT_THROW((a + Laurent(1)).exact_divide(a), InexactDivision);
}

TEST(BigradedLaurent, QLine) {
  EXPECT_TRUE(q(3).in_q_line());
  EXPECT_EQ(q(3).coefficient(3, -3), 1);
  const auto off = BigradedLaurent::monomial(1, 0);
  EXPECT_FALSE(off.in_q_line());
  EXPECT_THROW(off.to_q_line(), std::invalid_argument);
  EXPECT_EQ(off.to_string(), "s");
  EXPECT_EQ((q(2) * q(-2)), BigradedLaurent(1));
  EXPECT_EQ(q(2).monomial_inverse(), q(-2));
}

TEST(BigradedLaurent, NoZeroCoefficientsStored) {
  BigradedLaurent x = q(1) + q(-1);
  x -= q(1);
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(x, q(-1));
  x -= q(-1);
  EXPECT_TRUE(x.is_zero());
  EXPECT_TRUE(x.terms().empty());
}

TEST(BigradedLaurent, Decategorify) {
  // <k> maps to q^-k; [1] maps to -1; {1} maps to -q.
  EXPECT_EQ(decategorify(q(2)), Laurent::monomial(-2));
  EXPECT_EQ(decategorify(BigradedLaurent::monomial(1, 0)), Laurent(-1));
  EXPECT_EQ(decategorify(BigradedLaurent::monomial(0, 1)), Laurent::monomial(1, -1));
}

TEST(QInt, Examples) {
  EXPECT_EQ(qint(2), q(1) + q(-1));
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(-3), -(q(2) + BigradedLaurent(1) + q(-2)));
  EXPECT_EQ(qint(2).to_string(), "q + q^-1");
}

TEST(QBinom, Examples) {
  EXPECT_EQ(qbinom(2, 1), q(1) + q(-1));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(qbinom(n, 0), BigradedLaurent(1));
  EXPECT_EQ(qbinom(4, 2), q(4) + q(2) + BigradedLaurent(2) + q(-2) + q(-4));
  EXPECT_EQ(qbinom(4, 2).to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
  EXPECT_TRUE(qbinom(3, 4).is_zero());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
  EXPECT_TRUE(qbinom(-1, 0).is_zero());
}

TEST(Poincare, Examples) {
  EXPECT_TRUE(poincare_proj(-1).is_zero());
  EXPECT_EQ(poincare_proj(0), BigradedLaurent(1));
  EXPECT_EQ(poincare_proj(2), q(2) + BigradedLaurent(1) + q(-2));
  EXPECT_EQ(poincare_grassmannian(1, 3), qbinom(3, 1));
  EXPECT_EQ(poincare_flag(3), qint(2) * qint(3));
}

TEST(QCoeffProperty, BarSymmetry) {
  for (int n = -12; n <= 12; ++n) EXPECT_EQ(qint(n).bar(), qint(n)) << n;
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto b = qbinom(m, k);
      for (const auto& [deg, c] : b.terms()) EXPECT_EQ(b.coefficient(-deg.hom, -deg.eq), c) << m << "," << k;
    }
}

TEST(QCoeffProperty, Symmetry) {
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) EXPECT_EQ(qbinom(m, k), qbinom(m, m - k)) << m << "," << k;
}

TEST(QCoeffProperty, QPascal) {
  for (int m = 2; m <= 12; ++m)
    for (int k = 1; k < m; ++k)
      EXPECT_EQ(qbinom(m, k), q(k) * qbinom(m - 1, k) + q(k - m) * qbinom(m - 1, k - 1)) << m << "," << k;
}

TEST(QCoeffProperty, SpecializationAtOne) {
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) {
      EXPECT_EQ(qbinom(m, k).at_one(), Integer(binomial(m, k)));
      EXPECT_TRUE(qbinom(m, k).has_nonnegative_coefficients());
    }
}

TEST(QCoeffProperty, FactorialDividesExactly) {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const auto prod = qfact(a + b);
      EXPECT_NO_THROW((void)prod.exact_divide(qfact(a) * qfact(b))) << a << "," << b;
      EXPECT_EQ(prod.exact_divide(qfact(a)) * qfact(a), prod);
    }
}

TEST(QCoeffProperty, CanonicalPrintOrder) {
  const auto x = BigradedLaurent::monomial(1, 2) + BigradedLaurent::monomial(1, -1, 3) + BigradedLaurent::monomial(-2, 0);
  EXPECT_EQ(x.to_string(), "st^2 + 3st^-1 + s^-2");
}

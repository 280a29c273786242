#include <gtest/gtest.h>

#include <random>

#include "griess/numerics/eisenstein.hpp"
#include "griess/numerics/matrix.hpp"
#include "griess/numerics/rational.hpp"

using griess::num::Eisenstein;
using griess::num::RatMatrix;
using griess::num::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<int> n(-range, range);
  std::uniform_int_distribution<int> d(1, range);
  return Rational(n(rng), d(rng));
}

Eisenstein random_eisenstein(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng)};
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range = 5) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, range);
  return m;
}

RatMatrix g9_gram() {
  RatMatrix g(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) g(i, j) = i == j ? Rational(1, 4) : Rational(1, 256);
  return g;
}

}  // namespace

TEST(Rational, ReducedForm) {
  Rational q(6, -4);
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational::parse("-21/176"), Rational(-21, 176));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, PromotesOnOverflow) {
  Rational big(1LL << 62);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq / big, big);
  EXPECT_TRUE((sq / big).is_small());
  mpz_class expect = mpz_class(1) << 124;
  EXPECT_EQ(sq.numerator(), expect);
  Rational tiny(1, 1LL << 62);
  EXPECT_EQ((tiny * tiny) * sq, Rational(1));
}

TEST(Rational, MatchesGmpOnRandomSamples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
  for (int t = 0; t < 2000; ++t) {
    long long a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
    Rational x(a, b), y(c, d);
    mpq_class mx(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
    mpq_class my(mpz_class(std::to_string(c)), mpz_class(std::to_string(d)));
    mx.canonicalize();
    my.canonicalize();
    EXPECT_EQ((x + y).to_mpq(), mpq_class(mx + my));
    EXPECT_EQ((x * y).to_mpq(), mpq_class(mx * my));
    EXPECT_EQ((x - y).to_mpq(), mpq_class(mx - my));
    if (!y.is_zero()) EXPECT_EQ((x / y).to_mpq(), mpq_class(mx / my));
    EXPECT_EQ(x < y, mx < my);
  }
}

TEST(Eisenstein, SqrtMinusThree) {
  Eisenstein s = Eisenstein::sqrt_minus3();
  EXPECT_EQ(s * s, Eisenstein(-3));
  Eisenstein z = Eisenstein::zeta();
  EXPECT_EQ(z * z + z + Eisenstein(1), Eisenstein(0));
  EXPECT_EQ(z * z * z, Eisenstein(1));
  EXPECT_EQ(Eisenstein::zeta_pow(-1), z * z);
}

TEST(Eisenstein, ConjugateAndNorm) {
  Eisenstein x(Rational(2), Rational(3));
  EXPECT_EQ(x.conj(), Eisenstein(Rational(-1), Rational(-3)));
  EXPECT_EQ(x * x.conj(), Eisenstein(x.norm()));
  EXPECT_EQ(Eisenstein::zeta().conj(), Eisenstein::zeta_pow(2));
  EXPECT_EQ(Eisenstein().norm(), Rational(0));
}

TEST(Eisenstein, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Eisenstein a = random_eisenstein(rng), b = random_eisenstein(rng), c = random_eisenstein(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Eisenstein(1));
      EXPECT_GT(a.norm(), Rational(0));
    }
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
  }
}

TEST(Matrix, RrefTrivialCases) {
  auto id = griess::num::rref(RatMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));
  auto z = griess::num::rref(RatMatrix(2, 4));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Matrix, G9GramHasFullRank) { EXPECT_EQ(griess::num::rank(g9_gram()), 9u); }

TEST(Matrix, RankNullityAndIdempotence) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + t % 6, c = 1 + (t * 7) % 7;
    RatMatrix m = random_matrix(rng, r, c);
    if (t % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2, 3);
    auto rr = griess::num::rref(m);
    auto ker = griess::num::kernel(m);
    EXPECT_EQ(rr.rank + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(griess::num::Vec<Rational>(m * v) == griess::num::Vec<Rational>(r));
    EXPECT_EQ(griess::num::rref(rr.reduced).reduced, rr.reduced);
    EXPECT_EQ(griess::num::rref_fraction_free(m).reduced, rr.reduced);
    EXPECT_EQ(griess::num::rref_fraction_free(m).pivots, rr.pivots);
  }
}

TEST(Matrix, EigenspaceVectorsAreEigenvectors) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 4;
    // Conjugate a diagonal matrix with a repeated rational eigenvalue.
    RatMatrix p = random_matrix(rng, n, n);
    while (griess::num::determinant(p).is_zero()) p = random_matrix(rng, n, n);
    RatMatrix d(n, n);
    Rational lambda = random_rational(rng);
    d(0, 0) = lambda;
    d(1, 1) = lambda;
    d(2, 2) = lambda + Rational(1);
    d(3, 3) = lambda - Rational(1, 2);
    RatMatrix m = p * d * *griess::num::inverse(p);
    auto basis = griess::num::eigenspace(m, lambda);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis) {
      auto mv = m * v;
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(mv[i], lambda * v[i]);
    }
    EXPECT_EQ(griess::num::rank(RatMatrix::from_rows(basis)), 2u);
    EXPECT_TRUE(griess::num::eigenspace(m, lambda + Rational(7)).empty());
  }
  EXPECT_EQ(griess::num::eigenspace(Rational(2) * RatMatrix::identity(3), Rational(2)).size(), 3u);
}

TEST(Matrix, SolveLinear) {
  griess::num::Vec<Rational> b{Rational(1), Rational(-2), Rational(3, 4)};
  EXPECT_EQ(*griess::num::solve_linear(RatMatrix::identity(3), b), b);
  EXPECT_FALSE(griess::num::solve_linear(RatMatrix(3, 3), b).has_value());
}

TEST(Matrix, DeterminantAndInverse) {
  // Spectrum of aI + bJ is a+9b (once) and a (8 times).
  Rational a = Rational(1, 4) - Rational(1, 256), b(1, 256);
  EXPECT_EQ(griess::num::determinant(g9_gram()), (a + Rational(9) * b) * a.pow(8));
  EXPECT_EQ(griess::num::determinant(g9_gram()), Rational(9, 32) * Rational(63, 256).pow(8));
  RatMatrix inv = *griess::num::inverse(g9_gram());
  EXPECT_EQ(inv * g9_gram(), RatMatrix::identity(9));
  for (const auto& m : griess::num::leading_principal_minors(g9_gram())) EXPECT_GT(m, Rational(0));
}

TEST(Matrix, EisensteinElimination) {
  using griess::num::EisMatrix;
  EisMatrix m(2, 2);
  m(0, 0) = Eisenstein(1);
  m(0, 1) = Eisenstein::zeta();
  m(1, 0) = Eisenstein::zeta_pow(2);
  m(1, 1) = Eisenstein(1);
  // rows are proportional: zeta^2 * (1, zeta) = (zeta^2, 1)
  EXPECT_EQ(griess::num::rank(m), 1u);
  EXPECT_EQ(griess::num::determinant(m), Eisenstein(0));
}

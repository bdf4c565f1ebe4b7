#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "posbraid/posbraid.hpp"

using namespace posbraid;

namespace {

BraidWord power(int k) { return BraidWord(2, std::vector<int>(static_cast<std::size_t>(k), 1)); }

}  // namespace

TEST(Seifert, Trefoil) {
  const auto v = seifert_matrix(power(3));
  ASSERT_EQ(v.dim(), 2u);
  EXPECT_EQ(v(0, 0), 1);
  EXPECT_EQ(v(0, 1), -1);
  EXPECT_EQ(v(1, 0), 0);
  EXPECT_EQ(v.symmetrized(), SymmetricMatrix::from_integers({{2, -1}, {-1, 2}}));
  const auto o = oracle_signature_nullity(power(3));
  EXPECT_EQ(o.sigma, 2);
  EXPECT_EQ(o.nullity, 0);
}

TEST(Seifert, TorusTwoK) {
  for (int k = 2; k <= 12; ++k) {
    EXPECT_EQ(oracle_signature_nullity(power(k)).sigma, k - 1);
    EXPECT_EQ(seifert_matrix(power(k)).dim(), static_cast<std::size_t>(k - 1));
  }
}

TEST(Seifert, ExampleFamily) {
  for (int n = 2; n <= 6; ++n) {
    const auto o = oracle_signature_nullity(oracle::example_word(n));
    EXPECT_EQ(o.sigma, 2 * n + 1) << n;
    EXPECT_EQ(o.nullity, n - 1) << n;
  }
}

TEST(Seifert, DimensionIsBetti) {
  for (const auto& b : random_corpus({.count = 100, .seed = 31})) {
    EXPECT_EQ(static_cast<int>(seifert_matrix(b).dim()), betti(b));
  }
  EXPECT_THROW(seifert_matrix(BraidWord(3, {1, 1})), InputError);
}

TEST(Seifert, TorusFormula) {
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= 7; ++q) {
      EXPECT_EQ(oracle_signature_nullity(oracle::torus_word(p, q)).sigma, oracle::torus_signature(p, q)) << p << "," << q;
    }
  }
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander(power(3)), IntPolynomial({1, -1, 1}));
  EXPECT_EQ(alexander(power(2)).degree(), 1);
  EXPECT_EQ(alexander(power(5)), IntPolynomial({1, -1, 1, -1, 1}));
  EXPECT_THROW(alexander(BraidWord(3, {2})), InputError);
}

TEST(Alexander, MatchesBurau) {
  auto corpus = random_corpus({.count = 150, .max_length = 24, .max_strands = 6, .seed = 32});
  for (int n = 2; n <= 4; ++n) corpus.push_back(oracle::example_word(n));
  for (const auto& b : corpus) {
    const auto delta = alexander(b);
    EXPECT_TRUE(oracle::matches_burau(b, delta)) << b.to_string() << " " << delta.to_string();
    EXPECT_EQ(delta.degree(), betti(b)) << b.to_string();
    EXPECT_TRUE(delta.is_reciprocal_up_to_sign()) << b.to_string();
  }
}

TEST(UnitCircle, Examples) {
  auto z = unit_circle_zeros(IntPolynomial({1, -1, 1}));
  EXPECT_EQ(z.on_circle, 2);
  EXPECT_EQ(z.total, 2);
  z = unit_circle_zeros(IntPolynomial({5}));
  EXPECT_EQ(z.on_circle, 0);
  EXPECT_EQ(z.total, 0);
  // (t - 2)(t - 1/2) has no zero on the circle
  z = unit_circle_zeros(IntPolynomial({2, -5, 2}));
  EXPECT_EQ(z.on_circle, 0);
  EXPECT_EQ(z.total, 2);
  // (t - 1)^3 (t^2 + 1): multiplicities count
  z = unit_circle_zeros(IntPolynomial({-1, 3, -4, 4, -3, 1}));
  EXPECT_EQ(z.on_circle, 5);
  EXPECT_THROW(unit_circle_zeros(IntPolynomial(std::vector<Integer>{})), InputError);
}

TEST(UnitCircle, RootsSolveThePolynomial) {
  for (const auto& b : random_corpus({.count = 60, .seed = 33})) {
    const auto delta = alexander(b);
    const auto z = unit_circle_zeros(delta);
    ASSERT_EQ(static_cast<int>(z.roots.size()), delta.degree());
    for (const auto& r : z.roots) {
      std::complex<double> v = 0, pw = 1;
      double scale = 0;
      for (const auto& c : delta.coefficients()) {
        v += c.get_d() * pw;
        scale += std::abs(c.get_d()) * std::abs(pw);
        pw *= r;
      }
      EXPECT_LT(std::abs(v), 1e-8 * scale) << b.to_string();
    }
  }
}

TEST(UnitCircle, SignatureBoundsCount) {
  for (const auto& b : random_corpus({.count = 200, .seed = 34})) {
    const auto z = unit_circle_zeros(alexander(b));
    const long sigma = oracle_signature_nullity(b).sigma;
    EXPECT_GE(z.on_circle, sigma) << b.to_string();
    EXPECT_GT(4 * z.on_circle, z.total) << b.to_string();
  }
}

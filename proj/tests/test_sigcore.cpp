#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posbraid/posbraid.hpp"
#include "posbraid/report.hpp"

using namespace posbraid;

namespace {

long sig(const SymmetricMatrix& m) { return signature(m).signature(); }

SymmetricMatrix ints(std::vector<std::vector<long>> rows) { return SymmetricMatrix::from_integers(rows); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(parse_rational("-3/6")), "-1/2");
  EXPECT_EQ(half(-3), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(Matrix, Construction) {
  EXPECT_THROW(ints({{1, 2}, {3, 4}}), InputError);
  EXPECT_THROW(ints({{1, 2}}), InputError);
  auto m = ints({{1, 2}, {2, 5}});
  EXPECT_EQ(m(1, 0), 2);
  m.set(0, 1, 7);
  EXPECT_EQ(m(1, 0), 7);
  const std::vector<std::size_t> keep = {1};
  EXPECT_EQ(m.principal(keep), ints({{5}}));
}

TEST(Signature, Examples) {
  EXPECT_EQ(sig(tridiagonal({2, 2})), 2);
  const auto h = signature(ints({{0, 1}, {1, 0}}));
  EXPECT_EQ(h.signature(), 0);
  EXPECT_EQ(h.nullity, 0u);
  EXPECT_EQ(sig(tridiagonal({-1, -2, -2})), -3);
  EXPECT_EQ(sig(tridiagonal({0, 7, -1})), -1);
  const auto z = signature(ints({{1, 1}, {1, 1}}));
  EXPECT_EQ(z.signature(), 1);
  EXPECT_EQ(z.nullity, 1u);
  EXPECT_EQ(signature(SymmetricMatrix(0)).dim(), 0u);
}

TEST(Signature, MatchesCharacteristicPolynomial) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = random_symmetric(rng, 6);
    const auto s = signature(m);
    const auto o = oracle::inertia_from_char_poly(m);
    EXPECT_EQ(static_cast<long>(s.positives), o.positives) << trial;
    EXPECT_EQ(static_cast<long>(s.negatives), o.negatives) << trial;
    EXPECT_EQ(static_cast<long>(s.nullity), o.zeros) << trial;
  }
}

TEST(Signature, CongruenceInvariance) {
  const auto s = fuzz_congruence(300, 8, 9);
  EXPECT_EQ(s.cases, 300u);
  EXPECT_EQ(s.failures, 0u) << s.counterexample.value_or("");
}

TEST(Tridiagonal, Examples) {
  EXPECT_EQ(tridiagonal({}).dim(), 0u);
  const auto t = tridiagonal({2, 2, 2});
  EXPECT_EQ(t(0, 1), 1);
  EXPECT_EQ(t(1, 2), 1);
  EXPECT_EQ(t(0, 2), 0);
  EXPECT_EQ(sig(t), 3);
  EXPECT_EQ(sig(tridiagonal({2, 1, 2})), 2);
}

TEST(Tridiagonal, PowersOfTwo) {
  for (int a = 0; a <= 12; ++a) {
    std::vector<long> plus(static_cast<std::size_t>(a), 2), minus(static_cast<std::size_t>(a), -2);
    EXPECT_EQ(sig(tridiagonal(plus)), a);
    EXPECT_EQ(sig(tridiagonal(minus)), -a);
  }
}

TEST(Porism, ClosedForm) {
  EXPECT_EQ(porism_signature(0, 0), 1);
  EXPECT_EQ(porism_signature(1, 1), 2);
  EXPECT_EQ(porism_signature(2, 1), 2);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const long exact = sig(tridiagonal(block_diagonal(a, b)));
      EXPECT_EQ(porism_signature(a, b), exact) << a << "," << b;
      EXPECT_GE(2 * exact, a + b + 1);
    }
  }
}

TEST(Trisum, Realize) {
  EXPECT_EQ(realize_trisum({{-1}, {}}), ints({{-1}}));
  const TrisumSpec one{{0}, {{0, 0, 0}}};
  EXPECT_EQ(realize_trisum(one), ints({{0, 1}, {1, 1}}));
  EXPECT_EQ(sig(realize_trisum(one)), 0);
  const TrisumSpec five{{-2, -2}, {{1, 1, 0}}};
  const auto m = realize_trisum(five);
  EXPECT_EQ(m, ints({{-2, 1, 0, 1, 0}, {1, -2, 0, 0, 0}, {0, 0, 2, 1, 0}, {1, 0, 1, 1, 1}, {0, 0, 0, 1, 2}}));
  EXPECT_THROW(realize_trisum({{1}, {{0, 0, 0}}}), InputError);
  EXPECT_THROW(realize_trisum({{0}, {{0, 0, 1}}}), InputError);
}

TEST(Prop32, Examples) {
  auto c = check_prop32(std::vector<long>{-1, -2, -2});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.slack, 0);
  c = check_prop32(std::vector<long>{0, 7, 0, 7, -1});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.signature, -1);
  EXPECT_EQ(c.bound, -1);
  c = check_prop32(std::vector<long>{5, 5, 5});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.bound, Rational(-1, 2));
  EXPECT_GE(c.signature, 0);
  for (int k = 1; k <= 8; ++k) {
    std::vector<long> d(static_cast<std::size_t>(k), -2);
    d[0] = -1;
    EXPECT_EQ(check_prop32(d).slack, 0) << k;
  }
}

TEST(Prop32, Exhaustive) {
  const auto s = fuzz_tridiagonal_exhaustive(6);
  EXPECT_EQ(s.cases, 5u + 25u + 125u + 625u + 3125u + 15625u);
  EXPECT_EQ(s.failures, 0u) << s.counterexample.value_or("");
}

TEST(Prop34, Examples) {
  const TrisumSpec plain{{-1, -2}, {}};
  const auto c = check_prop34(plain);
  const auto d = check_prop32(plain.core);
  EXPECT_EQ(c.signature, d.signature);
  EXPECT_EQ(c.bound, d.bound);
  EXPECT_TRUE(check_prop34({{-1}, {{1, 1, 0}}}).holds);
}

TEST(Prop34, RandomSpecs) {
  const auto s = fuzz_trisum_random(10000, 1);
  EXPECT_EQ(s.failures, 0u) << s.counterexample.value_or("");
}

TEST(Remark33, WitnessesOfMinusOne) {
  EXPECT_EQ(sig(tridiagonal({0, 7, -1})), -1);
  EXPECT_EQ(sig(tridiagonal({0, 7, 0, 7, -1})), -1);
  EXPECT_EQ(sig(tridiagonal({0, 3, 0, 5, 0, 9, -1})), -1);
}

TEST(Remark33, UpperBound) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<long> d(static_cast<std::size_t>(1 + trial % 7));
    for (auto& x : d) x = e(rng);
    const long s = sig(tridiagonal(d));
    EXPECT_LE(Rational(s), half(1) + Rational(upper_trace(d)));
    std::vector<long> neg(d);
    for (auto& x : neg) x = -x;
    EXPECT_EQ(sig(tridiagonal(neg)), -s);
  }
}

TEST(DirectSum, Additivity) {
  const std::vector<SymmetricMatrix> a = {ints({{1}}), ints({{-1}})};
  EXPECT_EQ(sig(direct_sum(a)), 0);
  const std::vector<SymmetricMatrix> b = {tridiagonal({2, 2}), tridiagonal({-1})};
  EXPECT_EQ(sig(direct_sum(b)), 1);
  EXPECT_EQ(direct_sum(std::span<const SymmetricMatrix>{}).dim(), 0u);
}

TEST(MatrixJson, RoundTrip) {
  auto m = ints({{1, 2}, {2, -3}});
  m.set(0, 0, Rational(1, 3));
  const auto j = matrix_to_json(m);
  EXPECT_EQ(j["entries"][0], "1/3");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(matrix_from_json(json{{"dim", 2}, {"entries", {1, 2, 3}}}), InputError);
  EXPECT_THROW(matrix_from_json(json{{"dim", 2}, {"entries", {1, 2, 3, 4}}}), InputError);
}

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "posbraid/posbraid.hpp"

using namespace posbraid;

namespace {

BraidWord w(const char* text) { return parse_braid_word(text); }

}  // namespace

TEST(Parse, FigureOneWord) {
  const auto b = w("1 4 4 2 1 3 2 4 1 3 3 2 4 1 3");
  EXPECT_EQ(b.strands(), 5);
  EXPECT_EQ(b.crossings(), 15);
  EXPECT_EQ(b.count(1), 4);
  EXPECT_EQ(b.count(3), 4);
}

TEST(Parse, PowersAndStrandPrefix) {
  EXPECT_EQ(w("1^3 2"), BraidWord(3, {1, 1, 1, 2}));
  EXPECT_EQ(w("4: 1 2"), BraidWord(4, {1, 2}));
  EXPECT_EQ(w("3:"), BraidWord(3, {}));
  EXPECT_EQ(parse_braid_word("2 2", 4).strands(), 4);
}

TEST(Parse, Rejects) {
  EXPECT_THROW(w(""), InputError);
  EXPECT_THROW(w("0 1"), InputError);
  EXPECT_THROW(w("1 -2"), InputError);
  EXPECT_THROW(w("1 x"), InputError);
  EXPECT_THROW(w("2: 1 2"), InputError);
  EXPECT_THROW(w("1^0"), InputError);
  EXPECT_THROW(BraidWord(0, {}), InputError);
}

TEST(Parse, File) {
  std::istringstream in("# corpus\n1 1 1\n\n1 2 1 2  # trailing\n");
  const auto words = parse_braid_file(in);
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[1], BraidWord(3, {1, 2, 1, 2}));
  std::istringstream bad("1 1\n1 0\n");
  EXPECT_THROW(parse_braid_file(bad), InputError);
}

TEST(Braid, Components) {
  EXPECT_EQ(w("1 1 1").components(), 1);
  EXPECT_EQ(w("1 1").components(), 2);
  EXPECT_EQ(oracle::example_word(2).components(), 3);
  EXPECT_EQ(oracle::torus_word(3, 4).components(), 1);
  EXPECT_EQ(oracle::torus_word(3, 6).components(), 3);
}

TEST(Classify, Examples) {
  auto c = classify(w("1 1 1"));
  EXPECT_EQ(c.kind, LinkKind::torus2k);
  EXPECT_EQ(c.torus_k, 3);
  c = classify(BraidWord(3, {2, 2, 2}));
  EXPECT_EQ(c.kind, LinkKind::split);
  EXPECT_EQ(c.pivot_generator, 1);
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(c.parts[1], BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(classify(w("1 1 2 1 1")).kind, LinkKind::connected_sum);
  EXPECT_EQ(classify(BraidWord(1, {})).kind, LinkKind::unknot);
  EXPECT_EQ(classify(oracle::example_word(3)).kind, LinkKind::generic);
}

TEST(Classify, SplitAdditivity) {
  // sigma and b1 of a split or once-used-generator word are sums over the parts
  const auto corpus = exhaustive_corpus({7, 4}, {.nonsplit = false});
  std::size_t checked = 0;
  for (const auto& b : corpus) {
    const auto c = classify(b);
    if (c.kind != LinkKind::split && c.kind != LinkKind::connected_sum) continue;
    long sigma = 0, b1 = 0;
    for (const auto& part : c.parts) {
      b1 += split_betti(part);
      if (part.strands() > 1 && part.is_nonsplit()) sigma += oracle_signature_nullity(part).sigma;
      else if (part.strands() > 1) sigma += check_final(part, {.alexander = false}).sigma;
    }
    EXPECT_EQ(b1, split_betti(b)) << b.to_string();
    const auto whole = check_final(b, {.alexander = false});
    ASSERT_TRUE(whole.sigma_known) << b.to_string();
    EXPECT_EQ(whole.sigma, sigma) << b.to_string();
    if (b.is_nonsplit()) { EXPECT_EQ(oracle_signature_nullity(b).sigma, sigma) << b.to_string(); }
    ++checked;
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Betti, Values) {
  EXPECT_EQ(betti(w("1 1 1")), 2);
  EXPECT_EQ(betti(oracle::example_word(2)), 6);
  EXPECT_THROW(betti(BraidWord(3, {2, 2})), InputError);
  EXPECT_EQ(split_betti(BraidWord(3, {2, 2})), 1);
}

TEST(Reduce, BraidRelation) {
  const auto t = reduce(BraidWord(3, {2, 1, 2}));
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps[0].kind, MoveKind::braid_relation);
  EXPECT_EQ(apply_move(t.input, t.steps[0]), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(t.input.index_sum(), 5);
  // the relation exposes a single s2, which then destabilizes
  EXPECT_EQ(t.result, BraidWord(2, {1, 1}));
}

TEST(Reduce, ExampleIsFixed) {
  for (int n = 2; n <= 6; ++n) {
    const auto t = reduce(oracle::example_word(n));
    EXPECT_TRUE(t.steps.empty()) << n;
    EXPECT_EQ(t.result, oracle::example_word(n));
  }
}

TEST(Reduce, Destabilize) {
  const auto t = reduce(BraidWord(3, {1, 1, 2}));
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps.back().kind, MoveKind::destabilize);
  EXPECT_EQ(t.result, BraidWord(2, {1, 1}));
}

TEST(Reduce, BudgetAndMoves) {
  const auto b = w("2 1 2 2 1 2");
  const auto t = reduce(b, 1);
  EXPECT_TRUE(t.budget_exhausted);
  EXPECT_EQ(t.steps.size(), 1u);
  EXPECT_THROW(apply_move(w("1 2"), {MoveKind::distant_swap, 0}), InputError);
  EXPECT_THROW(apply_move(w("1 2 1"), {MoveKind::braid_relation, 0}), InputError);
  EXPECT_THROW(apply_move(w("1 2 2"), {MoveKind::destabilize, 2}), InputError);
}

TEST(Reduce, TraceReplaysAndPreservesInvariants) {
  auto corpus = random_corpus({.count = 300, .max_length = 24, .max_strands = 6, .seed = 7});
  for (const auto& b : exhaustive_corpus({7, 4})) corpus.push_back(b);
  for (const auto& b : corpus) {
    const auto t = reduce(b);
    BraidWord replay = b;
    for (const auto& m : t.steps) {
      const auto next = apply_move(replay, m);
      EXPECT_LE(next.strands(), replay.strands());
      if (m.kind == MoveKind::braid_relation) { EXPECT_EQ(next.index_sum(), replay.index_sum() - 1); }
      replay = next;
    }
    EXPECT_EQ(replay, t.result);
    EXPECT_FALSE(t.budget_exhausted) << b.to_string();
    EXPECT_EQ(split_betti(t.result), split_betti(b));
    EXPECT_EQ(t.result.components(), b.components());
    EXPECT_EQ(oracle_signature_nullity(t.result).sigma, oracle_signature_nullity(b).sigma) << b.to_string();
    EXPECT_EQ(oracle_signature_nullity(t.result).nullity, oracle_signature_nullity(b).nullity) << b.to_string();
    // fixpoint: nothing left to do
    if (t.result.generators() >= 1) { EXPECT_NE(t.result.count(t.result.generators()), 1); }
    EXPECT_FALSE(detail::find_relation_site(t.result).has_value());
  }
}

TEST(Corpus, ExhaustiveOrderAndSize) {
  const auto all = exhaustive_corpus({3, 3}, {.nonsplit = false});
  // 1 strand: empty word; 2 strands: lengths 0..3; 3 strands: 1+2+4+8
  EXPECT_EQ(all.size(), 1u + 4u + 15u);
  EXPECT_EQ(all[5], BraidWord(3, {}));
  EXPECT_EQ(all[6], BraidWord(3, {1}));
  EXPECT_EQ(all[8], BraidWord(3, {1, 1}));
  EXPECT_EQ(all[9], BraidWord(3, {1, 2}));
  for (const auto& b : exhaustive_corpus({6, 4})) EXPECT_TRUE(b.is_nonsplit());
}

TEST(Corpus, RandomIsSeeded) {
  const RandomSpec spec{.count = 50, .seed = 3};
  const auto a = random_corpus(spec);
  const auto b = random_corpus(spec);
  EXPECT_EQ(a, b);
  auto other = spec;
  other.seed = 4;
  EXPECT_NE(a, random_corpus(other));
  for (const auto& x : a) {
    EXPECT_TRUE(x.is_nonsplit());
    EXPECT_LE(x.strands(), 8);
    EXPECT_LE(x.crossings(), 40);
  }
  for (const auto& x : random_corpus({.count = 30, .seed = 5}, {.generic = true, .reduced_only = true})) {
    EXPECT_EQ(classify(x).kind, LinkKind::generic);
    EXPECT_TRUE(reduce(x).steps.empty());
  }
}

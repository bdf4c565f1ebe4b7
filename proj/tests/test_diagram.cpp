#include <gtest/gtest.h>

#include "oracles.hpp"
#include "posbraid/posbraid.hpp"

using namespace posbraid;

namespace {

StandardDiagram dia(const char* text) { return build_diagram(parse_braid_word(text)); }

std::vector<BraidWord> small_corpus() {
  auto c = exhaustive_corpus({8, 4});
  auto r = random_corpus({.count = 300, .seed = 11});
  c.insert(c.end(), r.begin(), r.end());
  return c;
}

}  // namespace

TEST(Diagram, Columns) {
  const auto t = dia("1 1 1");
  EXPECT_EQ(t.generators(), 1);
  EXPECT_EQ(t.column(1).size(), 3u);

  const auto fig = dia("1 4 4 2 1 3 2 4 1 3 3 2 4 1 3");
  std::vector<std::size_t> sizes;
  for (int i = 1; i <= 4; ++i) sizes.push_back(fig.column(i).size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{4, 3, 4, 4}));

  const auto ex = build_diagram(oracle::example_word(2));
  EXPECT_EQ(ex.column(1).size(), 4u);
  EXPECT_EQ(ex.column(2).size(), 4u);
  EXPECT_THROW(build_diagram(BraidWord(3, {2, 2})), InputError);
}

TEST(Diagram, TrefoilFaces) {
  const auto d = dia("1 1 1");
  ASSERT_EQ(d.face_count(), 5u);
  for (int p = 0; p < 3; ++p) {
    EXPECT_EQ(d.face(p).sides, 2);
    EXPECT_EQ(d.face(p).color, Color::black);
    EXPECT_EQ(d.face(p).end, (p + 1) % 3);
  }
  EXPECT_EQ(d.face(d.axis_face()).sides, 3);
  EXPECT_EQ(d.face(d.unbounded_face()).sides, 3);
  EXPECT_EQ(d.face(d.axis_face()).color, Color::white);
  EXPECT_EQ(d.face(d.unbounded_face()).color, Color::white);
  const auto& r = d.regions_at(1);
  EXPECT_EQ(r.above, 1);
  EXPECT_EQ(r.below, 0);
  EXPECT_EQ(r.left, d.axis_face());
  EXPECT_EQ(r.right, d.unbounded_face());
}

TEST(Diagram, SidesCountNeighbourLetters) {
  // column 2 of s2 s1 s2 s2 s1 s2: spans 0->2 (one s1), 2->3, 3->5 (one s1), 5->0
  const auto d = dia("2 1 2 2 1 2");
  EXPECT_EQ(d.face(0).sides, 3);
  EXPECT_EQ(d.face(2).sides, 2);
  EXPECT_EQ(d.face(3).sides, 3);
  EXPECT_EQ(d.face(5).sides, 2);
  EXPECT_EQ(d.face(0).color, Color::white);
  EXPECT_EQ(d.face(d.unbounded_face()).color, Color::black);
}

TEST(Census, Trefoil) {
  const auto c = face_census(dia("1 1 1"));
  EXPECT_EQ(c.f(2), 3);
  EXPECT_EQ(c.s, 3);
  EXPECT_EQ(c.s_prime, 3);
  EXPECT_EQ(4 * c.cr, 2 * c.f(2) + c.s + c.s_prime);
}

TEST(Census, ExampleFamily) {
  for (int n = 2; n <= 6; ++n) {
    const auto c = face_census(build_diagram(oracle::example_word(n)));
    EXPECT_EQ(c.f(2), 4) << n;
    EXPECT_EQ(c.f(4), c.cr - 4) << n;
    for (const auto& [sides, count] : c.by_sides) {
      if (sides != 2 && sides != 4) { EXPECT_EQ(count, 0) << n << " sides " << sides; }
    }
  }
}

TEST(Chessboard, Examples) {
  const auto t = chessboard(dia("1 1 1"));
  EXPECT_EQ(t.h1_black, 1);
  EXPECT_EQ(t.h1_white, 2);
  const auto e = chessboard(build_diagram(oracle::example_word(2)));
  EXPECT_EQ(e.h1_black + e.h1_white, 8);
}

TEST(Lemma41, Examples) {
  EXPECT_TRUE(lemma41_holds(build_diagram(oracle::example_word(2))));
  EXPECT_TRUE(lemma41_holds(dia("1 1 1")));
  EXPECT_FALSE(lemma41_holds(dia("2 1 2 2 1 2")));
}

TEST(Identities, HoldOnCorpus) {
  for (const auto& b : small_corpus()) {
    if (b.strands() < 2) continue;
    const auto d = build_diagram(b);
    FaceCensus c;
    ASSERT_NO_THROW(c = face_census(d)) << b.to_string();
    long faces = 0, weighted = 0;
    for (const auto& [sides, count] : c.by_sides) {
      faces += count;
      weighted += static_cast<long>(sides) * count;
      EXPECT_GE(sides, 2);
    }
    EXPECT_EQ(faces, b.crossings());
    EXPECT_EQ(weighted + c.s + c.s_prime, 4L * b.crossings());
    EXPECT_EQ(c.constraint_residual(), 0);
    const auto cb = chessboard(d);
    EXPECT_TRUE(cb.black_connected && cb.white_connected) << b.to_string();
    EXPECT_EQ(cb.h1_black + cb.h1_white, b.crossings()) << b.to_string();
    EXPECT_EQ(cb.black_faces.size() + cb.white_faces.size(), static_cast<std::size_t>(b.crossings()) + 2);
  }
}

TEST(Lemma41, ReducedGenericWordsSatisfyIt) {
  for (const auto& b : random_corpus({.count = 300, .seed = 12}, {.generic = true})) {
    const auto r = reduce(b).result;
    if (classify(r).kind != LinkKind::generic) continue;
    EXPECT_TRUE(lemma41_holds(build_diagram(r))) << b.to_string() << " -> " << r.to_string();
  }
}

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gsc/boundary.hpp"
#include "oracles.hpp"

using namespace gsc;

namespace {

struct World {
  Presentation p;
  WordProblem wp;
  CayleyBall ball;
  World(LabeledGraph g, std::size_t R) : p(std::move(g), Rational(1, 10)), wp(p), ball(build_ball(wp, R, 1000000)) {}
  Index at(const std::string& w) const { return *ball.locate(p.alphabet().parse_word(w)); }
  Word word(const std::string& w) const { return p.alphabet().parse_word(w); }
};

std::size_t common_suffix(const Word& u, const Word& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[u.size() - 1 - k] == v[v.size() - 1 - k]) ++k;
  return k;
}

}  // namespace

TEST(LexLeast, Examples) {
  World f(fx::corpus("free2"), 4);
  EXPECT_EQ(lex_least_geodesic(f.ball, f.at("a b^-1 a")).word, f.word("a b^-1 a"));
  EXPECT_TRUE(lex_least_geodesic(f.ball, 0).word.empty());
  World t(fx::corpus("torsion_family"), 4);
  EXPECT_EQ(lex_least_geodesic(t.ball, t.at("b^-1 b^-1")).word, t.word("b b"));
}

TEST(LexLeast, EqualsMinimumOfAllGeodesics) {
  for (const auto& name : fx::corpus_names()) {
    World w(fx::corpus(name), 4);
    const auto& a = w.p.alphabet();
    for (Index v = 0; v < w.ball.size(); ++v) {
      auto gs = all_geodesics(w.ball, 0, v).words;
      auto least = *std::min_element(gs.begin(), gs.end(), [&](const Word& x, const Word& y) { return a.lex_less(x, y); });
      auto got = lex_least_geodesic(w.ball, v);
      EXPECT_EQ(got.word, least) << name;
      EXPECT_EQ(got.certificate.size(), got.word.size());
    }
  }
}

TEST(LexLeast, SubwordsAreGeodesic) {
  World t(fx::corpus("torsion_family"), 4);
  for (Index v = 0; v < t.ball.size(); ++v) {
    auto w = lex_least_geodesic(t.ball, v).word;
    auto pts = trace(t.ball, 0, w);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto d = t.ball.distances_from(pts[i]);
      for (std::size_t j = i; j < pts.size(); ++j) EXPECT_EQ(d[pts[j]], j - i);
    }
  }
}

TEST(LexLeast, SharedStretchesCoincide) {
  for (const auto& name : fx::corpus_names()) {
    World w(fx::corpus(name), 4);
    auto r = check_segment_coincidence(w.ball);
    EXPECT_TRUE(r.violations.empty()) << name;
    EXPECT_GT(r.segments, 0u) << name;
  }
}

TEST(TailEquivalent, Examples) {
  auto a = fx::abc();
  auto w = a.parse_word("a b c a b c");
  EXPECT_TRUE(tail_equivalent(w, w, {0, 6}));
  EXPECT_TRUE(tail_equivalent(w, w, {3, 1}));
  auto t = a.parse_word("c a c b b a");
  EXPECT_TRUE(tail_equivalent(concat(a.parse_word("a"), t), concat(a.parse_word("b b"), t), {2, 4}));
  EXPECT_FALSE(tail_equivalent(concat(a.parse_word("a"), t), concat(a.parse_word("b b"), t), {1, 4}));
  Alphabet ab4({"a", "b", "c", "d"});
  EXPECT_FALSE(tail_equivalent(ab4.parse_word("a b a b"), ab4.parse_word("c d c d"), {4, 1}));
}

TEST(TailEquivalent, ShortWordsRejected) {
  auto a = fx::ab();
  try {
    tail_equivalent(a.parse_word("a b"), a.parse_word("a b a b"), {0, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::window_too_large);
  }
}

TEST(TailEquivalent, ReflexiveAndSymmetric) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint32_t> pick(0, 3), len(3, 10), cut(0, 4), ov(1, 3);
  auto word = [&] {
    Word w;
    for (auto n = len(rng); n > 0; --n) w.push_back(Letter::from_code(pick(rng)));
    return w;
  };
  for (int t = 0; t < 3000; ++t) {
    auto u = word(), v = word();
    TailWindow win{cut(rng), ov(rng)};
    EXPECT_TRUE(tail_equivalent(u, u, win));
    EXPECT_EQ(tail_equivalent(u, v, win), tail_equivalent(v, u, win));
  }
}

TEST(ShiftBasepoint, SameBaseReturnsInput) {
  World t(fx::corpus("torsion_family"), 4);
  auto w = t.word("a b a");
  EXPECT_EQ(shift_basepoint(t.ball, 0, w, 0), w);
}

TEST(ShiftBasepoint, FreeGroupAdjacentBase) {
  World f(fx::corpus("free2"), 4);
  auto w = f.word("a b");
  for (auto s : f.p.alphabet().ordered_letters()) {
    auto y = f.ball.neighbor(0, s);
    auto out = shift_basepoint(f.ball, 0, w, y);
    auto target = free_reduce(concat(Word{s.inverse()}, w));
    EXPECT_EQ(out, target);
    EXPECT_GE(common_suffix(out, w) + 1, w.size());
  }
}

TEST(ShiftBasepoint, MaximizesSharedTailAgainstExhaustiveSearch) {
  World t(fx::corpus("torsion_family"), 4);
  std::size_t cases = 0;
  for (Index e = 0; e < t.ball.size(); ++e) {
    if (t.ball.layer(e) > 2) continue;
    auto w = lex_least_geodesic(t.ball, e).word;
    for (Index y = 0; y < t.ball.size(); ++y) {
      if (t.ball.layer(y) > 1) continue;
      auto dy = t.ball.distances_from(y);
      if (!t.ball.certified_pair(y, e, dy[e])) continue;
      auto out = shift_basepoint(t.ball, 0, w, y);
      auto all = all_geodesics(t.ball, y, e).words;
      ASSERT_NE(std::find(all.begin(), all.end(), out), all.end());
      std::size_t best = 0;
      for (const auto& g : all) best = std::max(best, common_suffix(g, w));
      EXPECT_EQ(common_suffix(out, w), best);
      ++cases;
    }
  }
  EXPECT_GT(cases, 50u);
}

TEST(Census, FreeGroupOneClass) {
  auto g = fx::corpus("free2");
  Presentation p(g, Rational(1, 10));
  WordProblem wp(p);
  CensusConfig cfg;
  cfg.depth = 8;
  cfg.translates = 2;
  auto c = tail_class_census(p, wp, cfg);
  EXPECT_EQ(c.classes_closure, 1u);
  EXPECT_EQ(c.K, 2u);
  EXPECT_TRUE(c.verdict());
}

TEST(Census, ClassicalWithinBound) {
  auto g = fx::corpus("classical");
  Presentation p(g, Rational(1, 10));
  WordProblem wp(p);
  auto c = tail_class_census(p, wp, CensusConfig{});
  EXPECT_EQ(c.K0, 1u);
  EXPECT_EQ(c.K, 5u);
  EXPECT_LE(c.classes_closure, 5u);
  EXPECT_LE(c.classes_closure, c.classes_raw);
  EXPECT_TRUE(c.verdict());
}

TEST(Census, SingleTranslate) {
  for (const auto& name : {"classical", "torsion_family"}) {
    auto g = fx::corpus(name);
    Presentation p(g, Rational(1, 10));
    WordProblem wp(p);
    CensusConfig cfg;
    cfg.depth = 6;
    cfg.translates = 0;
    auto c = tail_class_census(p, wp, cfg);
    EXPECT_EQ(c.members.size(), 1u);
    EXPECT_EQ(c.classes_raw, 1u);
  }
}

TEST(Census, TorsionFamilyThroughBall) {
  auto g = fx::corpus("torsion_family");
  Presentation p(g, Rational(1, 10));
  WordProblem wp(p);
  CensusConfig cfg;
  cfg.depth = 6;
  cfg.translates = 1;
  auto c = tail_class_census(p, wp, cfg);
  EXPECT_FALSE(c.tree_regime);
  EXPECT_EQ(c.target.size(), 6u);
  EXPECT_GE(c.classes_closure, 1u);
}

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gsc/coned_off.hpp"
#include "oracles.hpp"

using namespace gsc;

namespace {

struct World {
  Presentation p;
  WordProblem wp;
  CayleyBall ball;
  ConedBall cb;
  World(LabeledGraph g, std::size_t R)
      : p(std::move(g), Rational(1, 10)), wp(p), ball(build_ball(wp, R, 1000000)), cb(ball, p.graph()) {}
  Index at(const std::string& w) const { return *ball.locate(p.alphabet().parse_word(w)); }
  Word word(const std::string& w) const { return p.alphabet().parse_word(w); }
};

}  // namespace

TEST(Copies, FreeGroupHasNone) {
  World w(fx::corpus("free2"), 3);
  EXPECT_TRUE(w.cb.registry().copies.empty());
}

TEST(Copies, CopyThroughIdentityIsTheRelatorCycle) {
  World w(fx::corpus("torsion_family"), 3);
  std::vector<std::set<Index>> want{{w.at(""), w.at("a"), w.at("a^-1")},
                                    {w.at(""), w.at("b"), w.at("b b"), w.at("b^-1")}};
  for (const auto& img : want) {
    bool found = false;
    for (const auto& c : w.cb.registry().copies)
      found |= std::set<Index>(c.image.begin(), c.image.end()) == img;
    EXPECT_TRUE(found);
  }
}

TEST(Copies, EqualImagesKeptOnce) {
  World w(fx::corpus("torsion_family"), 3);
  const auto& reg = w.cb.registry();
  EXPECT_GT(reg.duplicates, 0u);  // f_{v0,1}, f_{v0,a}, f_{v0,a^-1} share one image
  std::set<std::set<Index>> seen;
  for (const auto& c : reg.copies) EXPECT_TRUE(seen.insert({c.image.begin(), c.image.end()}).second);
}

TEST(Copies, ClassicalCycleTruncatedInSmallBall) {
  World w(fx::corpus("classical"), 4);
  EXPECT_TRUE(w.cb.registry().copies.empty());
  EXPECT_GT(w.cb.registry().truncated, 0u);
}

TEST(ConedDistance, Examples) {
  World t(fx::corpus("torsion_family"), 4);
  EXPECT_EQ(t.cb.coned_distance(t.at("b"), t.at("b")), 0u);
  EXPECT_EQ(t.cb.coned_distance(t.at(""), t.at("b b")), 1u);
  EXPECT_EQ(t.cb.coned_distance(t.at("a"), t.at("a b b")), 1u);
  World f(fx::corpus("free2"), 3);
  EXPECT_EQ(f.cb.coned_distance(f.at(""), f.at("a")), 1u);
  EXPECT_EQ(f.cb.coned_distance(f.at(""), f.at("a b^-1")), 2u);
}

TEST(ConedDistance, UncertifiedCarriesBallValue) {
  World t(fx::corpus("torsion_family"), 4);
  try {
    t.cb.coned_distance(t.at("a b a b"), t.at("b^-1 a^-1 b^-1 a"));
    FAIL();
  } catch (const UncertifiedDistance& e) {
    EXPECT_GT(e.ball_value(), 0);
  }
}

TEST(ConedDistance, MatchesCliqueOracleAndIsAMetric) {
  for (const auto& name : fx::corpus_names()) {
    World w(fx::corpus(name), 4);
    auto want = oracle::coned_distances(w.ball, w.p.graph());
    std::size_t checked = 0;
    for (Index x = 0; x < w.ball.size(); ++x) {
      auto dy = w.cb.distances_from(x);
      for (Index y = 0; y < w.ball.size(); ++y) {
        EXPECT_EQ(dy[y], want[x][y]) << name;
        if (!w.cb.certified(x, y, dy[y])) continue;
        ++checked;
        EXPECT_EQ(w.cb.coned_distance(y, x), dy[y]);
      }
    }
    EXPECT_GT(checked, 0u) << name;
    auto c = w.cb.certified_core_radius();
    auto pts = w.cb.core_points(c);
    for (auto x : pts)
      for (auto y : pts)
        for (auto z : pts)
          EXPECT_LE(w.cb.coned_distance(x, z), w.cb.coned_distance(x, y) + w.cb.coned_distance(y, z));
  }
}

TEST(Decompose, Examples) {
  World f(fx::corpus("free2"), 3);
  auto d = decompose(f.cb, 0, f.word("a"));
  ASSERT_EQ(d.k(), 1u);
  EXPECT_TRUE(d.blocks[0].lone_edge);

  World t(fx::corpus("torsion_family"), 4);
  auto in_copy = decompose(t.cb, 0, t.word("b b"));
  ASSERT_EQ(in_copy.k(), 1u);
  EXPECT_FALSE(in_copy.blocks[0].lone_edge);
  EXPECT_TRUE(in_copy.blocks[0].copy.has_value());

  auto two = decompose(t.cb, 0, t.word("a b b"));
  EXPECT_EQ(two.k(), 2u);
  EXPECT_EQ(two.breakpoints, (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_EQ(oracle::coned_distances(t.ball, t.p.graph())[0][t.at("a b b")], 2u);
}

TEST(Decompose, RejectsNonGeodesic) {
  World t(fx::corpus("torsion_family"), 4);
  try {
    decompose(t.cb, 0, t.word("a a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
}

TEST(Decompose, BlockCountEqualsConedDistance) {
  for (const auto& name : fx::corpus_names()) {
    World w(fx::corpus(name), 4);
    for (Index x = 0; x < w.ball.size(); ++x) {
      auto dy = w.cb.distances_from(x);
      auto dx = w.ball.distances_from(x);
      for (Index y = 0; y < w.ball.size(); ++y) {
        if (!w.cb.certified(x, y, dy[y]) || !w.ball.certified_pair(x, y, dx[y])) continue;
        for (const auto& g : all_geodesics(w.ball, x, y).words) EXPECT_EQ(decompose(w.cb, x, g).k(), dy[y]);
      }
    }
  }
}

TEST(Gromov, Identities) {
  World t(fx::corpus("torsion_family"), 4);
  auto d = [&](Index x, Index y) { return t.ball.distances_from(x)[y]; };
  for (Index x = 0; x < 10; ++x)
    for (Index z = 0; z < 10; ++z) {
      EXPECT_EQ(gromov_product(d, x, x, z), Rational(d(x, z)));
      EXPECT_EQ(gromov_product(d, x, z, x), Rational(0));
      for (Index y = 0; y < 10; y += 3)
        EXPECT_EQ(gromov_product(d, x, y, z), Rational(std::int64_t(d(x, z)) + d(y, z) - d(x, y), 2));
    }
}

TEST(Delta, FreeGroupIsZero) {
  World f(fx::corpus("free2"), 4);
  auto r = estimate_delta(f.cb);
  EXPECT_EQ(r.delta, Rational(0));
  EXPECT_GT(r.points, 1u);
}

TEST(Delta, SinglePointIsZero) {
  EXPECT_EQ(estimate_delta(std::vector<std::vector<std::uint32_t>>{{0}}).delta, Rational(0));
}

TEST(Delta, SampledNeverExceedsExhaustive) {
  World t(fx::corpus("torsion_family"), 4);
  auto pts = t.cb.core_points(2);
  std::vector<std::vector<std::uint32_t>> dist;
  for (auto x : pts) {
    auto row = t.cb.distances_from(x);
    std::vector<std::uint32_t> r;
    for (auto y : pts) r.push_back(row[y]);
    dist.push_back(r);
  }
  auto full = estimate_delta(dist);
  auto some = estimate_delta(dist, 500, 42);
  EXPECT_FALSE(some.exhaustive);
  EXPECT_LE(some.delta, full.delta);
  EXPECT_EQ(estimate_delta(dist, 500, 42).delta, some.delta);
}

TEST(Chain, Examples) {
  World t(fx::corpus("torsion_family"), 4);
  auto one = check_chain_geodesic(t.cb, 0, t.word("b b"), {0, 2}, Rational(1, 10));
  EXPECT_TRUE(one.holds);
  EXPECT_EQ(one.d_y, 1u);
  auto two = check_chain_geodesic(t.cb, 0, t.word("a b b"), {0, 1, 3}, Rational(1, 10));
  EXPECT_TRUE(two.holds);
  EXPECT_EQ(two.d_y, 2u);
  // block "b" is shorter than 3 · (1/10) · 4
  EXPECT_THROW(check_chain_geodesic(t.cb, 0, t.word("a b"), {0, 1, 2}, Rational(1, 10)), Error);
  // consecutive blocks in the same copy
  EXPECT_THROW(check_chain_geodesic(t.cb, 0, t.word("b b"), {0, 1, 2}, Rational(1, 20)), Error);
}

TEST(Embedding, CopiesIsometricAndConvex) {
  for (const auto& name : fx::corpus_names()) {
    World w(fx::corpus(name), 4);
    std::size_t iso = 0, conv = 0;
    EXPECT_TRUE(check_copy_isometry(w.cb, &iso).empty()) << name;
    EXPECT_TRUE(check_convexity(w.cb, &conv).empty()) << name;
    if (name == "torsion_family") {
      EXPECT_GT(iso, 0u);
      EXPECT_GT(conv, 0u);
    }
  }
}

TEST(Bigons, FreeGroupVacuous) {
  World f(fx::corpus("free2"), 4);
  auto r = check_bigon_bound(f.cb, Rational(1, 10));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.checked, 0u);
}

TEST(Bigons, EvenRelatorAntipodes) {
  World t(fx::corpus("torsion_family"), 4);
  auto r = check_bigon_bound(t.cb, Rational(1, 10));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.checked, 0u);
}

TEST(Bigons, LambdaGuard) {
  World t(fx::corpus("torsion_family"), 2);
  EXPECT_THROW(check_bigon_bound(t.cb, Rational(1, 6)), Error);
}

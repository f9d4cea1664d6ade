#ifndef GSC_BOUNDARY_HPP
#define GSC_BOUNDARY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gsc/cayley.hpp"
#include "gsc/coned_off.hpp"
#include "gsc/error.hpp"
#include "gsc/small_cancellation.hpp"

namespace gsc {

struct LexStep {
  Letter chosen;
  std::vector<Letter> rejected;  // smaller letters that do not continue a geodesic
};

struct LexLeastGeodesic {
  Index source = 0;
  Index target = 0;
  Word word;
  std::vector<LexStep> certificate;
};

namespace detail {

// Greedy: at each vertex take the least letter that moves one step closer
// to the target. The caller vouches that all geodesics stay in the ball.
inline LexLeastGeodesic greedy_lex_least(const CayleyBall& b, Index from, Index to) {
  auto dist = b.distances_from(to);
  LexLeastGeodesic out{from, to, {}, {}};
  Index v = from;
  while (v != to) {
    LexStep step{};
    bool found = false;
    for (auto s : b.alphabet().ordered_letters()) {
      auto n = b.neighbor(v, s);
      if (n != kNone && dist[n] + 1 == dist[v]) {
        step.chosen = s;
        out.word.push_back(s);
        v = n;
        found = true;
        break;
      }
      step.rejected.push_back(s);
    }
    if (!found) fail(ErrorKind::invariant_violation, "no letter continues the geodesic");
    out.certificate.push_back(std::move(step));
  }
  return out;
}

}  // namespace detail

inline LexLeastGeodesic lex_least_geodesic(const CayleyBall& b, Index from, Index to) {
  auto d = b.distances_from(from)[to];
  if (!b.certified_pair(from, to, d))
    fail(ErrorKind::insufficient_radius, "geodesics to '" + b.alphabet().format(b.word(to)) +
                                             "' are not certified in the radius-" + std::to_string(b.radius()) +
                                             " ball");
  return detail::greedy_lex_least(b, from, to);
}

inline LexLeastGeodesic lex_least_geodesic(const CayleyBall& b, Index target) {
  return lex_least_geodesic(b, 0, target);
}

// ---------------------------------------------------------------------------
// Tail windows

struct TailWindow {
  std::size_t cut = 0;      // c: largest prefix that may be discarded
  std::size_t overlap = 1;  // m: shortest agreement that counts
};

// Cuts n, k ≤ min(c, len − m) such that u[n..] and v[k..] agree on all of the
// shorter remainder, which is at least m letters long.
inline bool tail_equivalent(const Word& u, const Word& v, TailWindow w) {
  if (w.overlap == 0) fail(ErrorKind::precondition, "window overlap must be at least 1");
  if (u.size() < w.overlap || v.size() < w.overlap)
    fail(ErrorKind::window_too_large, "words of length " + std::to_string(u.size()) + " and " +
                                          std::to_string(v.size()) + " are shorter than the overlap " +
                                          std::to_string(w.overlap));
  auto nu = std::min(w.cut, u.size() - w.overlap);
  auto nv = std::min(w.cut, v.size() - w.overlap);
  for (std::size_t n = 0; n <= nu; ++n)
    for (std::size_t k = 0; k <= nv; ++k) {
      auto len = std::min(u.size() - n, v.size() - k);
      if (std::equal(u.begin() + n, u.begin() + n + len, v.begin() + k)) return true;
    }
  return false;
}

// Geodesic from y to the endpoint of `word` (read from x) sharing the longest
// possible terminal segment with it.
inline Word shift_basepoint(const CayleyBall& b, Index x, const Word& word, Index y) {
  auto pts = trace(b, x, word);
  for (auto p : pts)
    if (p == kNone) fail(ErrorKind::insufficient_radius, "word leaves the ball");
  auto e = pts.back();
  auto dx = b.distances_from(x);
  if (!b.certified_pair(x, e, dx[e]) || dx[e] != word.size())
    fail(ErrorKind::precondition, "input is not a certified geodesic");
  auto dy = b.distances_from(y);
  if (!b.certified_pair(y, e, dy[e]))
    fail(ErrorKind::insufficient_radius, "geodesics from the new base are not certified");
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (dy[pts[j]] + (word.size() - j) != dy[e]) continue;
    // pts[j] lies on a geodesic y → e, so its geodesics from y are in the ball too.
    auto head = detail::greedy_lex_least(b, y, pts[j]).word;
    head.insert(head.end(), word.begin() + j, word.end());
    return head;
  }
  fail(ErrorKind::invariant_violation, "endpoint itself must qualify");
}

struct SegmentViolation {
  Index first = 0, second = 0;  // the two targets
  Index x = 0, y = 0;
};

struct SegmentReport {
  std::size_t targets = 0;
  std::size_t segments = 0;  // shared (x, y) stretches compared
  std::vector<SegmentViolation> violations;
};

// Lex-least geodesics from 1 to two certified targets that both pass through
// x and later y should read the same word between them: any geodesic x → y
// can be spliced into either, so each stretch is the lex-least x → y word.
inline SegmentReport check_segment_coincidence(const CayleyBall& b) {
  SegmentReport r;
  auto d0 = b.distances_from(0);
  std::vector<Index> targets;
  std::vector<std::vector<Index>> paths;
  std::vector<Word> words;
  for (Index t = 0; t < b.size(); ++t) {
    if (!b.certified_pair(0, t, d0[t])) continue;
    targets.push_back(t);
    words.push_back(lex_least_geodesic(b, t).word);
    paths.push_back(trace(b, 0, words.back()));
  }
  r.targets = targets.size();
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      // positions agree because both paths are geodesics from 1
      auto n = std::min(paths[i].size(), paths[j].size());
      std::vector<std::size_t> common;
      for (std::size_t k = 0; k < n; ++k)
        if (paths[i][k] == paths[j][k]) common.push_back(k);
      for (std::size_t a = 0; a < common.size(); ++a)
        for (std::size_t c = a + 1; c < common.size(); ++c) {
          ++r.segments;
          auto lo = common[a], hi = common[c];
          if (!std::equal(words[i].begin() + lo, words[i].begin() + hi, words[j].begin() + lo))
            r.violations.push_back({targets[i], targets[j], paths[i][lo], paths[i][hi]});
        }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Census

struct CensusConfig {
  std::size_t depth = 12;                  // D
  std::size_t translates = 2;              // r
  std::optional<std::size_t> cut;          // default 2r + D_max
  std::size_t overlap = 4;                 // m
  std::optional<Word> target;              // default: lex-least geodesic of length D
  std::size_t ball_cap = 2000000;
};

struct CensusMember {
  Word translate;  // g
  Word word;       // lex-least geodesic from 1 to g·t
  std::size_t raw_class = 0;
  std::size_t closure_class = 0;
};

struct SweepPoint {
  std::size_t cut = 0;
  std::size_t overlap = 0;
  std::size_t classes_raw = 0;
  std::size_t classes_closure = 0;
};

struct TailCensus {
  Word target;
  std::size_t K0 = 0;
  std::uint64_t K = 0;
  TailWindow window;
  std::size_t classes_raw = 0;
  std::size_t classes_closure = 0;
  std::size_t skipped = 0;
  bool tree_regime = false;
  std::vector<CensusMember> members;
  std::vector<SweepPoint> sweep;
  bool verdict() const { return classes_closure <= K; }
};

namespace detail {

// Leader partition (first leader it matches) and transitive closure.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> partition_tails(
    const std::vector<Word>& words, TailWindow w) {
  auto n = words.size();
  std::vector<std::size_t> raw(n), leaders;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < leaders.size() && !placed; ++c)
      if (tail_equivalent(words[leaders[c]], words[i], w)) {
        raw[i] = c;
        placed = true;
      }
    if (!placed) {
      raw[i] = leaders.size();
      leaders.push_back(i);
    }
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (find(i) != find(j) && tail_equivalent(words[i], words[j], w)) parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
  std::vector<std::size_t> closure(n), label(n, kNone);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (label[r] == kNone) label[r] = next++;
    closure[i] = label[r];
  }
  return {raw, closure};
}

inline std::size_t count_classes(const std::vector<std::size_t>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end()) + 1;
}

// Words of length `len` in shortlex order that are freely reduced.
inline std::vector<Word> reduced_words_up_to(const Alphabet& a, std::size_t len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t k = 0; k < len; ++k) {
    auto end = out.size();
    for (auto i = begin; i < end; ++i)
      for (auto s : a.ordered_letters()) {
        if (!out[i].empty() && out[i].back() == s.inverse()) continue;
        auto w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

// Lexicographically least geodesic word of length D from 1, by DFS over the
// layers of a ball of radius ≥ D.
inline std::optional<Word> least_deep_geodesic(const CayleyBall& b, std::size_t D) {
  Word cur;
  std::function<bool(Index)> dfs = [&](Index v) {
    if (cur.size() == D) return true;
    for (auto s : b.alphabet().ordered_letters()) {
      auto n = b.neighbor(v, s);
      if (n == kNone || b.layer(n) != b.layer(v) + 1) continue;
      cur.push_back(s);
      if (dfs(n)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (dfs(0)) return cur;
  return std::nullopt;
}

}  // namespace detail

// Lex-least geodesics to the translates g·t, g ∈ B_r, grouped by the tail
// window. When 2(D + r) is below the shortest relator length every reduced
// word of length ≤ D + r is the unique geodesic of its element, so free
// reduction replaces the ball.
inline TailCensus tail_class_census(const Presentation& p, const WordProblem& wp, CensusConfig cfg) {
  require(cfg.overlap >= 1, "overlap must be at least 1");
  const auto& a = p.alphabet();
  auto fin = fineness_constant(p.graph(), p.options().cycle_cap);
  TailCensus out;
  out.K0 = fin.K0;
  out.K = index_bound(fin.K0);
  out.window = {cfg.cut.value_or(2 * cfg.translates + p.graph().max_diameter()), cfg.overlap};
  auto reach = cfg.depth + cfg.translates;
  out.tree_regime = wp.tree_like(2 * reach);

  std::vector<Word> translates;
  std::vector<Word> words;
  if (out.tree_regime) {
    if (cfg.target) {
      out.target = free_reduce(*cfg.target);
    } else {
      // The least reduced word of length D.
      Word t;
      for (std::size_t i = 0; i < cfg.depth; ++i) {
        for (auto s : a.ordered_letters())
          if (t.empty() || t.back() != s.inverse()) {
            t.push_back(s);
            break;
          }
      }
      out.target = t;
    }
    if (out.target.size() != cfg.depth)
      fail(ErrorKind::census_infeasible, "target is not a geodesic of length " + std::to_string(cfg.depth));
    for (auto& g : detail::reduced_words_up_to(a, cfg.translates)) {
      translates.push_back(g);
      words.push_back(free_reduce(concat(g, out.target)));
    }
  } else {
    auto ball = build_ball(wp, reach, cfg.ball_cap);
    std::optional<Index> t;
    if (cfg.target) {
      t = ball.locate(*cfg.target);
      if (!t || ball.layer(*t) != cfg.depth)
        fail(ErrorKind::census_infeasible, "target is not an element of length " + std::to_string(cfg.depth));
    } else {
      auto w = detail::least_deep_geodesic(ball, cfg.depth);
      if (!w) fail(ErrorKind::census_infeasible, "no geodesic of length " + std::to_string(cfg.depth));
      t = ball.walk_from(0, *w);
    }
    out.target = lex_least_geodesic(ball, *t).word;
    for (Index g = 0; g < ball.size() && ball.layer(g) <= cfg.translates; ++g) {
      auto gt = ball.walk_from(g, out.target);
      if (!gt) {
        ++out.skipped;
        continue;
      }
      auto d = ball.layer(*gt);
      if (!ball.certified_pair(0, *gt, static_cast<std::uint32_t>(d))) {
        ++out.skipped;
        continue;
      }
      translates.push_back(ball.word(g));
      words.push_back(lex_least_geodesic(ball, *gt).word);
    }
  }
  if (words.empty()) fail(ErrorKind::census_infeasible, "no certified translates");
  // Words shorter than the overlap cannot be compared; they are counted as skipped.
  std::vector<Word> kept_t, kept_w;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() < out.window.overlap) {
      ++out.skipped;
      continue;
    }
    kept_t.push_back(translates[i]);
    kept_w.push_back(words[i]);
  }
  if (kept_w.empty()) fail(ErrorKind::census_infeasible, "every translate is shorter than the overlap");
  auto [raw, closure] = detail::partition_tails(kept_w, out.window);
  out.classes_raw = detail::count_classes(raw);
  out.classes_closure = detail::count_classes(closure);
  for (std::size_t i = 0; i < kept_w.size(); ++i) out.members.push_back({kept_t[i], kept_w[i], raw[i], closure[i]});

  // Sensitivity: cuts 0..2c and overlaps around m.
  for (std::size_t c = 0; c <= 2 * out.window.cut; ++c)
    for (std::size_t m : {std::size_t{1}, out.window.overlap, 2 * out.window.overlap}) {
      if (m == 0) continue;
      bool fits = std::all_of(kept_w.begin(), kept_w.end(), [&](const Word& w) { return w.size() >= m; });
      if (!fits) continue;
      auto [r2, c2] = detail::partition_tails(kept_w, {c, m});
      out.sweep.push_back({c, m, detail::count_classes(r2), detail::count_classes(c2)});
    }
  std::sort(out.sweep.begin(), out.sweep.end(), [](const SweepPoint& x, const SweepPoint& y) {
    return std::tie(x.cut, x.overlap) < std::tie(y.cut, y.overlap);
  });
  out.sweep.erase(std::unique(out.sweep.begin(), out.sweep.end(),
                              [](const SweepPoint& x, const SweepPoint& y) {
                                return x.cut == y.cut && x.overlap == y.overlap;
                              }),
                  out.sweep.end());
  return out;
}

}  // namespace gsc

#endif  // GSC_BOUNDARY_HPP

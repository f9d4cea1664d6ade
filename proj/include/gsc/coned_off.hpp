#ifndef GSC_CONED_OFF_HPP
#define GSC_CONED_OFF_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsc/cayley.hpp"
#include "gsc/error.hpp"
#include "gsc/labeled_graph.hpp"
#include "gsc/rational.hpp"

namespace gsc {

using Index = CayleyBall::Index;

// Image of f_{v,g}: the label-preserving map Γᵢ → X sending v to g.
struct RelatorCopy {
  std::size_t component = 0;
  VertexId anchor_vertex = 0;
  Index anchor = 0;
  std::vector<Index> image;  // by component-local vertex index
  std::unordered_map<Index, std::uint32_t> local_of;

  bool contains(Index v) const { return local_of.count(v) > 0; }
  std::optional<std::uint32_t> local(Index v) const {
    auto it = local_of.find(v);
    if (it == local_of.end()) return std::nullopt;
    return it->second;
  }
};

struct CopyRegistry {
  std::vector<RelatorCopy> copies;
  std::size_t truncated = 0;  // anchors whose image leaves the ball
  std::size_t duplicates = 0;
  std::vector<std::vector<std::uint32_t>> at;  // ball vertex -> copies through it
};

// Traces f_{v0,g} for the first vertex v0 of each component and every ball
// element g. Any complete copy contains the image of v0, so this finds them
// all. Copies with equal image sets are kept once.
inline CopyRegistry find_relator_copies(const CayleyBall& ball, const LabeledGraph& g) {
  CopyRegistry reg;
  reg.at.assign(ball.size(), {});
  std::map<std::pair<std::size_t, std::vector<Index>>, std::size_t> seen;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    const auto& comp = g.component(c);
    if (comp.darts.empty()) continue;  // single vertex, no relator
    auto v0 = comp.vertices.front();
    for (Index anchor = 0; anchor < ball.size(); ++anchor) {
      std::vector<Index> img(comp.vertices.size(), kNone);
      img[g.local_index(v0)] = anchor;
      std::queue<VertexId> q;
      q.push(v0);
      bool complete = true;
      while (!q.empty() && complete) {
        auto v = q.front();
        q.pop();
        for (auto d : g.out_darts(v)) {
          const auto& dt = g.dart(d);
          auto n = ball.neighbor(img[g.local_index(v)], dt.label);
          if (n == kNone) {
            complete = false;
            break;
          }
          auto& slot = img[g.local_index(dt.target)];
          if (slot == kNone) {
            slot = n;
            q.push(dt.target);
          }
        }
      }
      if (!complete) {
        ++reg.truncated;
        continue;
      }
      auto key = img;
      std::sort(key.begin(), key.end());
      if (!seen.emplace(std::make_pair(c, key), reg.copies.size()).second) {
        ++reg.duplicates;
        continue;
      }
      RelatorCopy copy{c, v0, anchor, img, {}};
      for (std::uint32_t i = 0; i < img.size(); ++i) copy.local_of.emplace(img[i], i);
      auto id = static_cast<std::uint32_t>(reg.copies.size());
      for (auto v : key)
        if (reg.at[v].empty() || reg.at[v].back() != id) reg.at[v].push_back(id);
      reg.copies.push_back(std::move(copy));
    }
  }
  return reg;
}

// The ball with every complete relator copy replaced by a clique. Refers to
// the ball and the graph, which must outlive it.
class ConedBall {
 public:
  ConedBall(const CayleyBall& ball, const LabeledGraph& g)
      : ball_(&ball), graph_(&g), reg_(find_relator_copies(ball, g)) {
    step_ = std::max<std::uint32_t>(1, g.max_diameter());
  }

  const CayleyBall& ball() const noexcept { return *ball_; }
  const LabeledGraph& graph() const noexcept { return *graph_; }
  const CopyRegistry& registry() const noexcept { return reg_; }
  // Largest X-displacement of one Y-step.
  std::uint32_t step_bound() const noexcept { return step_; }

  std::vector<std::uint32_t> distances_from(Index x) const {
    const auto& b = *ball_;
    std::vector<std::uint32_t> d(b.size(), kNone);
    std::vector<char> used(reg_.copies.size(), 0);
    std::queue<Index> q;
    d[x] = 0;
    q.push(x);
    auto visit = [&](Index from, Index to) {
      if (d[to] == kNone) {
        d[to] = d[from] + 1;
        q.push(to);
      }
    };
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto l : b.alphabet().ordered_letters()) {
        auto n = b.neighbor(u, l);
        if (n != kNone) visit(u, n);
      }
      for (auto c : reg_.at[u]) {
        if (used[c]) continue;  // a clique is expanded from its first reached vertex only
        used[c] = 1;
        for (auto v : reg_.copies[c].image) visit(u, v);
      }
    }
    return d;
  }

  // A Y-path of length k from x to y, with every copy it cones through, lies
  // in the ball when, for each step i, min(|x| + i·D, |y| + (k−1−i)·D) + D ≤ R,
  // D being the step bound. The in-ball value is then exact.
  //
  // Short values need no margin. k ≤ 1 is always exact. For k = 2 the only
  // alternative is 1, which needs a copy through x and y; such a copy is
  // convex, so it would carry the X-geodesic from x to y, and that geodesic's
  // label would be readable in Γ.
  bool certified(Index x, Index y, std::uint32_t k) const {
    if (k == kNone) return false;
    if (k <= 1) return true;
    if (k == 2) {
      auto dx = ball_->distances_from(x);
      if (ball_->certified_pair(x, y, dx[y])) {
        auto w = geodesic_word(x, y, dx);
        bool readable = false;
        for (VertexId v = 0; v < graph_->vertex_count() && !readable; ++v) readable = graph_->walk(v, w).has_value();
        if (!readable) return true;
      }
    }
    std::size_t lx = ball_->layer(x), ly = ball_->layer(y), D = step_, worst = std::max(lx, ly);
    for (std::size_t i = 0; i < k; ++i)
      worst = std::max(worst, std::min(lx + i * D, ly + (k - 1 - i) * D) + D);
    return worst <= ball_->radius();
  }

  std::uint32_t coned_distance(Index x, Index y) const {
    auto k = distances_from(x)[y];
    if (!certified(x, y, k))
      throw UncertifiedDistance("d_Y(" + ball_->alphabet().format(ball_->word(x)) + ", " +
                                    ball_->alphabet().format(ball_->word(y)) +
                                    ") is not certified in the radius-" + std::to_string(ball_->radius()) +
                                    " ball; in-ball value " + std::to_string(k) + " is an upper bound",
                                k == kNone ? -1L : static_cast<long>(k));
    return k;
  }

  // Largest c such that every pair in B_c has certified d_X and d_Y.
  std::size_t certified_core_radius() const {
    const auto& b = *ball_;
    for (std::size_t c = b.radius() + 1; c-- > 0;) {
      bool ok = true;
      for (Index x = 0; x < b.size() && ok; ++x) {
        if (b.layer(x) > c) break;
        auto dy = distances_from(x);
        auto dx = b.distances_from(x);
        for (Index y = 0; y < b.size() && ok; ++y) {
          if (b.layer(y) > c) break;
          ok = certified(x, y, dy[y]) && b.certified_pair(x, y, dx[y]);
        }
      }
      if (ok) return c;
    }
    return 0;
  }

  std::vector<Index> core_points(std::size_t c) const {
    std::vector<Index> out;
    for (Index v = 0; v < ball_->size() && ball_->layer(v) <= c; ++v) out.push_back(v);
    return out;
  }

 private:
  // Some geodesic word from x to y given distances from x.
  Word geodesic_word(Index x, Index y, const std::vector<std::uint32_t>& dx) const {
    Word w;
    for (Index v = y; v != x;) {
      for (auto l : ball_->alphabet().ordered_letters()) {
        auto n = ball_->neighbor(v, l);
        if (n != kNone && dx[n] + 1 == dx[v]) {
          w.push_back(l.inverse());
          v = n;
          break;
        }
      }
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  const CayleyBall* ball_;
  const LabeledGraph* graph_;
  CopyRegistry reg_;
  std::uint32_t step_ = 1;
};

// ---------------------------------------------------------------------------
// Geodesic decompositions

struct Block {
  std::size_t begin = 0;  // positions in the word
  std::size_t end = 0;
  bool lone_edge = false;
  std::size_t component = 0;                 // for relator blocks
  VertexId start_vertex = 0;                 // Γ-vertex the block is read from
  std::optional<std::uint32_t> copy;         // registry id when the copy is complete
};

struct GeodesicDecomposition {
  Index source = 0;
  Index target = 0;
  Word word;
  std::vector<std::size_t> breakpoints;  // a_0 = 0, ..., a_k = |word| as positions
  std::vector<Block> blocks;
  std::size_t k() const noexcept { return blocks.size(); }
};

namespace detail {

// Least Γ-vertex from which w[i, j) is readable, per i the longest such j.
struct Readability {
  std::vector<std::size_t> reach;               // reach[i] = max j readable from some vertex
  std::vector<std::vector<VertexId>> reader;    // reader[i][j-i-1] = least vertex reading w[i,j)
};

inline Readability readability(const LabeledGraph& g, const Word& w) {
  Readability r;
  r.reach.assign(w.size(), 0);
  r.reader.assign(w.size(), {});
  for (std::size_t i = 0; i < w.size(); ++i) {
    r.reach[i] = i;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto at = v;
      std::size_t j = i;
      while (j < w.size()) {
        auto d = g.out_dart(at, w[j]);
        if (!d) break;
        at = g.dart(*d).target;
        ++j;
        if (r.reader[i].size() < j - i) r.reader[i].push_back(v);
      }
      r.reach[i] = std::max(r.reach[i], j);
    }
  }
  return r;
}

}  // namespace detail

// Minimal split of an X-geodesic into blocks that each lie in one relator
// copy or are a single edge on no relator.
inline GeodesicDecomposition decompose(const ConedBall& cb, Index x, const Word& w) {
  const auto& b = cb.ball();
  const auto& g = cb.graph();
  auto yv = b.walk_from(x, w);
  if (!yv) fail(ErrorKind::precondition, "word leaves the ball");
  auto dx = b.distances_from(x);
  if (!b.certified_pair(x, *yv, dx[*yv]) || dx[*yv] != w.size())
    fail(ErrorKind::precondition, "word '" + b.alphabet().format(w) + "' is not a certified X-geodesic");
  auto rd = detail::readability(g, w);
  auto n = w.size();
  std::vector<std::size_t> best(n + 1, kNone), from(n + 1, kNone);
  best[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] == kNone) continue;
    auto top = std::max(rd.reach[i], i + 1);
    for (std::size_t j = i + 1; j <= top; ++j)
      if (best[i] + 1 < best[j]) {
        best[j] = best[i] + 1;
        from[j] = i;
      }
  }
  GeodesicDecomposition out{x, *yv, w, {}, {}};
  std::vector<std::size_t> cuts;
  for (std::size_t j = n; j != 0; j = from[j]) cuts.push_back(j);
  cuts.push_back(0);
  std::reverse(cuts.begin(), cuts.end());
  out.breakpoints = cuts;
  std::vector<Index> pts{x};
  for (auto l : w) pts.push_back(b.neighbor(pts.back(), l));
  for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
    Block blk{cuts[t], cuts[t + 1], false, 0, 0, std::nullopt};
    if (rd.reach[blk.begin] < blk.end) {
      blk.lone_edge = true;
    } else {
      auto v = rd.reader[blk.begin][blk.end - blk.begin - 1];
      blk.component = g.component_of(v);
      blk.start_vertex = v;
      Word sub(w.begin() + blk.begin, w.begin() + blk.end);
      for (auto c : cb.registry().at[pts[blk.begin]]) {
        const auto& cp = cb.registry().copies[c];
        if (cp.component != blk.component) continue;
        auto lv = g.component(cp.component).vertices[*cp.local(pts[blk.begin])];
        if (g.walk(lv, sub)) {
          blk.copy = c;
          break;
        }
      }
    }
    out.blocks.push_back(blk);
  }
  auto dy = cb.distances_from(x)[*yv];
  if (cb.certified(x, *yv, dy) && dy != out.k())
    fail(ErrorKind::invariant_violation, "decomposition of '" + b.alphabet().format(w) + "' has " +
                                             std::to_string(out.k()) + " blocks but d_Y = " + std::to_string(dy));
  return out;
}

// ---------------------------------------------------------------------------
// Hyperbolicity

template <class Metric>
Rational gromov_product(Metric&& d, Index x, Index y, Index z) {
  return Rational(static_cast<std::int64_t>(d(x, z)) + d(y, z) - d(x, y), 2);
}

struct DeltaReport {
  Rational delta;
  std::size_t points = 0;
  std::size_t quadruples = 0;
  bool exhaustive = true;
  std::size_t core_radius = 0;
  std::array<Index, 4> witness{0, 0, 0, 0};  // x, y, z, w attaining delta
};

// Least δ with (x,z)_w ≥ min((x,y)_w, (y,z)_w) − δ over the point set. Gromov
// products are kept doubled so everything stays integral.
inline DeltaReport estimate_delta(const std::vector<std::vector<std::uint32_t>>& dist, std::size_t samples = 0,
                                  std::uint64_t seed = 1) {
  DeltaReport r;
  auto n = dist.size();
  r.points = n;
  r.exhaustive = samples == 0;
  std::int64_t worst = 0;
  auto gp2 = [&](std::size_t a, std::size_t c, std::size_t w) {
    return static_cast<std::int64_t>(dist[a][w]) + dist[c][w] - dist[a][c];
  };
  auto quad = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
    auto defect = std::min(gp2(x, y, w), gp2(y, z, w)) - gp2(x, z, w);
    ++r.quadruples;
    if (defect > worst) {
      worst = defect;
      r.witness = {static_cast<Index>(x), static_cast<Index>(y), static_cast<Index>(z), static_cast<Index>(w)};
    }
  };
  if (n == 0) return r;
  if (r.exhaustive) {
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) quad(x, y, z, w);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) quad(pick(rng), pick(rng), pick(rng), pick(rng));
  }
  r.delta = Rational(worst, 2);
  return r;
}

// Exhaustive (or sampled) δ over the certified core of a coned ball.
inline DeltaReport estimate_delta(const ConedBall& cb, std::size_t samples = 0, std::uint64_t seed = 1) {
  auto c = cb.certified_core_radius();
  auto pts = cb.core_points(c);
  std::vector<std::vector<std::uint32_t>> dist;
  for (auto p : pts) {
    auto full = cb.distances_from(p);
    std::vector<std::uint32_t> row;
    for (auto q : pts) row.push_back(full[q]);
    dist.push_back(std::move(row));
  }
  auto r = estimate_delta(dist, samples, seed);
  r.core_radius = c;
  for (auto& v : r.witness) v = pts.empty() ? 0 : pts[v];
  return r;
}

// ---------------------------------------------------------------------------
// Chains of big relator blocks

struct ChainCheck {
  bool holds = false;
  std::size_t k = 0;
  std::uint32_t d_y = 0;
};

// Blocks w[a_i, a_{i+1}) each inside a relator copy Θᵢ with |block| ≥ 3λ·girth(Θᵢ)
// and Θᵢ ≠ Θᵢ₊₁; then d_Y(a_0, a_k) should be k.
inline ChainCheck check_chain_geodesic(const ConedBall& cb, Index x, const Word& w,
                                       const std::vector<std::size_t>& breakpoints, Rational lambda) {
  const auto& b = cb.ball();
  const auto& g = cb.graph();
  if (breakpoints.size() < 2 || breakpoints.front() != 0 || breakpoints.back() != w.size())
    fail(ErrorKind::precondition, "breakpoints must run from 0 to the word length");
  std::vector<Index> pts{x};
  for (auto l : w) {
    auto n = b.neighbor(pts.back(), l);
    if (n == kNone) fail(ErrorKind::precondition, "word leaves the ball");
    pts.push_back(n);
  }
  const auto& reg = cb.registry();
  std::optional<std::uint32_t> prev;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    auto lo = breakpoints[i], hi = breakpoints[i + 1];
    if (hi <= lo) fail(ErrorKind::precondition, "breakpoints must increase");
    Word sub(w.begin() + lo, w.begin() + hi);
    // Complete copies through the block start that carry the block.
    std::vector<std::uint32_t> carriers;
    for (auto c : reg.at[pts[lo]]) {
      const auto& cp = reg.copies[c];
      auto v = g.component(cp.component).vertices[*cp.local(pts[lo])];
      if (g.walk(v, sub)) carriers.push_back(c);
    }
    if (carriers.empty())
      fail(ErrorKind::precondition, "block " + std::to_string(i) + " lies in no complete relator copy");
    auto gi = girth(g, reg.copies[carriers.front()].component);
    if (!gi || static_cast<std::int64_t>(sub.size()) * lambda.den() < 3 * lambda.num() * static_cast<std::int64_t>(*gi))
      fail(ErrorKind::precondition, "block " + std::to_string(i) + " is shorter than 3λ·girth");
    auto pick = std::find_if(carriers.begin(), carriers.end(), [&](std::uint32_t c) { return !prev || c != *prev; });
    if (pick == carriers.end())
      fail(ErrorKind::precondition, "blocks " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                        " lie in the same relator copy");
    prev = *pick;
  }
  ChainCheck r;
  r.k = breakpoints.size() - 1;
  r.d_y = cb.coned_distance(pts.front(), pts.back());
  r.holds = r.d_y == r.k;
  return r;
}

// ---------------------------------------------------------------------------
// Embedding checks and bigons

struct CopyViolation {
  std::uint32_t copy = 0;
  Index a = 0;
  Index b = 0;
  std::string what;
};

// d_X on each copy's image equals the graph metric of its component, for
// every pair whose X-distance is certified.
inline std::vector<CopyViolation> check_copy_isometry(const ConedBall& cb, std::size_t* checked = nullptr) {
  std::vector<CopyViolation> out;
  const auto& b = cb.ball();
  const auto& g = cb.graph();
  std::size_t n = 0;
  for (std::uint32_t c = 0; c < cb.registry().copies.size(); ++c) {
    const auto& cp = cb.registry().copies[c];
    const auto& verts = g.component(cp.component).vertices;
    for (std::size_t i = 0; i < cp.image.size(); ++i) {
      auto dx = b.distances_from(cp.image[i]);
      for (std::size_t j = 0; j < cp.image.size(); ++j) {
        if (!b.certified_pair(cp.image[i], cp.image[j], dx[cp.image[j]])) continue;
        ++n;
        if (dx[cp.image[j]] != g.distance(verts[i], verts[j]))
          out.push_back({c, cp.image[i], cp.image[j],
                         "d_X = " + std::to_string(dx[cp.image[j]]) + " but graph distance " +
                             std::to_string(g.distance(verts[i], verts[j]))});
      }
    }
  }
  if (checked) *checked = n;
  return out;
}

// Calls visit(g, h, geodesic set) for every ordered certified pair g ≠ h.
template <class Visit>
void for_each_certified_geodesic_set(const CayleyBall& b, Visit&& visit) {
  for (Index x = 0; x < b.size(); ++x) {
    auto d = b.distances_from(x);
    for (Index y = 0; y < b.size(); ++y) {
      if (x == y || !b.certified_pair(x, y, d[y])) continue;
      visit(x, y, all_geodesics(b, x, y));
    }
  }
}

inline std::vector<Index> trace(const CayleyBall& b, Index x, const Word& w) {
  std::vector<Index> pts{x};
  for (auto l : w) pts.push_back(b.neighbor(pts.back(), l));
  return pts;
}

// Θ ∩ p is one contiguous run of p, traversed along edges of Θ.
inline std::vector<CopyViolation> check_convexity(const ConedBall& cb, std::size_t* checked = nullptr) {
  std::vector<CopyViolation> out;
  const auto& b = cb.ball();
  const auto& g = cb.graph();
  std::size_t n = 0;
  for_each_certified_geodesic_set(b, [&](Index x, Index y, const GeodesicSet& gs) {
    for (const auto& w : gs.words) {
      auto pts = trace(b, x, w);
      std::map<std::uint32_t, std::vector<std::size_t>> hits;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (auto c : cb.registry().at[pts[i]]) hits[c].push_back(i);
      for (const auto& [c, pos] : hits) {
        ++n;
        const auto& cp = cb.registry().copies[c];
        bool ok = pos.back() - pos.front() + 1 == pos.size();
        for (std::size_t t = 0; ok && t + 1 < pos.size(); ++t) {
          auto lv = g.component(cp.component).vertices[*cp.local(pts[pos[t]])];
          auto step = g.out_dart(lv, w[pos[t]]);
          ok = step && cp.local(pts[pos[t] + 1]) == g.local_index(g.dart(*step).target);
        }
        if (!ok) out.push_back({c, x, y, "intersection with geodesic '" + b.alphabet().format(w) + "' is not a subpath"});
      }
    }
  });
  if (checked) *checked = n;
  return out;
}

struct BigonViolation {
  Index from = 0;
  Index to = 0;
  Word p;
  Word q;
  std::size_t cycle_length = 0;
  std::size_t min_side = 0;
};

struct BigonReport {
  std::vector<BigonViolation> violations;
  std::size_t pairs = 0;      // geodesic pairs compared
  std::size_t checked = 0;    // single-contour bigons tested
  std::size_t ladders = 0;    // bigon cycles not inside one copy (out of scope)
};

// Two geodesics from a common start meet only at equal positions; each
// maximal stretch where they differ bounds a simple cycle. When that cycle
// lies in one relator copy it is a contour r and both sides must exceed
// (1/2 − 2λ)|r|, checked as 2·den·side > (den − 4·num)·|r|.
inline BigonReport check_bigon_bound(const ConedBall& cb, Rational lambda) {
  if (Rational(1, 2) - Rational(2) * lambda < Rational(3) * lambda)
    fail(ErrorKind::precondition, "the bigon bound needs 1/2 - 2λ ≥ 3λ, i.e. λ ≤ 1/10; got " + lambda.str());
  BigonReport r;
  const auto& b = cb.ball();
  const auto& g = cb.graph();
  for_each_certified_geodesic_set(b, [&](Index x, Index y, const GeodesicSet& gs) {
    if (x > y) return;  // each unordered pair once
    for (std::size_t i = 0; i < gs.words.size(); ++i)
      for (std::size_t j = i + 1; j < gs.words.size(); ++j) {
        ++r.pairs;
        const auto& p = gs.words[i];
        const auto& q = gs.words[j];
        auto pp = trace(b, x, p), qq = trace(b, x, q);
        std::size_t t = 0;
        while (t < pp.size()) {
          if (pp[t] == qq[t]) {
            ++t;
            continue;
          }
          auto lo = t - 1;
          while (pp[t] != qq[t]) ++t;
          auto hi = t;  // pp[lo] == qq[lo], pp[hi] == qq[hi]
          Word cyc(p.begin() + lo, p.begin() + hi);
          auto back = inverse(Word(q.begin() + lo, q.begin() + hi));
          cyc.insert(cyc.end(), back.begin(), back.end());
          bool contour = false;
          for (auto c : cb.registry().at[pp[lo]]) {
            const auto& cp = cb.registry().copies[c];
            auto lv = g.component(cp.component).vertices[*cp.local(pp[lo])];
            auto end = g.walk(lv, cyc);
            if (end && *end == lv) {
              contour = true;
              break;
            }
          }
          if (!contour) {
            ++r.ladders;
            continue;
          }
          ++r.checked;
          auto side = hi - lo;
          auto len = cyc.size();
          if (!(2 * lambda.den() * static_cast<std::int64_t>(side) >
                (lambda.den() - 4 * lambda.num()) * static_cast<std::int64_t>(len)))
            r.violations.push_back({x, y, p, q, len, side});
        }
      }
  });
  return r;
}

}  // namespace gsc

#endif  // GSC_CONED_OFF_HPP

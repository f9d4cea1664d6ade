// Brute-force reference implementations used only by the tests. They share
// the data types with the library but none of its algorithms.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "gsc/cayley.hpp"
#include "gsc/labeled_graph.hpp"

namespace oracle {

using namespace gsc;
using Index = CayleyBall::Index;

// All label-preserving vertex bijections, by exhaustive backtracking over
// vertex assignments; a partial map survives while the number of edges with
// each label between assigned vertices is preserved.
inline std::vector<std::vector<VertexId>> automorphisms(const LabeledGraph& g) {
  auto n = g.vertex_count();
  auto L = g.alphabet().letter_count();
  std::vector<int> count(n * n * L, 0);
  std::vector<std::multiset<std::uint32_t>> sig(n);
  for (const auto& d : g.darts()) {
    count[(d.source * n + d.target) * L + d.label.code()]++;
    sig[d.source].insert(d.label.code());
  }
  auto same = [&](VertexId u, VertexId v, VertexId x, VertexId y) {
    return std::equal(count.begin() + (u * n + v) * L, count.begin() + (u * n + v + 1) * L,
                      count.begin() + (x * n + y) * L);
  };
  // Visit vertices so that each one (after a component's first) touches an earlier one.
  std::vector<VertexId> order;
  std::vector<char> placed(n, 0);
  for (VertexId r = 0; r < n; ++r) {
    if (placed[r]) continue;
    std::queue<VertexId> q;
    q.push(r);
    placed[r] = 1;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      order.push_back(v);
      for (auto d : g.out_darts(v))
        if (!placed[g.dart(d).target]) {
          placed[g.dart(d).target] = 1;
          q.push(g.dart(d).target);
        }
    }
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> phi(n, kNone);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(phi);
      return;
    }
    auto v = order[i];
    for (VertexId t = 0; t < n; ++t) {
      if (used[t] || sig[t] != sig[v]) continue;
      phi[v] = t;
      bool ok = same(v, v, t, t);
      for (std::size_t j = 0; j < i && ok; ++j) {
        auto u = order[j];
        ok = same(u, v, phi[u], t) && same(v, u, t, phi[u]);
      }
      if (ok) {
        used[t] = 1;
        rec(i + 1);
        used[t] = 0;
      }
      phi[v] = kNone;
    }
  };
  rec(0);
  return out;
}

struct PathRec {
  std::vector<VertexId> vertices;
  Word label;
};

// Every non-backtracking path of length 1..len starting anywhere.
inline std::vector<PathRec> reduced_paths(const LabeledGraph& g, std::size_t len) {
  std::vector<PathRec> out;
  std::vector<std::pair<PathRec, DartId>> frontier;
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const auto& dt = g.dart(d);
    frontier.push_back({{{dt.source, dt.target}, {dt.label}}, d});
  }
  for (std::size_t k = 1; k <= len && !frontier.empty(); ++k) {
    std::vector<std::pair<PathRec, DartId>> next;
    for (auto& [p, last] : frontier) {
      out.push_back(p);
      if (k == len) continue;
      for (auto d : g.out_darts(p.vertices.back())) {
        if (d == g.dart(last).inverse) continue;
        auto q = p;
        q.vertices.push_back(g.dart(d).target);
        q.label.push_back(g.dart(d).label);
        next.push_back({std::move(q), d});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Longest piece per component among paths of length ≤ len: a path p and a
// distinct path q with the same label where no automorphism maps the vertex
// sequence of p onto that of q.
inline std::vector<std::size_t> max_pieces(const LabeledGraph& g, std::size_t len) {
  auto auts = automorphisms(g);
  auto paths = reduced_paths(g, len);
  std::map<Word, std::vector<const PathRec*>> by_label;
  for (const auto& p : paths) by_label[p.label].push_back(&p);
  std::vector<std::size_t> best(g.component_count(), 0);
  for (const auto& [label, ps] : by_label)
    for (auto* p : ps)
      for (auto* q : ps) {
        bool mapped = std::any_of(auts.begin(), auts.end(), [&](const std::vector<VertexId>& phi) {
          for (std::size_t i = 0; i < p->vertices.size(); ++i)
            if (phi[p->vertices[i]] != q->vertices[i]) return false;
          return true;
        });
        if (mapped) continue;
        auto c = g.component_of(p->vertices.front());
        best[c] = std::max(best[c], label.size());
      }
  return best;
}

// Shortest closed non-backtracking walk with no repeated vertex. Walks
// never reuse the edge just taken, so a 2-step return uses a parallel edge.
inline std::optional<std::size_t> girth(const LabeledGraph& g, std::size_t c) {
  std::optional<std::size_t> best;
  for (const auto& p : reduced_paths(g, g.component(c).vertices.size())) {
    if (g.component_of(p.vertices.front()) != c || p.vertices.front() != p.vertices.back()) continue;
    std::set<VertexId> inner(p.vertices.begin() + 1, p.vertices.end());
    if (inner.size() + 1 != p.vertices.size()) continue;
    if (!best || p.label.size() < *best) best = p.label.size();
  }
  return best;
}

// Trivial words of length ≤ ceiling reachable from the empty word by
// inserting a cyclic conjugate of a relator or its inverse at any position
// and freely reducing. Derivations may pass through words longer than the
// one queried, so callers keep a margin above the query length and check
// that answers do not change when the ceiling grows.
class TrivialWords {
 public:
  TrivialWords(const std::vector<Relator>& rels, std::size_t ceiling) : ceiling_(ceiling) {
    std::set<Word> conj;
    for (const auto& r : rels)
      for (const auto& base : {r.word, inverse(r.word)})
        for (std::size_t k = 0; k < base.size(); ++k) {
          Word w(base.begin() + k, base.end());
          w.insert(w.end(), base.begin(), base.begin() + k);
          conj.insert(w);
        }
    std::queue<Word> q;
    set_.insert(Word{});
    q.push({});
    while (!q.empty()) {
      auto w = q.front();
      q.pop();
      for (const auto& r : conj)
        for (std::size_t i = 0; i <= w.size(); ++i) {
          Word x(w.begin(), w.begin() + i);
          x.insert(x.end(), r.begin(), r.end());
          x.insert(x.end(), w.begin() + i, w.end());
          x = free_reduce(x);
          if (x.size() > ceiling_ || set_.count(x)) continue;
          set_.insert(x);
          q.push(std::move(x));
        }
    }
  }
  bool trivial(const Word& w) const { return set_.count(free_reduce(w)) > 0; }
  bool equal(const Word& a, const Word& b) const { return trivial(concat(a, inverse(b))); }
  std::size_t size() const { return set_.size(); }

 private:
  std::size_t ceiling_;
  std::unordered_set<Word, WordHash> set_;
};

// All words of length ≤ n over the alphabet, shortlex order.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t n, bool reduced_only = false) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t k = 0; k < n; ++k) {
    auto end = out.size();
    for (auto i = begin; i < end; ++i)
      for (auto s : a.ordered_letters()) {
        if (reduced_only && !out[i].empty() && out[i].back() == s.inverse()) continue;
        auto w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

// Element classes of reduced words of length ≤ R; layer = shortest member.
inline std::vector<std::size_t> layer_sizes(const Alphabet& a, const TrivialWords& e, std::size_t R) {
  auto words = all_words(a, R, true);
  std::vector<std::size_t> rep;  // index of a representative per class, in order of discovery
  std::vector<std::size_t> sizes(R + 1, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool seen = std::any_of(rep.begin(), rep.end(), [&](std::size_t j) { return e.equal(words[j], words[i]); });
    if (seen) continue;
    rep.push_back(i);
    sizes[words[i].size()]++;  // shortlex order: first member is shortest
  }
  return sizes;
}

// Every word of length d equal to u⁻¹v, by exhaustive search.
inline std::vector<Word> geodesic_words(const Alphabet& a, const TrivialWords& e, const Word& u, const Word& v,
                                        std::size_t d) {
  std::vector<Word> out;
  auto target = concat(inverse(u), v);
  Word cur;
  std::function<void()> rec = [&] {
    if (cur.size() == d) {
      if (e.equal(cur, target)) out.push_back(cur);
      return;
    }
    for (auto s : a.ordered_letters()) {
      if (!cur.empty() && cur.back() == s.inverse()) continue;  // geodesics are reduced
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

// d_Y by BFS over an explicit adjacency list: ball edges plus a clique on
// each relator copy. A copy is the image of g·ℓ(v0 → u) over the vertices u
// of a component, followed along ball edges; every vertex on such a path is
// itself in the copy, so a complete copy never needs to leave the ball.
inline std::vector<std::vector<std::uint32_t>> coned_distances(const CayleyBall& b, const LabeledGraph& g) {
  std::vector<std::vector<Index>> adj(b.size());
  for (Index x = 0; x < b.size(); ++x)
    for (auto s : b.alphabet().ordered_letters())
      if (auto y = b.neighbor(x, s); y != kNone) adj[x].push_back(y);
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    const auto& comp = g.component(c);
    if (comp.darts.empty()) continue;
    auto v0 = comp.vertices.front();
    for (Index anchor = 0; anchor < b.size(); ++anchor) {
      std::vector<Index> img;
      for (auto u : comp.vertices) {
        Index at = anchor;
        for (auto l : g.shortest_label(v0, u)) {
          if (at == kNone) break;
          at = b.neighbor(at, l);
        }
        if (at == kNone) break;
        img.push_back(at);
      }
      if (img.size() != comp.vertices.size()) continue;
      for (auto x : img)
        for (auto y : img)
          if (x != y) adj[x].push_back(y);
    }
  }
  std::vector<std::vector<std::uint32_t>> dist(b.size(), std::vector<std::uint32_t>(b.size(), kNone));
  for (Index s = 0; s < b.size(); ++s) {
    std::queue<Index> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u])
        if (dist[s][v] == kNone) {
          dist[s][v] = dist[s][u] + 1;
          q.push(v);
        }
    }
  }
  return dist;
}

// Random folded graph over {a, b} with at most 4 edges (8 darts): one or two
// connected components, each a random spanning tree plus extra edges.
inline LabeledGraph random_folded_graph(std::mt19937_64& rng) {
  Alphabet a({"a", "b"});
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto letter = [&] { return Letter(static_cast<std::uint32_t>(uni(0, 1)), uni(0, 1) == 1); };
  int parts = uni(1, 2);
  int budget = 4;
  std::vector<ComponentSpec> specs;
  for (int c = 0; c < parts; ++c) {
    int left = parts - c - 1;  // keep one edge for each later component
    int edges = c + 1 == parts ? budget : uni(1, budget - left);
    budget -= edges;
    int nv = uni(1, edges + 1);
    ComponentSpec spec{"G" + std::to_string(c), static_cast<std::uint32_t>(nv), {}};
    for (int v = 1; v < nv; ++v) {
      auto u = static_cast<std::uint32_t>(uni(0, v - 1));
      if (uni(0, 1)) spec.edges.push_back({u, static_cast<std::uint32_t>(v), letter()});
      else spec.edges.push_back({static_cast<std::uint32_t>(v), u, letter()});
    }
    for (int e = nv - 1; e < edges; ++e)
      spec.edges.push_back({static_cast<std::uint32_t>(uni(0, nv - 1)), static_cast<std::uint32_t>(uni(0, nv - 1)),
                            letter()});
    specs.push_back(std::move(spec));
  }
  return fold(LabeledGraph(a, specs)).graph;
}

// True when two distinct components admit a label-preserving isomorphism.
inline bool has_duplicate_components(const LabeledGraph& g) {
  for (const auto& phi : automorphisms(g))
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.component_of(phi[v]) != g.component_of(v)) return true;
  return false;
}

}  // namespace oracle

#ifndef GSC_LABELED_GRAPH_HPP
#define GSC_LABELED_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsc/error.hpp"
#include "gsc/word.hpp"

namespace gsc {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;
inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Dart {
  VertexId source;
  VertexId target;
  Letter label;
  DartId inverse;
};

// Input edge u -> v labeled x, declared inside a named component with local
// vertex numbering.
struct EdgeSpec {
  std::uint32_t from;
  std::uint32_t to;
  Letter label;
};

struct ComponentSpec {
  std::string name;
  std::uint32_t vertices = 0;
  std::vector<EdgeSpec> edges;
};

struct Component {
  std::string name;
  std::vector<VertexId> vertices;  // sorted global ids
  std::vector<DartId> darts;       // darts whose source lies in the component
};

struct GraphPath {
  VertexId start = 0;
  std::vector<DartId> darts;
  std::size_t size() const noexcept { return darts.size(); }
};

// Inverse-closed edge-labeled multigraph. Vertices carry global ids; each
// input edge contributes a dart and its inverse. Instances are immutable once
// built. Operations that need the graph folded say so and check it.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  LabeledGraph(Alphabet alphabet, const std::vector<ComponentSpec>& specs)
      : alphabet_(std::move(alphabet)) {
    std::vector<std::string> names;
    std::vector<std::uint32_t> owner;
    for (std::size_t c = 0; c < specs.size(); ++c) {
      const auto& spec = specs[c];
      VertexId base = vertex_count_;
      vertex_count_ += spec.vertices;
      owner.insert(owner.end(), spec.vertices, static_cast<std::uint32_t>(c));
      names.push_back(spec.name);
      for (const auto& e : spec.edges) {
        if (e.from >= spec.vertices || e.to >= spec.vertices)
          fail(ErrorKind::parse, "edge endpoint out of range in component '" + spec.name + "'");
        if (e.label.generator() >= alphabet_.generator_count())
          fail(ErrorKind::unknown_letter, "edge label outside the alphabet");
        add_edge(base + e.from, base + e.to, e.label);
      }
    }
    finish(names, owner, /*require_spec_connected=*/true);
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t dart_count() const noexcept { return darts_.size(); }
  std::size_t edge_count() const noexcept { return darts_.size() / 2; }
  const Dart& dart(DartId d) const { return darts_.at(d); }
  const std::vector<Dart>& darts() const noexcept { return darts_; }
  const std::vector<DartId>& out_darts(VertexId v) const { return out_.at(v); }
  std::size_t component_count() const noexcept { return components_.size(); }
  const Component& component(std::size_t c) const { return components_.at(c); }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t component_of(VertexId v) const { return component_of_.at(v); }
  // Edge id shared by a dart and its inverse.
  static std::size_t edge_of(DartId d) noexcept { return d / 2; }

  // First pair of darts sharing source and label, if any.
  std::optional<std::pair<DartId, DartId>> folding_witness() const {
    for (VertexId v = 0; v < vertex_count_; ++v) {
      std::map<std::uint32_t, DartId> seen;
      for (auto d : out_[v]) {
        auto [it, fresh] = seen.emplace(darts_[d].label.code(), d);
        if (!fresh) return std::make_pair(it->second, d);
      }
    }
    return std::nullopt;
  }
  bool is_folded() const { return !folding_witness().has_value(); }

  // Dart leaving v with the given label (first one when unfolded).
  std::optional<DartId> out_dart(VertexId v, Letter label) const {
    for (auto d : out_[v])
      if (darts_[d].label == label) return d;
    return std::nullopt;
  }

  // Endpoint of the label-driven walk from v, or nullopt when some letter is
  // not readable. Meaningful on folded graphs.
  std::optional<VertexId> walk(VertexId v, const Word& w) const {
    for (auto l : w) {
      auto d = out_dart(v, l);
      if (!d) return std::nullopt;
      v = darts_[*d].target;
    }
    return v;
  }

  std::optional<GraphPath> path_from(VertexId v, const Word& w) const {
    GraphPath p{v, {}};
    for (auto l : w) {
      auto d = out_dart(v, l);
      if (!d) return std::nullopt;
      p.darts.push_back(*d);
      v = darts_[*d].target;
    }
    return p;
  }

  bool uses_letter(Letter l) const {
    for (const auto& d : darts_)
      if (d.label == l) return true;
    return false;
  }

  // Graph distance inside the component of u; kNone when v is elsewhere.
  std::uint32_t distance(VertexId u, VertexId v) const {
    auto c = component_of_.at(u);
    if (component_of_.at(v) != c) return kNone;
    const auto& comp = components_[c];
    return dist_[c][local_[u] * comp.vertices.size() + local_[v]];
  }
  std::uint32_t diameter(std::size_t c) const { return diameter_.at(c); }
  std::uint32_t max_diameter() const {
    std::uint32_t m = 0;
    for (auto d : diameter_) m = std::max(m, d);
    return m;
  }
  std::uint32_t local_index(VertexId v) const { return local_.at(v); }

  // Shortest path from u to v inside their component whose label is
  // shortlex-least under the alphabet order.
  Word shortest_label(VertexId u, VertexId v) const {
    Word out;
    auto d = distance(u, v);
    if (d == kNone) fail(ErrorKind::precondition, "vertices lie in different components");
    while (u != v) {
      std::optional<DartId> best;
      for (auto dd : out_[u]) {
        if (distance(darts_[dd].target, v) + 1 != distance(u, v)) continue;
        if (!best || alphabet_.less(darts_[dd].label, darts_[*best].label)) best = dd;
      }
      out.push_back(darts_[*best].label);
      u = darts_[*best].target;
    }
    return out;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    if (!(a.alphabet_ == b.alphabet_) || a.vertex_count_ != b.vertex_count_ ||
        a.components_.size() != b.components_.size() || a.darts_.size() != b.darts_.size())
      return false;
    for (std::size_t c = 0; c < a.components_.size(); ++c)
      if (a.components_[c].name != b.components_[c].name ||
          a.components_[c].vertices != b.components_[c].vertices)
        return false;
    auto edges = [](const LabeledGraph& g) {
      std::multiset<std::tuple<VertexId, VertexId, std::uint32_t>> s;
      for (const auto& d : g.darts_) s.emplace(d.source, d.target, d.label.code());
      return s;
    };
    return edges(a) == edges(b);
  }

 private:
  friend struct GraphBuilder;
  friend class Folder;

  void add_edge(VertexId u, VertexId v, Letter label) {
    auto id = static_cast<DartId>(darts_.size());
    darts_.push_back({u, v, label, id + 1});
    darts_.push_back({v, u, label.inverse(), id});
  }

  // Recomputes out lists, components (by connectivity) and distances.
  // `owner[v]` is the input component that contributed v.
  void finish(const std::vector<std::string>& names, const std::vector<std::uint32_t>& owner,
              bool require_spec_connected) {
    out_.assign(vertex_count_, {});
    for (DartId d = 0; d < darts_.size(); ++d) out_[darts_[d].source].push_back(d);
    component_of_.assign(vertex_count_, kNone);
    components_.clear();
    for (VertexId s = 0; s < vertex_count_; ++s) {
      if (component_of_[s] != kNone) continue;
      auto c = static_cast<std::uint32_t>(components_.size());
      Component comp;
      std::vector<VertexId> stack{s};
      component_of_[s] = c;
      std::set<std::uint32_t> owners;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        comp.vertices.push_back(v);
        owners.insert(owner[v]);
        for (auto d : out_[v]) {
          auto t = darts_[d].target;
          if (component_of_[t] == kNone) {
            component_of_[t] = c;
            stack.push_back(t);
          }
        }
      }
      std::sort(comp.vertices.begin(), comp.vertices.end());
      for (auto v : comp.vertices)
        for (auto d : out_[v]) comp.darts.push_back(d);
      std::sort(comp.darts.begin(), comp.darts.end());
      std::string name;
      for (auto o : owners) name += (name.empty() ? "" : "+") + names[o];
      comp.name = name;
      components_.push_back(std::move(comp));
    }
    if (require_spec_connected) {
      std::vector<int> count(names.size(), 0);
      for (const auto& comp : components_) count[owner[comp.vertices.front()]]++;
      for (std::size_t o = 0; o < names.size(); ++o)
        if (count[o] > 1)
          fail(ErrorKind::parse, "component '" + names[o] + "' is not connected");
    }
    compute_distances();
  }

  void compute_distances() {
    local_.assign(vertex_count_, 0);
    dist_.assign(components_.size(), {});
    diameter_.assign(components_.size(), 0);
    for (std::size_t c = 0; c < components_.size(); ++c) {
      const auto& vs = components_[c].vertices;
      for (std::uint32_t i = 0; i < vs.size(); ++i) local_[vs[i]] = i;
      auto n = vs.size();
      auto& dm = dist_[c];
      dm.assign(n * n, kNone);
      for (std::uint32_t i = 0; i < n; ++i) {
        std::queue<VertexId> q;
        q.push(vs[i]);
        dm[i * n + i] = 0;
        while (!q.empty()) {
          auto v = q.front();
          q.pop();
          for (auto d : out_[v]) {
            auto t = local_[darts_[d].target];
            if (dm[i * n + t] == kNone) {
              dm[i * n + t] = dm[i * n + local_[v]] + 1;
              q.push(darts_[d].target);
            }
          }
        }
        for (std::uint32_t j = 0; j < n; ++j) diameter_[c] = std::max(diameter_[c], dm[i * n + j]);
      }
    }
  }

  Alphabet alphabet_;
  std::uint32_t vertex_count_ = 0;
  std::vector<Dart> darts_;
  std::vector<std::vector<DartId>> out_;
  std::vector<Component> components_;
  std::vector<std::uint32_t> component_of_;
  std::vector<std::uint32_t> local_;
  std::vector<std::vector<std::uint32_t>> dist_;
  std::vector<std::uint32_t> diameter_;
};

// ---------------------------------------------------------------------------
// Paths and labels

inline void check_path(const LabeledGraph& g, const GraphPath& p) {
  if (p.start >= g.vertex_count()) fail(ErrorKind::malformed_path, "path start out of range");
  VertexId at = p.start;
  for (std::size_t i = 0; i < p.darts.size(); ++i) {
    if (p.darts[i] >= g.dart_count()) fail(ErrorKind::malformed_path, "dart id out of range");
    const auto& d = g.dart(p.darts[i]);
    if (d.source != at)
      fail(ErrorKind::malformed_path, "dart " + std::to_string(i) + " is not incident to the previous one");
    at = d.target;
  }
}

inline VertexId path_end(const LabeledGraph& g, const GraphPath& p) {
  return p.darts.empty() ? p.start : g.dart(p.darts.back()).target;
}

inline Word read_label(const LabeledGraph& g, const GraphPath& p) {
  check_path(g, p);
  Word w;
  w.reserve(p.darts.size());
  for (auto d : p.darts) w.push_back(g.dart(d).label);
  return w;
}

inline GraphPath reverse(const LabeledGraph& g, const GraphPath& p) {
  check_path(g, p);
  GraphPath r{path_end(g, p), {}};
  for (auto it = p.darts.rbegin(); it != p.darts.rend(); ++it) r.darts.push_back(g.dart(*it).inverse);
  return r;
}

// ---------------------------------------------------------------------------
// Folding

struct FoldResult {
  LabeledGraph graph;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
  std::size_t merged_vertices = 0;
  std::size_t removed_edges = 0;
};

class Folder {
 public:
  static FoldResult fold(const LabeledGraph& in) {
    std::vector<VertexId> parent(in.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t merged = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<VertexId, std::uint32_t>, VertexId> target;
      for (const auto& d : in.darts()) {
        auto key = std::make_pair(find(d.source), d.label.code());
        auto t = find(d.target);
        auto [it, fresh] = target.emplace(key, t);
        if (!fresh && find(it->second) != t) {
          auto a = find(it->second);
          parent[std::max(a, t)] = std::min(a, t);
          ++merged;
          changed = true;
        }
      }
    }
    // Renumber surviving classes in order of their least member.
    std::vector<VertexId> rep_index(in.vertex_count(), kNone);
    std::vector<VertexId> vertex_map(in.vertex_count());
    VertexId next = 0;
    for (VertexId v = 0; v < in.vertex_count(); ++v) {
      auto r = find(v);
      if (rep_index[r] == kNone) rep_index[r] = next++;
      vertex_map[v] = rep_index[r];
    }
    LabeledGraph out;
    out.alphabet_ = in.alphabet_;
    out.vertex_count_ = next;
    std::set<std::tuple<VertexId, VertexId, std::uint32_t>> kept;
    std::size_t removed = 0;
    for (DartId e = 0; e < in.dart_count(); e += 2) {
      const auto& d = in.dart(e);
      auto u = vertex_map[d.source], v = vertex_map[d.target];
      // An edge and its reverse reading are the same edge.
      if (kept.count({u, v, d.label.code()}) || kept.count({v, u, d.label.inverse().code()})) {
        ++removed;
        continue;
      }
      kept.emplace(u, v, d.label.code());
      out.add_edge(u, v, d.label);
    }
    std::vector<std::string> names;
    std::vector<std::uint32_t> owner(next, 0);
    for (std::size_t c = 0; c < in.component_count(); ++c) {
      names.push_back(in.component(c).name);
      for (auto v : in.component(c).vertices) owner[vertex_map[v]] = static_cast<std::uint32_t>(c);
    }
    out.finish(names, owner, /*require_spec_connected=*/false);
    return {std::move(out), std::move(vertex_map), merged, removed};
  }
};

inline FoldResult fold(const LabeledGraph& g) { return Folder::fold(g); }

// ---------------------------------------------------------------------------
// Simple closed paths

struct Cycle {
  std::size_t component;
  GraphPath path;  // closed, vertex-simple except at the basepoint
};

// Cyclic word canonical form: least rotation of the lesser of (w, w⁻¹),
// everything compared under the alphabet order.
inline Word canonical_cyclic_word(const Alphabet& a, const Word& w) {
  auto least_rotation = [&](const Word& x) {
    Word best = x;
    for (std::size_t r = 1; r < x.size(); ++r) {
      Word rot(x.begin() + r, x.end());
      rot.insert(rot.end(), x.begin(), x.begin() + r);
      if (a.lex_less(rot, best)) best = rot;
    }
    return best;
  };
  auto f = least_rotation(w);
  auto b = least_rotation(inverse(w));
  return a.lex_less(b, f) ? b : f;
}

// All vertex-simple cycles of a component up to rotation and reversal.
// Cycles are listed by basepoint = least vertex, then in DFS order.
// Calls visit(path) once per vertex-simple cycle of the component, based at
// its least vertex; stops early when visit returns false. Each cycle is seen
// in one orientation: first edge id < last edge id.
template <class Visit>
void for_each_simple_closed_path(const LabeledGraph& g, std::size_t component, std::size_t length_cap,
                                 Visit&& visit) {
  require(length_cap > 0, "length cap must be positive");
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<DartId> stack;
  bool stop = false;
  for (auto base : g.component(component).vertices) {
    std::function<void(VertexId)> dfs = [&](VertexId v) {
      for (auto d : g.out_darts(v)) {
        if (stop) return;
        const auto& dt = g.dart(d);
        if (!stack.empty() && LabeledGraph::edge_of(d) == LabeledGraph::edge_of(stack.back()))
          continue;
        if (dt.target == base) {
          if (stack.size() + 1 > length_cap) continue;
          if (!stack.empty() && LabeledGraph::edge_of(stack.front()) > LabeledGraph::edge_of(d)) continue;
          if (stack.empty() && d % 2) continue;  // loop: keep one dart
          GraphPath p{base, stack};
          p.darts.push_back(d);
          if (!visit(static_cast<const GraphPath&>(p))) stop = true;
          continue;
        }
        if (dt.target < base || on_path[dt.target]) continue;
        if (stack.size() + 1 >= length_cap) continue;
        on_path[dt.target] = 1;
        stack.push_back(d);
        dfs(dt.target);
        stack.pop_back();
        on_path[dt.target] = 0;
      }
    };
    on_path[base] = 1;
    dfs(base);
    on_path[base] = 0;
    if (stop) return;
  }
}

inline std::vector<Cycle> simple_closed_paths(const LabeledGraph& g, std::size_t component,
                                              std::size_t length_cap, std::size_t count_cap) {
  require(length_cap > 0 && count_cap > 0, "caps must be positive");
  std::vector<Cycle> out;
  bool overflow = false;
  for_each_simple_closed_path(g, component, length_cap, [&](const GraphPath& p) {
    if (out.size() == count_cap) {
      overflow = true;
      return false;
    }
    out.push_back({component, p});
    return true;
  });
  if (overflow)
    throw EnumerationOverflow("simple closed path count exceeds cap " + std::to_string(count_cap),
                              out.size());
  return out;
}

// Shortest simple closed path length, or nullopt for a tree. Computed per
// edge as 1 + shortest detour between its endpoints avoiding that edge.
inline std::optional<std::size_t> girth(const LabeledGraph& g, std::size_t component) {
  std::optional<std::size_t> best;
  const auto& comp = g.component(component);
  for (auto d0 : comp.darts) {
    if (d0 % 2) continue;
    const auto& e = g.dart(d0);
    if (e.source == e.target) return 1;
    std::map<VertexId, std::size_t> dist{{e.source, 0}};
    std::queue<VertexId> q;
    q.push(e.source);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      if (v == e.target) break;
      for (auto d : g.out_darts(v)) {
        if (LabeledGraph::edge_of(d) == LabeledGraph::edge_of(d0)) continue;
        auto t = g.dart(d).target;
        if (!dist.count(t)) {
          dist[t] = dist[v] + 1;
          q.push(t);
        }
      }
    }
    if (dist.count(e.target)) {
      auto len = dist[e.target] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Label-preserving automorphisms

struct VertexMap {
  std::vector<VertexId> vertex;  // global vertex -> global vertex
  std::vector<DartId> dart;      // global dart -> global dart
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

namespace detail {

// Label-preserving map from the component containing `from` onto the
// component containing `to`, sending from -> to, if it exists. On folded
// graphs the image of one vertex determines the whole map.
inline std::optional<std::pair<std::vector<VertexId>, std::vector<DartId>>> propagate(
    const LabeledGraph& g, VertexId from, VertexId to) {
  const auto& src = g.component(g.component_of(from));
  const auto& dst = g.component(g.component_of(to));
  if (src.vertices.size() != dst.vertices.size() || src.darts.size() != dst.darts.size())
    return std::nullopt;
  std::map<VertexId, VertexId> vmap{{from, to}};
  std::set<VertexId> used{to};
  std::map<DartId, DartId> dmap;
  std::queue<VertexId> q;
  q.push(from);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    auto img = vmap[v];
    if (g.out_darts(v).size() != g.out_darts(img).size()) return std::nullopt;
    for (auto d : g.out_darts(v)) {
      auto e = g.out_dart(img, g.dart(d).label);
      if (!e) return std::nullopt;
      dmap[d] = *e;
      auto t = g.dart(d).target, ti = g.dart(*e).target;
      auto it = vmap.find(t);
      if (it == vmap.end()) {
        if (used.count(ti)) return std::nullopt;
        vmap[t] = ti;
        used.insert(ti);
        q.push(t);
      } else if (it->second != ti) {
        return std::nullopt;
      }
    }
  }
  std::vector<VertexId> vs;
  for (auto v : src.vertices) vs.push_back(vmap.at(v));
  std::vector<DartId> ds;
  for (auto d : src.darts) ds.push_back(dmap.at(d));
  return std::make_pair(vs, ds);
}

}  // namespace detail

// Aut(Γ) for a folded graph whose components are pairwise non-isomorphic:
// every automorphism fixes each component, so the group is the product of
// per-component groups. Each per-component element is stored in full.
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  explicit AutomorphismGroup(const LabeledGraph& g) : graph_(&g) {
    require(g.is_folded(), "automorphisms need a folded graph");
    for (std::size_t c = 0; c < g.component_count(); ++c) {
      for (std::size_t c2 = c + 1; c2 < g.component_count(); ++c2) {
        auto base = g.component(c).vertices.front();
        for (auto t : g.component(c2).vertices)
          if (detail::propagate(g, base, t))
            fail(ErrorKind::duplicate_component,
                 "components '" + g.component(c).name + "' and '" + g.component(c2).name +
                     "' are label-isomorphic");
      }
    }
    per_component_.resize(g.component_count());
    orbit_.assign(g.vertex_count(), kNone);
    for (std::size_t c = 0; c < g.component_count(); ++c) {
      const auto& comp = g.component(c);
      auto base = comp.vertices.front();
      for (auto t : comp.vertices) {
        auto m = detail::propagate(g, base, t);
        if (m) per_component_[c].push_back(std::move(*m));
      }
      for (auto v : comp.vertices) {
        if (orbit_[v] != kNone) continue;
        auto id = static_cast<std::uint32_t>(orbit_count_++);
        for (const auto& m : per_component_[c]) {
          // m maps component vertex i to m.first[i]; find images of v.
          auto img = m.first[g.local_index(v)];
          orbit_[img] = id;
        }
      }
    }
  }

  // Number of automorphisms of the whole graph (product over components).
  std::size_t order() const {
    std::size_t n = 1;
    for (const auto& c : per_component_) n *= c.size();
    return n;
  }
  std::size_t component_order(std::size_t c) const { return per_component_.at(c).size(); }

  // The i-th automorphism of the whole graph in mixed-radix enumeration.
  VertexMap element(std::size_t index) const {
    const auto& g = *graph_;
    VertexMap m{std::vector<VertexId>(g.vertex_count()), std::vector<DartId>(g.dart_count())};
    for (std::size_t c = 0; c < per_component_.size(); ++c) {
      auto k = per_component_[c].size();
      const auto& [vs, ds] = per_component_[c][index % k];
      index /= k;
      const auto& comp = g.component(c);
      for (std::size_t i = 0; i < vs.size(); ++i) m.vertex[comp.vertices[i]] = vs[i];
      for (std::size_t i = 0; i < ds.size(); ++i) m.dart[comp.darts[i]] = ds[i];
    }
    return m;
  }

  // Orbit label of a vertex; equal labels iff some automorphism maps one to
  // the other.
  std::uint32_t orbit(VertexId v) const { return orbit_.at(v); }
  bool related(VertexId x, VertexId y) const { return orbit_.at(x) == orbit_.at(y); }

  bool contains(const VertexMap& m) const {
    const auto& g = *graph_;
    if (m.vertex.size() != g.vertex_count() || m.dart.size() != g.dart_count()) return false;
    for (DartId d = 0; d < g.dart_count(); ++d) {
      const auto& a = g.dart(d);
      if (m.dart[d] >= g.dart_count()) return false;
      const auto& b = g.dart(m.dart[d]);
      if (b.label != a.label || b.source != m.vertex[a.source] || b.target != m.vertex[a.target])
        return false;
    }
    std::vector<char> hit(g.vertex_count(), 0);
    for (auto v : m.vertex) {
      if (v >= g.vertex_count() || hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }

 private:
  const LabeledGraph* graph_ = nullptr;
  std::vector<std::vector<std::pair<std::vector<VertexId>, std::vector<DartId>>>> per_component_;
  std::vector<std::uint32_t> orbit_;
  std::size_t orbit_count_ = 0;
};

inline AutomorphismGroup label_automorphisms(const LabeledGraph& g) { return AutomorphismGroup(g); }

inline VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap m{std::vector<VertexId>(inner.vertex.size()), std::vector<DartId>(inner.dart.size())};
  for (std::size_t v = 0; v < inner.vertex.size(); ++v) m.vertex[v] = outer.vertex[inner.vertex[v]];
  for (std::size_t d = 0; d < inner.dart.size(); ++d) m.dart[d] = outer.dart[inner.dart[d]];
  return m;
}

inline VertexMap invert(const VertexMap& m) {
  VertexMap r{std::vector<VertexId>(m.vertex.size()), std::vector<DartId>(m.dart.size())};
  for (std::size_t v = 0; v < m.vertex.size(); ++v) r.vertex[m.vertex[v]] = static_cast<VertexId>(v);
  for (std::size_t d = 0; d < m.dart.size(); ++d) r.dart[m.dart[d]] = static_cast<DartId>(d);
  return r;
}

}  // namespace gsc

#endif  // GSC_LABELED_GRAPH_HPP

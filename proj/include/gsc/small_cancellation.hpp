#ifndef GSC_SMALL_CANCELLATION_HPP
#define GSC_SMALL_CANCELLATION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsc/error.hpp"
#include "gsc/labeled_graph.hpp"
#include "gsc/rational.hpp"
#include "gsc/word.hpp"

namespace gsc {

struct Piece {
  GraphPath p;
  GraphPath q;
  Word label;
};

struct ComponentPieces {
  std::size_t component = 0;
  std::size_t max_length = 0;  // 0 when the component has no pieces
  std::optional<Piece> witness;
};

// True iff `w` (reduced, nonempty) read from x is a piece: some start vertex y
// outside the automorphism orbit of x also reads w. On a folded graph a path
// is fixed by its start and label, so an automorphism carries (x,w) to (y,w)
// exactly when it sends x to y.
inline bool is_piece(const LabeledGraph& g, const AutomorphismGroup& aut, VertexId x, const Word& w) {
  if (w.empty() || !is_freely_reduced(w) || !g.walk(x, w)) return false;
  for (VertexId y = 0; y < g.vertex_count(); ++y)
    if (!aut.related(x, y) && g.walk(y, w)) return true;
  return false;
}

namespace detail {

// Longest synchronized walk in the product graph of (p-vertex, q-vertex,
// last letter). States reachable from an unrelated start pair spell pieces.
class PieceSearch {
 public:
  PieceSearch(const LabeledGraph& g, std::size_t cap) : g_(g), cap_(cap) {
    letters_ = static_cast<std::uint32_t>(g.alphabet().letter_count()) + 1;
  }

  // Longest extension from (x, y) with no previous letter.
  std::size_t longest(VertexId x, VertexId y) { return solve(key(x, y, letters_ - 1)); }

  Word spell(VertexId x, VertexId y) const {
    Word w;
    auto s = key(x, y, letters_ - 1);
    for (;;) {
      auto it = next_.find(s);
      if (it == next_.end() || it->second == kNoNext) break;
      auto t = it->second;
      w.push_back(Letter::from_code(static_cast<std::uint32_t>(t % letters_)));
      s = t;
    }
    return w;
  }

 private:
  static constexpr std::uint64_t kNoNext = ~std::uint64_t{0};

  std::uint64_t key(VertexId x, VertexId y, std::uint32_t last) const {
    return (std::uint64_t{x} * g_.vertex_count() + y) * letters_ + last;
  }
  VertexId px(std::uint64_t s) const { return static_cast<VertexId>(s / letters_ / g_.vertex_count()); }
  VertexId py(std::uint64_t s) const { return static_cast<VertexId>(s / letters_ % g_.vertex_count()); }
  std::uint32_t last(std::uint64_t s) const { return static_cast<std::uint32_t>(s % letters_); }

  std::vector<std::uint64_t> successors(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    auto x = px(s), y = py(s);
    auto l = last(s);
    for (auto d : g_.out_darts(x)) {
      auto lab = g_.dart(d).label;
      if (l != letters_ - 1 && lab == Letter::from_code(l).inverse()) continue;
      auto e = g_.out_dart(y, lab);
      if (!e) continue;
      out.push_back(key(g_.dart(d).target, g_.dart(*e).target, lab.code()));
    }
    return out;
  }

  // Iterative DFS with grey marks; a grey successor means a cycle.
  std::size_t solve(std::uint64_t root) {
    if (auto it = len_.find(root); it != len_.end()) return it->second;
    struct Frame {
      std::uint64_t s;
      std::vector<std::uint64_t> succ;
      std::size_t i;
    };
    std::vector<Frame> stack;
    std::unordered_map<std::uint64_t, char> grey;
    stack.push_back({root, successors(root), 0});
    grey[root] = 1;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.i < f.succ.size()) {
        auto t = f.succ[f.i++];
        if (len_.count(t)) continue;
        if (grey.count(t))
          fail(ErrorKind::inconclusive,
               "pieces are unbounded: two unrelated locations read a common periodic label");
        grey[t] = 1;
        auto succ = successors(t);
        stack.push_back({t, std::move(succ), 0});
        continue;
      }
      std::size_t best = 0;
      std::uint64_t arg = kNoNext;
      for (auto t : f.succ) {
        auto v = len_.at(t) + 1;
        if (v > best) {
          best = v;
          arg = t;
        }
      }
      if (best > cap_)
        fail(ErrorKind::inconclusive,
             "piece length exceeds cap " + std::to_string(cap_) + "; raise the cap");
      len_[f.s] = best;
      next_[f.s] = arg;
      grey.erase(f.s);
      stack.pop_back();
    }
    return len_.at(root);
  }

  const LabeledGraph& g_;
  std::size_t cap_;
  std::uint32_t letters_;
  std::unordered_map<std::uint64_t, std::size_t> len_;
  std::unordered_map<std::uint64_t, std::uint64_t> next_;
};

}  // namespace detail

// Maximal piece length per component, with one witness of that length.
// Witness choice: least p-start vertex, then least q-start vertex.
inline std::vector<ComponentPieces> enumerate_pieces(const LabeledGraph& g, const AutomorphismGroup& aut,
                                                     std::size_t length_cap) {
  require(g.is_folded(), "piece enumeration needs a folded graph");
  require(length_cap > 0, "piece length cap must be positive");
  detail::PieceSearch search(g, length_cap);
  std::vector<ComponentPieces> out;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    ComponentPieces cp{c, 0, std::nullopt};
    std::optional<std::pair<VertexId, VertexId>> arg;
    for (auto x : g.component(c).vertices)
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (aut.related(x, y)) continue;
        auto len = search.longest(x, y);
        if (len > cp.max_length) {
          cp.max_length = len;
          arg = {x, y};
        }
      }
    if (arg) {
      auto w = search.spell(arg->first, arg->second);
      cp.witness = Piece{*g.path_from(arg->first, w), *g.path_from(arg->second, w), w};
    }
    out.push_back(std::move(cp));
  }
  return out;
}

inline std::vector<ComponentPieces> enumerate_pieces(const LabeledGraph& g, std::size_t length_cap) {
  AutomorphismGroup aut(g);
  return enumerate_pieces(g, aut, length_cap);
}

struct ComponentVerdict {
  std::string name;
  std::optional<std::size_t> girth;  // nullopt = infinite
  std::size_t max_piece = 0;
  std::optional<Piece> witness;
  bool pass = true;
};

struct CancellationReport {
  Rational lambda;
  bool folded = true;
  std::optional<std::pair<DartId, DartId>> folding_witness;
  std::vector<ComponentVerdict> components;
  bool pass = false;

  // Verdict at another λ from the same piece data; |p|·den < num·girth.
  bool passes_at(Rational l) const {
    if (!folded) return false;
    for (const auto& c : components)
      if (c.girth && !(static_cast<std::int64_t>(c.max_piece) * l.den() <
                       l.num() * static_cast<std::int64_t>(*c.girth)))
        return false;
    return true;
  }
};

inline void check_lambda(Rational lambda) {
  if (!(lambda > Rational(0)) || lambda > Rational(1, 2))
    fail(ErrorKind::precondition, "lambda must lie in (0, 1/2], got " + lambda.str());
}

inline CancellationReport verify_Cprime(const LabeledGraph& g, const AutomorphismGroup& aut, Rational lambda,
                                        std::size_t length_cap) {
  check_lambda(lambda);
  CancellationReport r;
  r.lambda = lambda;
  if (auto w = g.folding_witness()) {
    r.folded = false;
    r.folding_witness = w;
    r.pass = false;
    return r;
  }
  auto pieces = enumerate_pieces(g, aut, length_cap);
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    ComponentVerdict v;
    v.name = g.component(c).name;
    v.girth = girth(g, c);
    v.max_piece = pieces[c].max_length;
    if (v.girth)
      v.pass = static_cast<std::int64_t>(v.max_piece) * lambda.den() <
               lambda.num() * static_cast<std::int64_t>(*v.girth);
    if (!v.pass) v.witness = pieces[c].witness;
    r.components.push_back(std::move(v));
  }
  r.pass = std::all_of(r.components.begin(), r.components.end(), [](const auto& v) { return v.pass; });
  return r;
}

inline CancellationReport verify_Cprime(const LabeledGraph& g, Rational lambda, std::size_t length_cap) {
  if (!g.is_folded()) return verify_Cprime(g, AutomorphismGroup(), lambda, length_cap);
  AutomorphismGroup aut(g);
  return verify_Cprime(g, aut, lambda, length_cap);
}

// ---------------------------------------------------------------------------
// Extreme fineness

struct FinenessReport {
  std::size_t K0 = 0;
  std::vector<std::size_t> per_edge;            // cycles through each edge
  std::map<std::size_t, std::size_t> histogram;  // cycle count -> number of edges
  std::size_t cycles = 0;
  std::size_t cap = 0;
};

inline FinenessReport fineness_constant(const LabeledGraph& g, std::size_t count_cap) {
  require(count_cap > 0, "cycle count cap must be positive");
  FinenessReport r;
  r.cap = count_cap;
  r.per_edge.assign(g.edge_count(), 0);
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    const auto& comp = g.component(c);
    for_each_simple_closed_path(g, c, comp.vertices.size(), [&](const GraphPath& p) {
      ++r.cycles;
      for (auto d : p.darts) {
        auto e = LabeledGraph::edge_of(d);
        if (++r.per_edge[e] > count_cap)
          throw FinenessCapExceeded("edge " + std::to_string(e) + " of component '" + comp.name +
                                        "' lies on more than " + std::to_string(count_cap) +
                                        " simple closed paths",
                                    e);
      }
      return true;
    });
  }
  for (auto n : r.per_edge) {
    r.K0 = std::max(r.K0, n);
    r.histogram[n]++;
  }
  return r;
}

inline std::uint64_t index_bound(std::uint64_t K0) { return (1 + K0) * (1 + K0) + 1; }

// ---------------------------------------------------------------------------
// Presentation: Γ with its automorphisms and cancellation data.

struct PresentationOptions {
  std::size_t piece_cap = 4096;
  std::size_t cycle_cap = 100000;
};

class Presentation {
 public:
  Presentation(LabeledGraph graph, Rational lambda, PresentationOptions opts = {})
      : graph_(std::make_shared<const LabeledGraph>(std::move(graph))), options_(opts) {
    check_lambda(lambda);
    if (!graph_->is_folded())
      fail(ErrorKind::precondition, "presentation needs a folded graph; fold the input first");
    aut_ = std::make_shared<const AutomorphismGroup>(*graph_);
    report_ = verify_Cprime(*graph_, *aut_, lambda, opts.piece_cap);
  }

  const LabeledGraph& graph() const noexcept { return *graph_; }
  const AutomorphismGroup& automorphisms() const noexcept { return *aut_; }
  const Alphabet& alphabet() const noexcept { return graph_->alphabet(); }
  Rational lambda() const noexcept { return report_.lambda; }
  const CancellationReport& cancellation() const noexcept { return report_; }
  const PresentationOptions& options() const noexcept { return options_; }

  // Dehn's algorithm is trusted only under a strict C'(1/6) pass.
  bool dehn_certified() const { return report_.passes_at(Rational(1, 6)); }

  std::size_t min_girth() const {
    std::size_t m = 0;
    for (const auto& c : report_.components)
      if (c.girth && (m == 0 || *c.girth < m)) m = *c.girth;
    return m;
  }

 private:
  std::shared_ptr<const LabeledGraph> graph_;
  std::shared_ptr<const AutomorphismGroup> aut_;
  CancellationReport report_;
  PresentationOptions options_;
};

}  // namespace gsc

#endif  // GSC_SMALL_CANCELLATION_HPP

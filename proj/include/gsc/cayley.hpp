#ifndef GSC_CAYLEY_HPP
#define GSC_CAYLEY_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsc/error.hpp"
#include "gsc/labeled_graph.hpp"
#include "gsc/small_cancellation.hpp"
#include "gsc/word.hpp"

namespace gsc {

struct Relator {
  Word word;  // canonical cyclic representative
  std::size_t component = 0;
  std::size_t length() const noexcept { return word.size(); }
};

// One relator per distinct cyclic label of a simple closed path, in
// component order then enumeration order.
inline std::vector<Relator> relators(const Presentation& p, std::size_t cycle_cap) {
  const auto& g = p.graph();
  std::vector<Relator> out;
  std::vector<Word> seen;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    auto cycles = simple_closed_paths(g, c, g.component(c).vertices.size(), cycle_cap);
    for (const auto& cyc : cycles) {
      auto w = canonical_cyclic_word(g.alphabet(), read_label(g, cyc.path));
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      out.push_back({w, c});
    }
  }
  return out;
}

// 64-bit FNV-1a over generator names, letter order and the relator list.
inline std::string presentation_hash(const Alphabet& a, const std::vector<Relator>& rels) {
  std::vector<std::string> texts;
  for (const auto& r : rels) texts.push_back(a.format(r.word));
  std::sort(texts.begin(), texts.end());
  std::string blob;
  for (const auto& g : a.generators()) blob += g + ",";
  blob += "|";
  for (auto l : a.ordered_letters()) blob += a.name(l) + ",";
  blob += "|";
  for (const auto& t : texts) blob += t + ";";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : blob) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Exponent sums modulo the relator lattice, in Hermite normal form. Equal
// group elements have equal invariants.
class AbelianInvariant {
 public:
  AbelianInvariant() = default;
  AbelianInvariant(std::size_t gens, const std::vector<Relator>& rels) : n_(gens) {
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& r : rels) m.push_back(exponents(r.word));
    // Integer row echelon form by repeated Euclid on each column.
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_ && row < m.size(); ++col) {
      for (;;) {
        std::size_t piv = m.size();
        for (std::size_t i = row; i < m.size(); ++i)
          if (m[i][col] != 0 && (piv == m.size() || std::llabs(m[i][col]) < std::llabs(m[piv][col]))) piv = i;
        if (piv == m.size()) break;
        std::swap(m[row], m[piv]);
        bool clean = true;
        for (std::size_t i = row + 1; i < m.size(); ++i) {
          if (m[i][col] == 0) continue;
          auto q = m[i][col] / m[row][col];
          for (std::size_t j = 0; j < n_; ++j) m[i][j] -= q * m[row][j];
          if (m[i][col] != 0) clean = false;
        }
        if (clean) break;
      }
      if (row < m.size() && m[row][col] != 0) {
        if (m[row][col] < 0)
          for (auto& x : m[row]) x = -x;
        pivots_.push_back(col);
        rows_.push_back(m[row]);
        ++row;
      }
    }
  }

  std::vector<std::int64_t> exponents(const Word& w) const {
    std::vector<std::int64_t> v(n_, 0);
    for (auto l : w) v[l.generator()] += l.inverted() ? -1 : 1;
    return v;
  }

  std::vector<std::int64_t> operator()(const Word& w) const { return reduce(exponents(w)); }

  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto p = pivots_[i];
      auto h = rows_[i][p];
      auto q = v[p] / h;
      if (v[p] - q * h < 0) --q;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= q * rows_[i][j];
    }
    return v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Images in small permutation quotients found by search: generators go to
// permutations of {0..n-1} under which every relator acts trivially. Equal
// group elements have equal images.
class QuotientInvariant {
 public:
  QuotientInvariant() = default;
  QuotientInvariant(std::size_t gens, const std::vector<Relator>& rels, std::size_t max_homs = 8,
                    std::size_t budget = 20000, std::uint64_t seed = 0x5eed) {
    if (rels.empty() || gens == 0) return;
    std::mt19937_64 rng(seed);
    // Larger degrees first: their images separate elements better.
    for (std::uint8_t n = 7; n >= 3 && homs_.size() < max_homs; --n) {
      std::vector<Perm> all;
      Perm id(n);
      std::iota(id.begin(), id.end(), std::uint8_t{0});
      Perm p = id;
      do all.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      double space = std::pow(static_cast<double>(all.size()), static_cast<double>(gens));
      bool exhaustive = space <= static_cast<double>(budget);
      std::size_t tries = exhaustive ? static_cast<std::size_t>(space) : budget;
      std::vector<std::size_t> digits(gens, 0);
      for (std::size_t t = 0; t < tries && homs_.size() < max_homs; ++t) {
        if (exhaustive) {
          auto x = t;
          for (auto& d : digits) {
            d = x % all.size();
            x /= all.size();
          }
        } else {
          for (auto& d : digits) d = rng() % all.size();
        }
        Hom h;
        bool trivial = true;
        for (std::size_t g = 0; g < gens; ++g) {
          const auto& img = all[digits[g]];
          Perm inv(n);
          for (std::uint8_t i = 0; i < n; ++i) inv[img[i]] = i;
          h.push_back(img);
          h.push_back(inv);
          if (img != id) trivial = false;
        }
        if (trivial) continue;
        bool ok = std::all_of(rels.begin(), rels.end(), [&](const Relator& r) { return apply(h, r.word) == id; });
        if (ok) homs_.push_back(std::move(h));
      }
    }
  }

  std::size_t size() const noexcept { return homs_.size(); }

  std::string operator()(const Word& w) const {
    std::string key;
    for (const auto& h : homs_) {
      auto p = apply(h, w);
      key.append(p.begin(), p.end());
    }
    return key;
  }

 private:
  using Perm = std::vector<std::uint8_t>;
  using Hom = std::vector<Perm>;  // by letter code

  static Perm apply(const Hom& h, const Word& w) {
    auto n = h.front().size();
    Perm p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    for (auto l : w) {
      const auto& q = h[l.code()];
      for (auto& x : p) x = q[x];
    }
    return p;
  }

  std::vector<Hom> homs_;
};

// Dehn's algorithm over the symmetrized relator set (all rotations of every
// relator and its inverse).
class WordProblem {
 public:
  explicit WordProblem(const Presentation& p)
      : WordProblem(p, relators(p, p.options().cycle_cap)) {}

  WordProblem(const Presentation& p, std::vector<Relator> rels)
      : alphabet_(p.alphabet()), relators_(std::move(rels)) {
    if (!p.dehn_certified())
      fail(ErrorKind::precondition,
           "the word problem needs a C'(1/6) certificate; the presentation fails at 1/6");
    by_first_.assign(alphabet_.letter_count(), {});
    std::vector<Word> all;
    for (const auto& r : relators_) {
      for (const auto& base : {r.word, inverse(r.word)})
        for (std::size_t k = 0; k < base.size(); ++k) {
          Word rot(base.begin() + k, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + k);
          all.push_back(std::move(rot));
        }
      if (min_length_ == 0 || r.length() < min_length_) min_length_ = r.length();
    }
    std::sort(all.begin(), all.end(), [&](const Word& a, const Word& b) { return alphabet_.shortlex_less(a, b); });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    symmetrized_ = std::move(all);
    for (std::size_t i = 0; i < symmetrized_.size(); ++i)
      by_first_[symmetrized_[i].front().code()].push_back(i);
    invariant_ = AbelianInvariant(alphabet_.generator_count(), relators_);
    hash_ = presentation_hash(alphabet_, relators_);
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Relator>& relator_list() const noexcept { return relators_; }
  const std::vector<Word>& symmetrized() const noexcept { return symmetrized_; }
  // Shortest relator length; 0 for a free group.
  std::size_t min_relator_length() const noexcept { return min_length_; }
  const AbelianInvariant& invariant() const noexcept { return invariant_; }
  // Searched on first use; only non-tree balls need it.
  const QuotientInvariant& quotients() const {
    std::call_once(*quotients_once_, [&] { *quotients_ = QuotientInvariant(alphabet_.generator_count(), relators_); });
    return *quotients_;
  }

  // Hashable key; equal elements have equal keys.
  std::string element_key(const Word& w) const {
    std::string key;
    for (auto x : invariant_(w)) key += std::to_string(x) + ",";
    key += "|";
    key += quotients()(w);
    return key;
  }
  const std::string& hash() const noexcept { return hash_; }

  // Reduced words shorter than this are pairwise distinct and geodesic.
  bool tree_like(std::size_t two_length) const {
    return min_length_ == 0 || two_length < min_length_;
  }

  Word dehn_reduce(const Word& input) const {
    Word w = free_reduce(input);
    for (;;) {
      bool rewrote = false;
      for (std::size_t i = 0; i < w.size() && !rewrote; ++i) {
        std::size_t best_len = 0;
        const Word* best = nullptr;
        for (auto idx : by_first_[w[i].code()]) {
          const auto& s = symmetrized_[idx];
          std::size_t L = 0;
          while (L < s.size() && i + L < w.size() && s[L] == w[i + L]) ++L;
          if (2 * L <= s.size()) continue;
          // Longest match wins; ties go to the earlier (shortlex-least) relator.
          if (L > best_len) {
            best_len = L;
            best = &s;
          }
        }
        if (!best) continue;
        Word rest(best->begin() + best_len, best->end());
        Word repl = inverse(rest);
        Word next(w.begin(), w.begin() + i);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), w.begin() + i + best_len, w.end());
        w = free_reduce(next);
        rewrote = true;
      }
      if (!rewrote) return w;
    }
  }

  bool is_trivial(const Word& w) const { return dehn_reduce(w).empty(); }
  bool equal(const Word& g, const Word& h) const { return is_trivial(concat(g, inverse(h))); }

 private:
  Alphabet alphabet_;
  std::vector<Relator> relators_;
  std::vector<Word> symmetrized_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::size_t min_length_ = 0;
  AbelianInvariant invariant_;
  std::shared_ptr<QuotientInvariant> quotients_ = std::make_shared<QuotientInvariant>();
  std::shared_ptr<std::once_flag> quotients_once_ = std::make_shared<std::once_flag>();
  std::string hash_;
};

// Radius-R ball of the Cayley graph. Vertex 0 is the identity; vertices are
// numbered in shortlex order of their canonical words.
class CayleyBall {
 public:
  using Index = std::uint32_t;

  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& word(Index v) const { return words_.at(v); }
  std::size_t layer(Index v) const { return words_.at(v).size(); }
  const std::vector<std::size_t>& layer_sizes() const noexcept { return layer_sizes_; }
  const Alphabet& alphabet() const noexcept { return wp_->alphabet(); }
  const WordProblem& word_problem() const noexcept { return *wp_; }
  std::size_t letter_count() const noexcept { return letters_; }

  // Neighbor v·l, or kNone when it lies outside the ball.
  Index neighbor(Index v, Letter l) const { return adj_[std::size_t{v} * letters_ + l.code()]; }

  std::optional<Index> find_canonical(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Ball vertex represented by an arbitrary word, if it lies in the ball.
  std::optional<Index> locate(const Word& w) const {
    Index v = 0;
    bool inside = true;
    for (auto l : w) {
      auto n = neighbor(v, l);
      if (n == kNone) {
        inside = false;
        break;
      }
      v = n;
    }
    if (inside) return v;
    auto r = wp_->dehn_reduce(w);
    if (auto n = walk_from(0, r)) return n;
    auto it = buckets_.find(wp_->element_key(r));
    if (it == buckets_.end()) return std::nullopt;
    for (auto u : it->second)
      if (wp_->equal(words_[u], r)) return u;
    return std::nullopt;
  }

  std::optional<Index> walk_from(Index v, const Word& w) const {
    for (auto l : w) {
      v = neighbor(v, l);
      if (v == kNone) return std::nullopt;
    }
    return v;
  }

  // BFS distances inside the ball graph from v (kNone where unreachable).
  std::vector<std::uint32_t> distances_from(Index v) const {
    std::vector<std::uint32_t> d(size(), kNone);
    std::queue<Index> q;
    d[v] = 0;
    q.push(v);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t l = 0; l < letters_; ++l) {
        auto n = adj_[std::size_t{u} * letters_ + l];
        if (n != kNone && d[n] == kNone) {
          d[n] = d[u] + 1;
          q.push(n);
        }
      }
    }
    return d;
  }

  // Pairs whose geodesics provably stay in the ball. A point at position i
  // of a geodesic has norm ≤ min(|g| + i, |h| + d − i) ≤ ⌊(|g| + |h| + d)/2⌋;
  // with d the in-ball distance this bound ≤ R also makes d the true one.
  bool certified_pair(Index g, Index h, std::uint32_t d_ball) const {
    if (d_ball == kNone) return false;
    return (layer(g) + layer(h) + d_ball) / 2 <= radius_;
  }

  // Each undirected edge once, as (i, j, generator letter) with i·s = j.
  std::vector<std::tuple<Index, Index, Letter>> edges() const {
    std::vector<std::tuple<Index, Index, Letter>> out;
    for (Index i = 0; i < size(); ++i)
      for (std::uint32_t gen = 0; gen < alphabet().generator_count(); ++gen) {
        auto s = Letter(gen, false);
        auto j = neighbor(i, s);
        if (j != kNone) out.emplace_back(i, j, s);
      }
    return out;
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph ball {\n  rankdir=TB;\n";
    for (std::size_t k = 0; k < layer_sizes_.size(); ++k) {
      os << "  { rank=same;";
      for (Index v = 0; v < size(); ++v)
        if (layer(v) == k) os << " v" << v << ";";
      os << " }\n";
    }
    for (Index v = 0; v < size(); ++v)
      os << "  v" << v << " [label=\"" << alphabet().format(words_[v]) << "\"];\n";
    for (const auto& [i, j, s] : edges())
      os << "  v" << i << " -> v" << j << " [label=\"" << alphabet().name(s) << "\"];\n";
    os << "}\n";
    return os.str();
  }

 private:
  friend CayleyBall build_ball(const WordProblem& wp, std::size_t R, std::size_t cap);

  Index add(Word w) {
    auto v = static_cast<Index>(words_.size());
    buckets_[wp_->element_key(w)].push_back(v);
    index_.emplace(w, v);
    words_.push_back(std::move(w));
    adj_.resize(adj_.size() + letters_, kNone);
    return v;
  }
  void link(Index u, Letter s, Index v) {
    adj_[std::size_t{u} * letters_ + s.code()] = v;
    adj_[std::size_t{v} * letters_ + s.inverse().code()] = u;
  }

  const WordProblem* wp_ = nullptr;
  std::size_t radius_ = 0;
  std::size_t letters_ = 0;
  std::vector<Word> words_;
  std::unordered_map<std::string, std::vector<Index>> buckets_;
  std::unordered_map<Word, Index, WordHash> index_;
  std::vector<Index> adj_;
  std::vector<std::size_t> layer_sizes_;
};

// Breadth-first enumeration in shortlex order. A candidate u·s is matched
// against the current layer and the next layer found so far; edges back to
// the previous layer were already recorded from the other side. The
// returned ball refers to `wp`, which must outlive it.
inline CayleyBall build_ball(const WordProblem& wp, std::size_t R, std::size_t cap) {
  require(cap > 0, "ball size cap must be positive");
  CayleyBall b;
  b.wp_ = &wp;
  b.radius_ = R;
  b.letters_ = wp.alphabet().letter_count();
  b.add({});
  b.layer_sizes_.push_back(1);
  std::size_t begin = 0, end = 1;
  const auto& order = wp.alphabet().ordered_letters();
  // A vertex of layer `from` or later equal to cand. Earlier layers are already linked.
  auto find = [&](const Word& cand, std::size_t from) -> std::optional<CayleyBall::Index> {
    auto it = b.buckets_.find(wp.element_key(cand));
    if (it != b.buckets_.end())
      for (auto v : it->second)
        if (v >= from && wp.equal(b.words_[v], cand)) return v;
    return std::nullopt;
  };
  for (std::size_t k = 0; k < R; ++k) {
    bool tree = wp.tree_like(2 * (k + 1));
    std::size_t next_begin = b.size();
    for (auto u = static_cast<CayleyBall::Index>(begin); u < end; ++u) {
      for (auto s : order) {
        if (b.neighbor(u, s) != kNone) continue;
        Word cand = b.words_[u];
        if (!cand.empty() && cand.back() == s.inverse()) continue;  // recorded parent edge
        cand.push_back(s);
        std::optional<CayleyBall::Index> match;
        if (!tree) match = find(cand, begin);
        if (match) {
          b.link(u, s, *match);
          continue;
        }
        if (b.size() >= cap) {
          auto sizes = b.layer_sizes_;
          sizes.push_back(b.size() - next_begin);
          throw BallTooLarge("ball exceeds " + std::to_string(cap) + " vertices at layer " +
                                 std::to_string(k + 1),
                             sizes);
        }
        auto v = b.add(std::move(cand));
        b.link(u, s, v);
      }
    }
    begin = next_begin;
    end = b.size();
    b.layer_sizes_.push_back(end - begin);
  }
  // Edges inside the outermost layer.
  if (R > 0 && !wp.tree_like(2 * R + 1))
    for (auto u = static_cast<CayleyBall::Index>(begin); u < end; ++u)
      for (auto s : order) {
        if (b.neighbor(u, s) != kNone) continue;
        Word cand = b.words_[u];
        if (!cand.empty() && cand.back() == s.inverse()) continue;
        cand.push_back(s);
        if (auto m = find(cand, begin)) b.link(u, s, *m);
      }
  return b;
}

struct GeodesicSet {
  CayleyBall::Index source = 0;
  CayleyBall::Index target = 0;
  std::size_t length = 0;
  std::vector<Word> words;  // in lexicographic order of the alphabet
};

// Every geodesic word from g to h, by layered DFS towards h.
inline GeodesicSet all_geodesics(const CayleyBall& ball, CayleyBall::Index g, CayleyBall::Index h,
                                 std::size_t count_cap = 1000000) {
  auto dist = ball.distances_from(h);
  if (!ball.certified_pair(g, h, dist[g]))
    fail(ErrorKind::insufficient_radius,
         "geodesics between '" + ball.alphabet().format(ball.word(g)) + "' and '" +
             ball.alphabet().format(ball.word(h)) + "' may leave the radius-" +
             std::to_string(ball.radius()) + " ball");
  GeodesicSet out{g, h, dist[g], {}};
  Word cur;
  std::function<void(CayleyBall::Index)> dfs = [&](CayleyBall::Index v) {
    if (v == h) {
      if (out.words.size() >= count_cap)
        throw EnumerationOverflow("more than " + std::to_string(count_cap) + " geodesics", out.words.size());
      out.words.push_back(cur);
      return;
    }
    for (auto s : ball.alphabet().ordered_letters()) {
      auto n = ball.neighbor(v, s);
      if (n == kNone || dist[n] + 1 != dist[v]) continue;
      cur.push_back(s);
      dfs(n);
      cur.pop_back();
    }
  };
  dfs(g);
  return out;
}

}  // namespace gsc

#endif  // GSC_CAYLEY_HPP

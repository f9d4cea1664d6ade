#pragma once

#include <string>
#include <vector>

#include "gsc/io.hpp"
#include "gsc/labeled_graph.hpp"

namespace fx {

using namespace gsc;

inline std::string corpus_path(const std::string& name) { return std::string(GSC_CORPUS_DIR) + "/" + name + ".json"; }

inline LabeledGraph corpus(const std::string& name) { return parse_graph_file(corpus_path(name)).graph; }

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"free2", "classical", "theta", "torsion_family"};
  return names;
}

// Cycle of length |w| reading w from vertex 0.
inline ComponentSpec cycle(const Alphabet& a, const std::string& name, const std::string& word) {
  auto w = a.parse_word(word);
  ComponentSpec s{name, static_cast<std::uint32_t>(w.size()), {}};
  for (std::uint32_t i = 0; i < w.size(); ++i) s.edges.push_back({i, (i + 1) % s.vertices, w[i]});
  return s;
}

// Two branch vertices 0 and 1 joined by three paths reading x, y, z.
inline ComponentSpec theta(const Alphabet& a, const std::string& name, const std::vector<std::string>& sides) {
  ComponentSpec s{name, 2, {}};
  for (const auto& side : sides) {
    auto w = a.parse_word(side);
    std::uint32_t prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint32_t next = i + 1 == w.size() ? 1 : s.vertices++;
      s.edges.push_back({prev, next, w[i]});
      prev = next;
    }
  }
  return s;
}

// Path reading w: a tree.
inline ComponentSpec path(const Alphabet& a, const std::string& name, const std::string& word) {
  auto w = a.parse_word(word);
  ComponentSpec s{name, static_cast<std::uint32_t>(w.size() + 1), {}};
  for (std::uint32_t i = 0; i < w.size(); ++i) s.edges.push_back({i, i + 1, w[i]});
  return s;
}

inline Alphabet ab() { return Alphabet({"a", "b"}); }
inline Alphabet abc() { return Alphabet({"a", "b", "c"}); }

}  // namespace fx

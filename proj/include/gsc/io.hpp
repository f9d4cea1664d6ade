#ifndef GSC_IO_HPP
#define GSC_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsc/cayley.hpp"
#include "gsc/error.hpp"
#include "gsc/labeled_graph.hpp"

namespace gsc {

using json = nlohmann::json;

struct LoadedGraph {
  LabeledGraph raw;
  LabeledGraph graph;  // folded
  bool was_folded = true;
  std::optional<std::pair<DartId, DartId>> folding_witness;
  std::size_t merged_vertices = 0;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& what) {
  fail(ErrorKind::parse, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

inline const json& member(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) schema_error(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(ptr, "missing member '" + key + "'");
  return *it;
}

inline std::uint32_t as_index(const json& v, const std::string& ptr) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0x7fffffff)
    schema_error(ptr, "expected a non-negative integer");
  return static_cast<std::uint32_t>(v.get<long long>());
}

}  // namespace detail

// Raw (possibly unfolded) graph from the JSON document.
inline LabeledGraph graph_from_json(const json& doc) {
  using detail::schema_error;
  const auto& alpha = detail::member(doc, "alphabet", "");
  if (!alpha.is_array()) schema_error("/alphabet", "expected an array of generator names");
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i].is_string()) schema_error("/alphabet/" + std::to_string(i), "expected a string");
    gens.push_back(alpha[i].get<std::string>());
  }
  Alphabet a(gens);
  if (doc.contains("letter_order")) {
    const auto& ord = doc["letter_order"];
    if (!ord.is_array()) schema_error("/letter_order", "expected an array of letters");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ord.size(); ++i) {
      if (!ord[i].is_string()) schema_error("/letter_order/" + std::to_string(i), "expected a string");
      names.push_back(ord[i].get<std::string>());
    }
    a.set_order(names);
  }
  const auto& comps = detail::member(doc, "components", "");
  if (!comps.is_array()) schema_error("/components", "expected an array");
  std::vector<ComponentSpec> specs;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto cp = "/components/" + std::to_string(c);
    const auto& jc = comps[c];
    ComponentSpec spec;
    const auto& name = detail::member(jc, "name", cp);
    if (!name.is_string()) schema_error(cp + "/name", "expected a string");
    spec.name = name.get<std::string>();
    spec.vertices = detail::as_index(detail::member(jc, "vertices", cp), cp + "/vertices");
    if (spec.vertices == 0) schema_error(cp + "/vertices", "a component needs at least one vertex");
    const auto& edges = detail::member(jc, "edges", cp);
    if (!edges.is_array()) schema_error(cp + "/edges", "expected an array");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto ep = cp + "/edges/" + std::to_string(e);
      const auto& je = edges[e];
      if (!je.is_array() || je.size() != 3) schema_error(ep, "expected [u, v, letter]");
      auto u = detail::as_index(je[0], ep + "/0");
      auto v = detail::as_index(je[1], ep + "/1");
      if (u >= spec.vertices || v >= spec.vertices) schema_error(ep, "vertex id out of range");
      if (!je[2].is_string()) schema_error(ep + "/2", "expected a letter");
      Letter l;
      try {
        l = a.parse_letter(je[2].get<std::string>());
      } catch (const Error& err) {
        fail(err.kind(), ep + "/2: " + err.what());
      }
      spec.edges.push_back({u, v, l});
    }
    specs.push_back(std::move(spec));
  }
  return LabeledGraph(a, specs);
}

inline LoadedGraph load_graph(const json& doc) {
  LoadedGraph out;
  out.raw = graph_from_json(doc);
  out.folding_witness = out.raw.folding_witness();
  if (out.folding_witness) {
    out.was_folded = false;
    auto f = fold(out.raw);
    out.graph = std::move(f.graph);
    out.merged_vertices = f.merged_vertices;
  } else {
    out.graph = out.raw;
  }
  // Rejects label-isomorphic components.
  AutomorphismGroup check(out.graph);
  (void)check;
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}

inline LoadedGraph parse_graph_file(const std::string& path) { return load_graph(read_json_file(path)); }

// Graph back to the input schema. Each edge is written once, from its
// even-numbered dart, with component-local vertex ids.
inline json graph_to_json(const LabeledGraph& g) {
  const auto& a = g.alphabet();
  json doc;
  doc["alphabet"] = a.generators();
  if (!a.default_order()) {
    json ord = json::array();
    for (auto l : a.ordered_letters()) ord.push_back(a.name(l));
    doc["letter_order"] = ord;
  }
  json comps = json::array();
  for (const auto& comp : g.components()) {
    json jc;
    jc["name"] = comp.name;
    jc["vertices"] = comp.vertices.size();
    json edges = json::array();
    for (auto d : comp.darts) {
      if (d % 2) continue;
      const auto& dt = g.dart(d);
      edges.push_back({g.local_index(dt.source), g.local_index(dt.target), a.name(dt.label)});
    }
    jc["edges"] = edges;
    comps.push_back(jc);
  }
  doc["components"] = comps;
  return doc;
}

inline json ball_to_json(const CayleyBall& b) {
  const auto& a = b.alphabet();
  json vs = json::array();
  for (CayleyBall::Index v = 0; v < b.size(); ++v) vs.push_back({{"word", a.format(b.word(v))}, {"layer", b.layer(v)}});
  json es = json::array();
  for (const auto& [i, j, s] : b.edges()) es.push_back({i, j, a.name(s)});
  return {{"schema", 1},
          {"vertices", vs},
          {"edges", es},
          {"layer_sizes", b.layer_sizes()},
          {"metadata", {{"R", b.radius()}, {"presentation_hash", b.word_problem().hash()}}}};
}

}  // namespace gsc

#endif  // GSC_IO_HPP

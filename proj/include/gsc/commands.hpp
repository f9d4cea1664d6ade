#ifndef GSC_COMMANDS_HPP
#define GSC_COMMANDS_HPP

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsc/boundary.hpp"
#include "gsc/cayley.hpp"
#include "gsc/coned_off.hpp"
#include "gsc/io.hpp"
#include "gsc/small_cancellation.hpp"

namespace gsc {

struct RunConfig {
  std::string command;
  std::string input;
  std::string lambda = "1/10";
  std::size_t radius = 4;
  std::size_t depth = 12;
  std::size_t translates = 2;
  std::optional<std::size_t> cut;
  std::size_t overlap = 4;
  std::string format = "text";
  std::optional<std::string> dot;
  std::size_t cap_cycles = 100000;
  std::size_t cap_pieces = 4096;
  std::size_t cap_ball = 2000000;
  bool deterministic = false;
  std::vector<std::string> words;  // positional arguments
  std::size_t samples = 0;         // 0 = exhaustive δ
  std::uint64_t seed = 1;
  std::optional<std::string> target;
  bool sweep = false;
};

struct Outcome {
  json doc;
  int exit_code = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "pieces",    "girth", "fineness", "relators",
                                              "ball",     "dist",      "dy",    "decompose", "delta",
                                              "copies",   "bigons",    "lexleast", "tails", "report-all"};
  return names;
}

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::unknown_letter:
    case ErrorKind::duplicate_component:
    case ErrorKind::malformed_path:
    case ErrorKind::precondition:
      return 2;
    case ErrorKind::invariant_violation:
      return 1;
    default:
      return 3;
  }
}

inline json error_json(const Error& e) {
  json j{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (auto* u = dynamic_cast<const UncertifiedDistance*>(&e)) j["ball_value_upper_bound"] = u->ball_value();
  if (auto* b = dynamic_cast<const BallTooLarge*>(&e)) j["layer_sizes"] = b->layer_sizes();
  if (auto* f = dynamic_cast<const FinenessCapExceeded*>(&e)) j["edge"] = f->edge();
  if (auto* o = dynamic_cast<const EnumerationOverflow*>(&e)) j["partial_count"] = o->partial_count();
  return j;
}

namespace detail {

inline std::string vertex_name(const LabeledGraph& g, VertexId v) {
  return g.component(g.component_of(v)).name + ":" + std::to_string(g.local_index(v));
}

inline json piece_json(const LabeledGraph& g, const Piece& p) {
  return {{"label", g.alphabet().format(p.label)},
          {"length", p.label.size()},
          {"p_start", vertex_name(g, p.p.start)},
          {"q_start", vertex_name(g, p.q.start)}};
}

inline json girth_json(const std::optional<std::size_t>& g) {
  return g ? json(*g) : json("infinite");
}

// Shared state built lazily by the commands.
class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) {
    loaded_ = parse_graph_file(cfg.input);
    lambda_ = Rational::parse(cfg.lambda);
    check_lambda(lambda_);
    if (!loaded_.was_folded)
      notes_.push_back("input graph was not folded; " + std::to_string(loaded_.merged_vertices) +
                       " vertex identifications applied");
  }

  const RunConfig& cfg() const { return cfg_; }
  const LoadedGraph& loaded() const { return loaded_; }
  const LabeledGraph& graph() const { return loaded_.graph; }
  const Alphabet& alphabet() const { return loaded_.graph.alphabet(); }
  Rational lambda() const { return lambda_; }
  std::vector<std::string>& notes() { return notes_; }

  const Presentation& presentation() {
    if (!pres_) pres_.emplace(loaded_.graph, lambda_, PresentationOptions{cfg_.cap_pieces, cfg_.cap_cycles});
    return *pres_;
  }
  const WordProblem& word_problem() {
    if (!wp_) wp_.emplace(presentation());
    return *wp_;
  }
  const CayleyBall& ball() {
    if (!ball_) ball_.emplace(build_ball(word_problem(), cfg_.radius, cfg_.cap_ball));
    return *ball_;
  }
  const ConedBall& coned() {
    if (!coned_) coned_.emplace(ball(), graph());
    return *coned_;
  }
  const FinenessReport& fineness() {
    if (!fin_) fin_ = fineness_constant(graph(), cfg_.cap_cycles);
    return *fin_;
  }

  Index locate(const std::string& text) {
    auto w = alphabet().parse_word(text);
    auto v = ball().locate(w);
    if (!v)
      fail(ErrorKind::insufficient_radius,
           "'" + text + "' is outside the radius-" + std::to_string(cfg_.radius) + " ball");
    return *v;
  }
  std::string name(Index v) { return alphabet().format(ball().word(v)); }

 private:
  RunConfig cfg_;
  LoadedGraph loaded_;
  Rational lambda_;
  std::vector<std::string> notes_;
  std::optional<Presentation> pres_;
  std::optional<WordProblem> wp_;
  std::optional<CayleyBall> ball_;
  std::optional<ConedBall> coned_;
  std::optional<FinenessReport> fin_;
};

inline void need_words(const RunConfig& cfg, std::size_t n) {
  if (cfg.words.size() != n)
    fail(ErrorKind::precondition, cfg.command + " takes " + std::to_string(n) + " word argument" +
                                      (n == 1 ? "" : "s") + ", got " + std::to_string(cfg.words.size()));
}

// ---- individual commands; each returns (payload, verdict ok)

inline std::pair<json, bool> cmd_validate(Session& s) {
  const auto& raw = s.loaded().raw;
  auto rep = verify_Cprime(raw, s.lambda(), s.cfg().cap_pieces);
  auto components = [&](const LabeledGraph& g, const CancellationReport& r) {
    json comps = json::array();
    for (const auto& c : r.components) {
      json jc{{"name", c.name}, {"girth", girth_json(c.girth)}, {"max_piece", c.max_piece}, {"pass", c.pass}};
      if (c.witness) jc["witness"] = piece_json(g, *c.witness);
      comps.push_back(jc);
    }
    return comps;
  };
  json out{{"lambda", rep.lambda.str()}, {"verdict", rep.pass ? "pass" : "fail"}, {"folded", rep.folded},
           {"components", components(raw, rep)}};
  if (rep.folding_witness) {
    // the folded graph is still worth reporting; the verdict stays fail
    auto folded = verify_Cprime(s.graph(), s.lambda(), s.cfg().cap_pieces);
    out["after_folding"] = {{"verdict", folded.pass ? "pass" : "fail"}, {"components", components(s.graph(), folded)}};
    const auto& a = raw.dart(rep.folding_witness->first);
    const auto& b = raw.dart(rep.folding_witness->second);
    out["folding_witness"] = {{"vertex", vertex_name(raw, a.source)},
                              {"label", raw.alphabet().name(a.label)},
                              {"targets", {vertex_name(raw, a.target), vertex_name(raw, b.target)}}};
  }
  auto& f = s.fineness();
  out["K0"] = f.K0;
  out["K"] = index_bound(f.K0);
  out["dehn_certified"] = rep.passes_at(Rational(1, 6));
  out["piece_convention"] =
      "a path and a second location with the same label form a piece unless an automorphism maps one onto the "
      "other; only the identity-related pair of a path with itself is excluded";
  return {out, rep.pass};
}

inline std::pair<json, bool> cmd_pieces(Session& s) {
  const auto& p = s.presentation();
  auto pcs = enumerate_pieces(s.graph(), p.automorphisms(), s.cfg().cap_pieces);
  json comps = json::array();
  for (const auto& c : pcs) {
    json jc{{"name", s.graph().component(c.component).name}, {"max_piece", c.max_length}};
    if (c.witness) jc["witness"] = piece_json(s.graph(), *c.witness);
    comps.push_back(jc);
  }
  return {{{"components", comps}, {"automorphisms", p.automorphisms().order()}}, true};
}

inline std::pair<json, bool> cmd_girth(Session& s) {
  json comps = json::array();
  for (std::size_t c = 0; c < s.graph().component_count(); ++c)
    comps.push_back({{"name", s.graph().component(c).name}, {"girth", girth_json(girth(s.graph(), c))}});
  return {{{"components", comps}}, true};
}

inline std::pair<json, bool> cmd_fineness(Session& s) {
  const auto& f = s.fineness();
  json hist = json::object();
  for (auto [n, e] : f.histogram) hist[std::to_string(n)] = e;
  return {{{"K0", f.K0}, {"K", index_bound(f.K0)}, {"cycles", f.cycles}, {"histogram", hist}, {"cap", f.cap}},
          true};
}

inline std::pair<json, bool> cmd_relators(Session& s) {
  const auto& wp = s.word_problem();
  json rs = json::array();
  for (const auto& r : wp.relator_list())
    rs.push_back({{"component", s.graph().component(r.component).name},
                  {"word", s.alphabet().format(r.word)},
                  {"length", r.length()}});
  return {{{"count", rs.size()}, {"relators", rs}, {"presentation_hash", wp.hash()}}, true};
}

inline std::pair<json, bool> cmd_ball(Session& s) {
  const auto& b = s.ball();
  if (s.cfg().dot) {
    std::ofstream out(*s.cfg().dot);
    if (!out) fail(ErrorKind::parse, "cannot write '" + *s.cfg().dot + "'");
    out << b.to_dot();
  }
  auto j = ball_to_json(b);
  j.erase("schema");
  return {j, true};
}

inline std::pair<json, bool> cmd_dist(Session& s) {
  need_words(s.cfg(), 2);
  auto x = s.locate(s.cfg().words[0]), y = s.locate(s.cfg().words[1]);
  auto gs = all_geodesics(s.ball(), x, y);
  auto lex = lex_least_geodesic(s.ball(), x, y);
  return {{{"x", s.name(x)},
           {"y", s.name(y)},
           {"d_X", gs.length},
           {"geodesics", gs.words.size()},
           {"lexleast", s.alphabet().format(lex.word)}},
          true};
}

inline std::pair<json, bool> cmd_dy(Session& s) {
  need_words(s.cfg(), 2);
  auto x = s.locate(s.cfg().words[0]), y = s.locate(s.cfg().words[1]);
  auto d = s.coned().coned_distance(x, y);
  return {{{"x", s.name(x)}, {"y", s.name(y)}, {"d_Y", d}, {"certified", true}}, true};
}

inline std::pair<json, bool> cmd_decompose(Session& s) {
  need_words(s.cfg(), 2);
  auto x = s.locate(s.cfg().words[0]), y = s.locate(s.cfg().words[1]);
  auto geo = lex_least_geodesic(s.ball(), x, y);
  auto dec = decompose(s.coned(), x, geo.word);
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    Word sub(geo.word.begin() + b.begin, geo.word.begin() + b.end);
    json jb{{"begin", b.begin}, {"end", b.end}, {"word", s.alphabet().format(sub)},
            {"kind", b.lone_edge ? "lone-edge" : "relator"}};
    if (!b.lone_edge) {
      jb["component"] = s.graph().component(b.component).name;
      jb["start_vertex"] = vertex_name(s.graph(), b.start_vertex);
      if (b.copy) jb["copy"] = *b.copy;
    }
    blocks.push_back(jb);
  }
  json out{{"x", s.name(x)}, {"y", s.name(y)}, {"geodesic", s.alphabet().format(geo.word)},
           {"k", dec.k()}, {"breakpoints", dec.breakpoints}, {"blocks", blocks}};
  auto dy = s.coned().distances_from(x)[y];
  out["d_Y"] = s.coned().certified(x, y, dy) ? json(dy) : json("uncertified");
  return {out, true};
}

inline std::pair<json, bool> cmd_delta(Session& s) {
  auto r = estimate_delta(s.coned(), s.cfg().samples, s.cfg().seed);
  json wit = json::array();
  for (auto v : r.witness) wit.push_back(s.name(v));
  return {{{"delta", r.delta.str()},
           {"points", r.points},
           {"quadruples", r.quadruples},
           {"exhaustive", r.exhaustive},
           {"core_radius", r.core_radius},
           {"witness", wit}},
          true};
}

inline std::pair<json, bool> cmd_copies(Session& s) {
  const auto& reg = s.coned().registry();
  json cs = json::array();
  for (const auto& c : reg.copies) {
    json img = json::array();
    for (auto v : c.image) img.push_back(s.name(v));
    cs.push_back({{"component", s.graph().component(c.component).name}, {"anchor", s.name(c.anchor)}, {"image", img}});
  }
  return {{{"count", reg.copies.size()}, {"truncated", reg.truncated}, {"duplicates", reg.duplicates}, {"copies", cs}},
          true};
}

inline std::pair<json, bool> cmd_bigons(Session& s) {
  if (!s.presentation().cancellation().pass)
    fail(ErrorKind::precondition, "the bigon bound needs a C'(" + s.lambda().str() + ") certificate");
  auto r = check_bigon_bound(s.coned(), s.lambda());
  json vs = json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"from", s.name(v.from)}, {"to", s.name(v.to)}, {"p", s.alphabet().format(v.p)},
                  {"q", s.alphabet().format(v.q)}, {"cycle_length", v.cycle_length}, {"min_side", v.min_side}});
  return {{{"lambda", s.lambda().str()},
           {"geodesic_pairs", r.pairs},
           {"contours_checked", r.checked},
           {"ladders_skipped", r.ladders},
           {"violations", vs},
           {"verdict", r.violations.empty() ? "pass" : "fail"}},
          r.violations.empty()};
}

inline std::pair<json, bool> cmd_lexleast(Session& s) {
  need_words(s.cfg(), 1);
  auto t = s.locate(s.cfg().words[0]);
  auto lex = lex_least_geodesic(s.ball(), t);
  json cert = json::array();
  for (std::size_t i = 0; i < lex.certificate.size(); ++i) {
    json rej = json::array();
    for (auto l : lex.certificate[i].rejected) rej.push_back(s.alphabet().name(l));
    cert.push_back({{"position", i}, {"chosen", s.alphabet().name(lex.certificate[i].chosen)}, {"rejected", rej}});
  }
  return {{{"target", s.name(t)}, {"word", s.alphabet().format(lex.word)}, {"length", lex.word.size()},
           {"certificate", cert}},
          true};
}

inline std::pair<json, bool> cmd_tails(Session& s) {
  CensusConfig cc;
  cc.depth = s.cfg().depth;
  cc.translates = s.cfg().translates;
  cc.cut = s.cfg().cut;
  cc.overlap = s.cfg().overlap;
  cc.ball_cap = s.cfg().cap_ball;
  if (s.cfg().target) cc.target = s.alphabet().parse_word(*s.cfg().target);
  auto c = tail_class_census(s.presentation(), s.word_problem(), cc);
  const auto& a = s.alphabet();
  json members = json::array();
  for (const auto& m : c.members)
    members.push_back({{"translate", a.format(m.translate)}, {"word", a.format(m.word)},
                       {"raw_class", m.raw_class}, {"closure_class", m.closure_class}});
  json out{{"target", a.format(c.target)},
           {"K0", c.K0},
           {"K", c.K},
           {"classes_raw", c.classes_raw},
           {"classes_closure", c.classes_closure},
           {"skipped", c.skipped},
           {"verdict", c.verdict() ? "pass" : "fail"},
           {"bound", std::to_string(c.classes_closure) + (c.verdict() ? " <= " : " > ") + std::to_string(c.K)},
           {"window", {{"cut", c.window.cut}, {"overlap", c.window.overlap}}},
           {"depth", s.cfg().depth},
           {"translates", s.cfg().translates},
           {"tree_regime", c.tree_regime},
           {"members", members}};
  if (s.cfg().sweep) {
    json sw = json::array();
    for (const auto& p : c.sweep)
      sw.push_back({{"cut", p.cut}, {"overlap", p.overlap}, {"classes_raw", p.classes_raw},
                    {"classes_closure", p.classes_closure}});
    out["sweep"] = sw;
  }
  return {out, c.verdict()};
}

// decompose(·).k against d_Y over every certified pair and every geodesic.
inline json dy_crosscheck(const ConedBall& cb, std::size_t* mismatches) {
  const auto& b = cb.ball();
  std::size_t pairs = 0, geodesics = 0, bad = 0;
  for (Index x = 0; x < b.size(); ++x) {
    auto dx = b.distances_from(x);
    auto dy = cb.distances_from(x);
    for (Index y = 0; y < b.size(); ++y) {
      if (!b.certified_pair(x, y, dx[y]) || !cb.certified(x, y, dy[y])) continue;
      ++pairs;
      for (const auto& w : all_geodesics(b, x, y).words) {
        ++geodesics;
        try {
          if (decompose(cb, x, w).k() != dy[y]) ++bad;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::invariant_violation) throw;
          ++bad;
        }
      }
    }
  }
  *mismatches = bad;
  return {{"pairs", pairs}, {"geodesics", geodesics}, {"mismatches", bad}};
}

inline std::pair<json, bool> cmd_report_all(Session& s, int& worst_error) {
  json out = json::object();
  bool ok = true;
  auto section = [&](const std::string& name, const std::function<std::pair<json, bool>()>& f) {
    try {
      auto [j, pass] = f();
      out[name] = j;
      ok = ok && pass;
    } catch (const Error& e) {
      out[name] = {{"error", error_json(e)}};
      worst_error = std::max(worst_error, exit_code_for(e.kind()));
    }
  };
  section("validate", [&] { return cmd_validate(s); });
  section("fineness", [&] { return cmd_fineness(s); });
  section("relators", [&] { return cmd_relators(s); });
  section("ball", [&]() -> std::pair<json, bool> {
    const auto& b = s.ball();
    return {{{"R", b.radius()}, {"size", b.size()}, {"layer_sizes", b.layer_sizes()},
             {"presentation_hash", b.word_problem().hash()}},
            true};
  });
  section("copies", [&]() -> std::pair<json, bool> {
    const auto& reg = s.coned().registry();
    return {{{"count", reg.copies.size()}, {"truncated", reg.truncated}, {"duplicates", reg.duplicates}}, true};
  });
  section("dy_crosscheck", [&]() -> std::pair<json, bool> {
    std::size_t bad = 0;
    auto j = dy_crosscheck(s.coned(), &bad);
    return {j, bad == 0};
  });
  section("delta", [&] { return cmd_delta(s); });
  section("bigons", [&]() -> std::pair<json, bool> {
    if (Rational(1, 2) - Rational(2) * s.lambda() < Rational(3) * s.lambda())
      return {{{"skipped", "requires lambda <= 1/10"}}, true};
    return cmd_bigons(s);
  });
  section("segments", [&]() -> std::pair<json, bool> {
    const auto& b = s.ball();
    auto r = check_segment_coincidence(b);
    json v = json::array();
    for (const auto& x : r.violations)
      v.push_back({{"targets", {b.alphabet().format(b.word(x.first)), b.alphabet().format(b.word(x.second))}},
                   {"x", b.alphabet().format(b.word(x.x))},
                   {"y", b.alphabet().format(b.word(x.y))}});
    return {{{"targets", r.targets}, {"segments", r.segments}, {"violations", v}}, r.violations.empty()};
  });
  section("tails", [&] { return cmd_tails(s); });
  out["verdict"] = ok ? "pass" : "fail";
  return {out, ok};
}

}  // namespace detail

inline json config_json(const RunConfig& c) {
  json j{{"input", c.input},       {"lambda", c.lambda},       {"radius", c.radius},
         {"depth", c.depth},       {"translates", c.translates}, {"overlap", c.overlap},
         {"cap_cycles", c.cap_cycles}, {"cap_pieces", c.cap_pieces}, {"cap_ball", c.cap_ball},
         {"words", c.words}};
  j["cut"] = c.cut ? json(*c.cut) : json(nullptr);
  if (c.samples) {
    j["samples"] = c.samples;
    j["seed"] = c.seed;
  }
  if (c.target) j["target"] = *c.target;
  return j;
}

// Runs one command. Errors become an "error" member and an exit code.
inline Outcome run(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  o.doc = {{"schema", 1}, {"command", cfg.command}, {"config", config_json(cfg)}};
  try {
    if (std::find(command_names().begin(), command_names().end(), cfg.command) == command_names().end())
      fail(ErrorKind::precondition, "unknown command '" + cfg.command + "'");
    detail::Session s(cfg);
    std::pair<json, bool> res;
    int worst = 0;
    const auto& c = cfg.command;
    if (c == "validate") res = detail::cmd_validate(s);
    else if (c == "pieces") res = detail::cmd_pieces(s);
    else if (c == "girth") res = detail::cmd_girth(s);
    else if (c == "fineness") res = detail::cmd_fineness(s);
    else if (c == "relators") res = detail::cmd_relators(s);
    else if (c == "ball") res = detail::cmd_ball(s);
    else if (c == "dist") res = detail::cmd_dist(s);
    else if (c == "dy") res = detail::cmd_dy(s);
    else if (c == "decompose") res = detail::cmd_decompose(s);
    else if (c == "delta") res = detail::cmd_delta(s);
    else if (c == "copies") res = detail::cmd_copies(s);
    else if (c == "bigons") res = detail::cmd_bigons(s);
    else if (c == "lexleast") res = detail::cmd_lexleast(s);
    else if (c == "tails") res = detail::cmd_tails(s);
    else res = detail::cmd_report_all(s, worst);
    for (auto& [k, v] : res.first.items()) o.doc[k] = v;
    if (!s.notes().empty()) o.doc["notes"] = s.notes();
    o.exit_code = !res.second ? 1 : worst;
  } catch (const Error& e) {
    o.doc["error"] = error_json(e);
    o.exit_code = exit_code_for(e.kind());
  }
  if (!cfg.deterministic)
    o.doc["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

// Plain "path: value" lines for the text format.
inline void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace gsc

#endif  // GSC_COMMANDS_HPP

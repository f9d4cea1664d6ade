// gsc: command-line front end for graphical small cancellation computations.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsc/commands.hpp"

int main(int argc, char** argv) {
  gsc::RunConfig cfg;
  CLI::App app{"gsc - graphical small cancellation toolkit"};
  app.add_option("command", cfg.command, "validate | pieces | girth | fineness | relators | ball | dist | dy | "
                                         "decompose | delta | copies | bigons | lexleast | tails | report-all")
      ->required();
  app.add_option("words", cfg.words, "words, whitespace-separated letters with ^-1 inverses (quote each)");
  app.add_option("--input", cfg.input, "graph file (JSON)")->required();
  app.add_option("--lambda", cfg.lambda, "small cancellation constant p/q")->capture_default_str();
  app.add_option("--radius", cfg.radius, "Cayley ball radius R")->capture_default_str();
  app.add_option("--depth", cfg.depth, "census depth D")->capture_default_str();
  app.add_option("--translates", cfg.translates, "census translate radius r")->capture_default_str();
  std::size_t cut = 0;
  auto* cut_opt = app.add_option("--cut", cut, "tail window prefix cut c (default 2r + largest component diameter)");
  app.add_option("--overlap", cfg.overlap, "tail window overlap m")->capture_default_str();
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  std::string dot;
  auto* dot_opt = app.add_option("--dot", dot, "write the ball as DOT to this path");
  app.add_option("--cap-cycles", cfg.cap_cycles, "cycle enumeration cap")->capture_default_str();
  app.add_option("--cap-pieces", cfg.cap_pieces, "piece length cap")->capture_default_str();
  app.add_option("--cap-ball", cfg.cap_ball, "ball vertex cap")->capture_default_str();
  app.add_flag("--deterministic", cfg.deterministic, "omit timings so output is byte-stable");
  app.add_option("--samples", cfg.samples, "delta: sample this many quadruples instead of all");
  app.add_option("--seed", cfg.seed, "delta: sampling seed")->capture_default_str();
  app.add_flag("--exhaustive", "delta: scan every quadruple (the default)");
  std::string target;
  auto* target_opt = app.add_option("--target", target, "tails: census target word");
  app.add_flag("--sweep", cfg.sweep, "tails: include the window sensitivity sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*cut_opt) cfg.cut = cut;
  if (*dot_opt) cfg.dot = dot;
  if (*target_opt) cfg.target = target;
  for (const auto& c : {cfg.cap_cycles, cfg.cap_pieces, cfg.cap_ball})
    if (c == 0) {
      std::cerr << "caps must be positive\n";
      return 2;
    }

  auto out = gsc::run(cfg);
  if (cfg.format == "json") {
    std::cout << out.doc.dump(2) << "\n";
  } else {
    gsc::render_text(out.doc, "", std::cout);
  }
  if (out.doc.contains("error")) std::cerr << "error: " << out.doc["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}

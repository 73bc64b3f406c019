#include "rainbow/cli.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "rainbow/diam2.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/random.hpp"
#include "rainbow/report.hpp"
#include "rainbow/verify.hpp"

namespace rainbow::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Common {
  std::string format = "text";
  std::string out_file;
};

void emit(const RunReport& report, const Common& common, std::ostream& out) {
  out << (common.format == "structured" ? render_structured(report) : render_text(report));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << content;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConstructionFailure:
    case ErrorCode::GenerationFailed:
      return kFailure;
    default:
      return kInputError;
  }
}

std::optional<std::size_t> guarantee_for(const Diam2Classification& cls) {
  if (std::holds_alternative<CompleteLike>(cls)) return 1;
  if (const auto* b = std::get_if<BridgedCutVertex>(&cls)) return b->bridge_count + 2;
  if (std::holds_alternative<BridgelessCutVertex>(cls)) return 3;
  if (std::holds_alternative<TwoConnected>(cls)) return 5;
  return std::nullopt;
}

bool is_star(const Graph& g) {
  if (g.order() < 2 || g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) return true;
  }
  return false;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& graph_file, const Common& common, std::ostream& out) {
  auto start = Clock::now();
  Graph g = read_edge_list_file(graph_file);
  RunReport report;
  report.command = "analyze";
  report.input = summarize(g);
  Diam2Classification cls = classify(g);
  json o;
  auto guarantee = guarantee_for(cls);
  o["guarantee"] = guarantee ? json(*guarantee) : json(nullptr);
  if (const auto* b = std::get_if<BridgedCutVertex>(&cls)) {
    o["cut_vertex"] = b->cut_vertex;
    o["bridge_count"] = b->bridge_count;
    o["component_count"] = b->component_count;
  } else if (const auto* c = std::get_if<BridgelessCutVertex>(&cls)) {
    o["cut_vertex"] = c->cut_vertex;
    o["component_count"] = c->components.size();
  }
  o["radius"] = radius(g) ? json(*radius(g)) : json(nullptr);
  o["rc_lower_bound"] = is_connected(g) ? json(rc_lower_bound(g)) : json(nullptr);
  const auto& srg = report.input->srg;
  if (srg && srg->mu >= 1 && !is_star(g)) {
    o["srg_guarantee"] = 5;
    o["note"] = "strongly regular with mu >= 1: guarantee 5";
  } else {
    o["srg_guarantee"] = nullptr;
  }
  report.outcome = std::move(o);
  report.timing_ms = elapsed_ms(start);
  emit(report, common, out);
  return kOk;
}

// ---- color -----------------------------------------------------------------

int cmd_color(const std::string& graph_file, const ColorOptions& options, const Common& common, std::ostream& out) {
  auto start = Clock::now();
  Graph g = read_edge_list_file(graph_file);
  RunReport report;
  report.command = "color";
  report.input = summarize(g);
  try {
    ColoringOutcome outcome = color_diam2(g, options);
    report.outcome = outcome_json(g, outcome, common.out_file.empty());
    if (!common.out_file.empty()) {
      std::ostringstream col;
      write_coloring(col, g, outcome.coloring);
      write_file(common.out_file, col.str());
      report.outcome["coloring_file"] = common.out_file;
    }
    report.timing_ms = elapsed_ms(start);
    emit(report, common, out);
    return kOk;
  } catch (const ConstructionFailure& failure) {
    report.outcome = {{"verdict", "ConstructionFailure"},
                      {"failing_pair", {failure.failing_pair().first, failure.failing_pair().second}},
                      {"message", failure.what()}};
    report.timing_ms = elapsed_ms(start);
    emit(report, common, out);
    return kFailure;
  }
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& graph_file, const std::string& coloring_file, bool witnesses, const Common& common,
               std::ostream& out) {
  auto start = Clock::now();
  Graph g = read_edge_list_file(graph_file);
  EdgeColoring col = read_coloring_file(coloring_file, g);
  RunReport report;
  report.command = "verify";
  report.input = summarize(g);
  RainbowCertificate cert = verify_rainbow_connected(g, col, VerifyOptions{.witnesses = witnesses});
  json o;
  o["colors_used"] = col.colors_used();
  o["verdict"] = cert.connected ? "Connected" : "FailingPair";
  if (cert.failing_pair) {
    o["failing_pair"] = {cert.failing_pair->first, cert.failing_pair->second};
  } else {
    o["failing_pair"] = nullptr;
  }
  if (cert.connected && witnesses) {
    json w = json::array();
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) w.push_back({{"pair", {u, v}}, {"path", cert.witness(u, v)}});
    }
    o["witnesses"] = std::move(w);
  }
  report.outcome = std::move(o);
  report.timing_ms = elapsed_ms(start);
  emit(report, common, out);
  return cert.connected ? kOk : kFailure;
}

// ---- exact -----------------------------------------------------------------

int cmd_exact(const std::string& graph_file, const ExactOptions& options, const Common& common, std::ostream& out) {
  auto start = Clock::now();
  Graph g = read_edge_list_file(graph_file);
  RunReport report;
  report.command = "exact";
  report.input = summarize(g);
  RcResult result = exact_rc(g, options);
  report.outcome = rc_result_json(g, result);
  report.outcome["budget"] = options.budget;
  if (!common.out_file.empty() && result.witness) {
    std::ostringstream col;
    write_coloring(col, g, *result.witness);
    write_file(common.out_file, col.str());
    report.outcome["witness_file"] = common.out_file;
  }
  report.timing_ms = elapsed_ms(start);
  emit(report, common, out);
  return result.exact() ? kOk : kBudgetExhausted;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 10, s = 2, t = 3, k = 1, r = 2, leaves = 4, rim = 5;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::size_t max_tries = 10'000;
  bool bridgeless = false;
  bool two_connected = false;
};

struct Made {
  Graph graph;
  std::vector<std::string> header;
};

Made make_graph(const GenArgs& a) {
  auto param = [](const std::string& key, auto value) {
    std::ostringstream s;
    s << key << '=' << value;
    return s.str();
  };
  Made made;
  made.header.push_back("gen family=" + a.family);
  const std::string& f = a.family;
  if (f == "cycle") {
    made.graph = gen::cycle(a.n);
    made.header.push_back(param("n", a.n));
  } else if (f == "complete") {
    made.graph = gen::complete(a.n);
    made.header.push_back(param("n", a.n));
  } else if (f == "bipartite") {
    made.graph = gen::complete_bipartite(a.s, a.t);
    made.header.push_back(param("s", a.s) + " " + param("t", a.t));
  } else if (f == "star") {
    made.graph = gen::star(a.leaves);
    made.header.push_back(param("leaves", a.leaves));
  } else if (f == "petersen") {
    made.graph = gen::petersen();
  } else if (f == "wheel") {
    made.graph = gen::wheel(a.rim);
    made.header.push_back(param("rim", a.rim));
  } else if (f == "path") {
    made.graph = gen::path(a.n);
    made.header.push_back(param("n", a.n));
  } else if (f == "tight") {
    made.graph = gen::tight_example(a.k, a.r);
    made.header.push_back(param("k", a.k) + " " + param("r", a.r));
  } else if (f == "friendship") {
    made.graph = gen::friendship(a.t);
    made.header.push_back(param("t", a.t));
  } else if (f == "random" || f == "cutvertex") {
    gen::RandomSpec spec{a.n, a.p, a.seed, a.max_tries, a.bridgeless, a.two_connected};
    gen::Generated out = f == "random" ? gen::random_diam2(spec) : gen::random_cut_vertex_bridgeless(spec);
    made.graph = std::move(out.graph);
    made.header.push_back(param("n", a.n) + " " + param("p", a.p) + " " + param("seed", a.seed) + " " +
                          param("bridgeless", a.bridgeless) + " " + param("two_connected", a.two_connected) + " " +
                          param("tries", out.tries));
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown family '" + f + "'");
  }
  return made;
}

int cmd_gen(const GenArgs& args, const Common& common, std::ostream& out) {
  Made made = make_graph(args);
  std::ostringstream text;
  write_edge_list(text, made.graph, made.header);
  if (common.out_file.empty()) {
    out << text.str();
  } else {
    write_file(common.out_file, text.str());
  }
  return kOk;
}

// ---- fuzz ------------------------------------------------------------------

struct FuzzArgs {
  GenArgs gen;
  std::size_t count = 100;
  std::size_t n_min = 8;
  std::size_t n_max = 30;
  std::string mode = "validate";
  std::uint64_t budget = 5'000'000;
  std::size_t max_edges = 20;
  std::string findings = "findings.txt";
};

struct FuzzRecord {
  bool generated = false;
  std::string error;
  Graph graph;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  // validate
  bool in_scope = true;
  bool verified = false;
  std::size_t colors = 0;
  std::size_t guarantee = 0;
  std::size_t repair_attempts = 0;
  // hunt-rc5
  std::optional<RcResult> rc;
};

GenArgs task_args(const FuzzArgs& fa, std::size_t index) {
  GenArgs a = fa.gen;
  const std::size_t span = fa.n_max >= fa.n_min ? fa.n_max - fa.n_min + 1 : 1;
  a.n = fa.n_min + index % span;
  a.seed = SplitMix64::derive(fa.gen.seed, index);
  if (a.family == "tight") {
    a.k = 1 + index % 3;
    a.r = 2 + (index / 3) % 2;
  } else if (a.family == "bipartite") {
    a.s = 2;
    a.t = std::max<std::size_t>(a.n, 2);
  } else if (a.family == "friendship") {
    a.t = std::max<std::size_t>(a.n, 2);
  }
  return a;
}

int cmd_fuzz(const FuzzArgs& fa, const Common& common, std::ostream& out) {
  auto start = Clock::now();
  if (fa.mode != "validate" && fa.mode != "hunt-rc5") throw Error(ErrorCode::InvalidSpec, "unknown mode " + fa.mode);
  const bool hunt = fa.mode == "hunt-rc5";
  if (hunt) {
    // Findings are append-only; make sure the file exists even when empty.
    std::ofstream touch(fa.findings, std::ios::app);
    if (!touch) throw Error(ErrorCode::ParseError, "cannot open findings file " + fa.findings);
  }

  std::vector<FuzzRecord> records(fa.count);
  const auto count = static_cast<std::int64_t>(fa.count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    FuzzRecord& rec = records[i];
    GenArgs a = task_args(fa, static_cast<std::size_t>(i));
    rec.seed = a.seed;
    rec.n = a.n;
    try {
      rec.graph = make_graph(a).graph;
      rec.generated = true;
    } catch (const Error& e) {
      rec.error = e.what();
      continue;
    }
    if (hunt) {
      ExactOptions eo;
      eo.budget = fa.budget;
      eo.max_edges = fa.max_edges;
      try {
        rec.rc = exact_rc(rec.graph, eo);
      } catch (const Error& e) {
        rec.error = e.what();
      }
      continue;
    }
    try {
      ColoringOutcome outcome = color_diam2(rec.graph);
      // Independent re-check with witness validation.
      auto cert = verify_rainbow_connected(rec.graph, outcome.coloring, VerifyOptions{.witnesses = true});
      rec.verified = cert.connected && certificate_valid(rec.graph, outcome.coloring, cert);
      rec.colors = outcome.colors_used;
      rec.guarantee = outcome.guarantee;
      rec.repair_attempts = outcome.provenance.repair_attempts;
    } catch (const ConstructionFailure& e) {
      rec.error = e.what();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OutOfScopeGraph) {
        rec.in_scope = false;
      } else {
        rec.error = e.what();
      }
    }
  }

  RunReport report;
  report.command = "fuzz";
  report.seed = fa.gen.seed;
  json o;
  o["mode"] = fa.mode;
  o["family"] = fa.gen.family;
  o["count"] = fa.count;
  std::size_t generated = 0, generation_failed = 0;
  json errors = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].generated) {
      ++generated;
    } else {
      ++generation_failed;
    }
    if (!records[i].error.empty()) errors.push_back({{"index", i}, {"seed", records[i].seed}, {"error", records[i].error}});
  }
  o["generated"] = generated;
  o["generation_failed"] = generation_failed;

  if (!hunt) {
    std::size_t verified = 0, out_of_scope = 0, over_budget = 0, repair_activations = 0, max_colors = 0;
    std::map<std::string, std::size_t> histogram;
    for (const auto& rec : records) {
      if (!rec.generated) continue;
      if (!rec.in_scope) {
        ++out_of_scope;
        continue;
      }
      if (!rec.error.empty()) continue;
      verified += rec.verified ? 1 : 0;
      over_budget += rec.colors > rec.guarantee ? 1 : 0;
      repair_activations += rec.repair_attempts > 0 ? 1 : 0;
      max_colors = std::max(max_colors, rec.colors);
      ++histogram[std::to_string(rec.colors)];
    }
    o["verified"] = verified;
    o["out_of_scope"] = out_of_scope;
    o["over_guarantee"] = over_budget;
    o["repair_activations"] = repair_activations;
    o["max_colors"] = max_colors;
    o["colors_histogram"] = histogram;
    o["failures"] = errors;
  } else {
    std::size_t exact = 0, bounds = 0, findings = 0, max_rc = 0;
    std::map<std::string, std::size_t> histogram;
    std::ofstream file(fa.findings, std::ios::app);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      if (!rec.rc) continue;
      if (rec.rc->exact()) {
        ++exact;
        max_rc = std::max(max_rc, rec.rc->value());
        ++histogram[std::to_string(rec.rc->value())];
      } else {
        ++bounds;
      }
      if (rec.rc->lower >= 5) {
        ++findings;
        std::ostringstream entry;
        write_edge_list(entry, rec.graph,
                        {"finding index=" + std::to_string(i) + " seed=" + std::to_string(rec.seed) +
                             " kind=" + (rec.rc->exact() ? "Exact" : "Bounds") + " lower=" + std::to_string(rec.rc->lower) +
                             " upper=" + std::to_string(rec.rc->upper)});
        file << entry.str() << '\n';
      }
    }
    o["exact"] = exact;
    o["bounds"] = bounds;
    o["max_exact_rc"] = max_rc;
    o["rc_histogram"] = histogram;
    o["findings"] = findings;
    o["findings_file"] = fa.findings;
    o["budget"] = fa.budget;
    o["errors"] = errors;
  }
  report.outcome = std::move(o);
  report.timing_ms = elapsed_ms(start);
  emit(report, common, out);

  if (hunt) return kOk;
  bool clean = report.outcome["failures"].empty() && report.outcome["over_guarantee"] == 0 &&
               report.outcome["verified"] == generated - report.outcome["out_of_scope"].get<std::size_t>();
  return clean ? kOk : kFailure;
}

void add_common(CLI::App* sub, Common& common, bool with_out) {
  sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  if (with_out) sub->add_option("--out", common.out_file, "Output file");
}

void add_gen_options(CLI::App* sub, GenArgs& a) {
  sub->add_option("--n", a.n, "Vertex count");
  sub->add_option("--s", a.s, "Bipartite side A");
  sub->add_option("--t", a.t, "Bipartite side B / friendship triangles");
  sub->add_option("--k", a.k, "Pendant count (tight example)");
  sub->add_option("--r", a.r, "Edge count (tight example)");
  sub->add_option("--leaves", a.leaves, "Star leaves");
  sub->add_option("--rim", a.rim, "Wheel rim length");
  sub->add_option("--p", a.p, "Edge probability");
  sub->add_option("--seed", a.seed, "Random seed");
  sub->add_option("--max-tries", a.max_tries, "Rejection sampling limit");
  sub->add_flag("--bridgeless", a.bridgeless, "Require no bridges");
  sub->add_flag("--two-connected", a.two_connected, "Require 2-connectivity");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow edge colorings of diameter-2 graphs", "rainbow"};
  app.require_subcommand(1);

  Common common;
  std::string graph_file, coloring_file;

  auto* analyze = app.add_subcommand("analyze", "Structural report for a graph");
  analyze->add_option("graph", graph_file, "Edge-list file")->required();
  add_common(analyze, common, false);

  ColorOptions color_opts;
  std::optional<Vertex> center;
  auto* color = app.add_subcommand("color", "Construct and verify a rainbow coloring");
  color->add_option("graph", graph_file, "Edge-list file")->required();
  color->add_option("--center", center, "Center vertex for the 2-connected construction");
  color->add_flag("--all-centers", color_opts.try_all_centers, "Try every center, keep the least that verifies");
  color->add_flag("--witnesses", color_opts.witnesses, "Include a rainbow path for every pair");
  add_common(color, common, true);

  bool verify_witnesses = false;
  auto* verify = app.add_subcommand("verify", "Check a coloring for rainbow connectivity");
  verify->add_option("graph", graph_file, "Edge-list file")->required();
  verify->add_option("coloring", coloring_file, "Coloring file")->required();
  verify->add_flag("--witnesses", verify_witnesses, "Include a rainbow path for every pair");
  add_common(verify, common, false);

  ExactOptions exact_opts;
  auto* exact = app.add_subcommand("exact", "Exact rainbow connection number by exhaustive search");
  exact->add_option("graph", graph_file, "Edge-list file")->required();
  exact->add_option("--budget", exact_opts.budget, "Colorings to test before giving up");
  exact->add_option("--max-colors", exact_opts.max_colors, "Highest color count to search");
  exact->add_option("--max-edges", exact_opts.max_edges, "Largest edge count searched in full");
  bool progress = false;
  exact->add_flag("--progress", progress, "Report progress on stderr");
  add_common(exact, common, true);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Emit a generated graph as an edge list");
  gen->add_option("family", gen_args.family, "cycle|complete|bipartite|star|petersen|wheel|path|tight|friendship|random|cutvertex")
      ->required();
  add_gen_options(gen, gen_args);
  add_common(gen, common, true);

  FuzzArgs fuzz_args;
  fuzz_args.gen.family = "random";
  auto* fuzz = app.add_subcommand("fuzz", "Batch-validate the colorer or hunt for rc >= 5");
  fuzz->add_option("--family", fuzz_args.gen.family, "Generator family");
  fuzz->add_option("--count", fuzz_args.count, "Graphs to generate");
  fuzz->add_option("--n-min", fuzz_args.n_min, "Smallest vertex count");
  fuzz->add_option("--n-max", fuzz_args.n_max, "Largest vertex count");
  fuzz->add_option("--p", fuzz_args.gen.p, "Edge probability");
  fuzz->add_option("--seed", fuzz_args.gen.seed, "Base seed; task i uses a seed derived from (seed, i)");
  fuzz->add_option("--max-tries", fuzz_args.gen.max_tries, "Rejection sampling limit");
  fuzz->add_flag("--bridgeless", fuzz_args.gen.bridgeless, "Require no bridges");
  fuzz->add_flag("--two-connected", fuzz_args.gen.two_connected, "Require 2-connectivity");
  fuzz->add_option("--mode", fuzz_args.mode, "validate|hunt-rc5")->check(CLI::IsMember({"validate", "hunt-rc5"}));
  fuzz->add_option("--budget", fuzz_args.budget, "Exact-search budget per graph (hunt-rc5)");
  fuzz->add_option("--max-edges", fuzz_args.max_edges, "Largest edge count searched in full (hunt-rc5)");
  fuzz->add_option("--findings", fuzz_args.findings, "Append-only findings file (hunt-rc5)");
  add_common(fuzz, common, false);

  std::vector<std::string> storage(args);
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(graph_file, common, out);
    if (*color) {
      color_opts.center = center;
      return cmd_color(graph_file, color_opts, common, out);
    }
    if (*verify) return cmd_verify(graph_file, coloring_file, verify_witnesses, common, out);
    if (*exact) {
      if (progress) {
        exact_opts.progress = [&err](std::uint64_t tested) { err << "tested " << tested << " colorings\n"; };
      }
      return cmd_exact(graph_file, exact_opts, common, out);
    }
    if (*gen) return cmd_gen(gen_args, common, out);
    if (*fuzz) return cmd_fuzz(fuzz_args, common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace rainbow::cli

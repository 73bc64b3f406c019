#include "rainbow/report.hpp"

#include <sstream>

namespace rainbow {

using nlohmann::json;

InputSummary summarize(const Graph& g) {
  InputSummary s;
  s.n = g.order();
  s.m = g.size();
  s.diameter = diameter(g);
  s.bridge_count = bridges(g).size();
  s.cut_vertices = cut_vertices(g);
  s.classification = tag_name(classify(g));
  s.srg = srg_parameters(g);
  return s;
}

namespace {

json summary_json(const InputSummary& s) {
  json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["diameter"] = s.diameter ? json(*s.diameter) : json(nullptr);
  j["bridge_count"] = s.bridge_count;
  j["cut_vertices"] = s.cut_vertices;
  j["classification"] = s.classification;
  if (s.srg) {
    j["srg"] = {{"n", s.srg->n}, {"k", s.srg->k}, {"lambda", s.srg->lambda}, {"mu", s.srg->mu}};
  } else {
    j["srg"] = nullptr;
  }
  return j;
}

InputSummary summary_from_json(const json& j) {
  InputSummary s;
  s.n = j.at("n").get<std::size_t>();
  s.m = j.at("m").get<std::size_t>();
  if (!j.at("diameter").is_null()) s.diameter = j.at("diameter").get<std::size_t>();
  s.bridge_count = j.at("bridge_count").get<std::size_t>();
  s.cut_vertices = j.at("cut_vertices").get<std::vector<Vertex>>();
  s.classification = j.at("classification").get<std::string>();
  if (!j.at("srg").is_null()) {
    const json& p = j.at("srg");
    s.srg = SrgParameters{p.at("n").get<std::size_t>(), p.at("k").get<std::size_t>(), p.at("lambda").get<std::size_t>(),
                          p.at("mu").get<std::size_t>()};
  }
  return s;
}

void render(std::ostringstream& out, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = value.begin(); it != value.end(); ++it) {
    out << pad << it.key() << ':';
    const json& v = it.value();
    if (v.is_object() && !v.empty()) {
      out << '\n';
      render(out, v, indent + 1);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      out << '\n';
      for (const json& item : v) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render(out, item, indent + 2);
        } else {
          out << pad << "  - " << item.dump() << '\n';
        }
      }
    } else if (v.is_string()) {
      out << ' ' << v.get<std::string>() << '\n';
    } else {
      out << ' ' << v.dump() << '\n';
    }
  }
}

}  // namespace

json to_json(const RunReport& report) {
  json j;
  j["command"] = report.command;
  j["input"] = report.input ? summary_json(*report.input) : json(nullptr);
  j["outcome"] = report.outcome;
  j["timing_ms"] = report.timing_ms ? json(*report.timing_ms) : json(nullptr);
  j["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  if (!j.at("input").is_null()) r.input = summary_from_json(j.at("input"));
  r.outcome = j.at("outcome");
  if (!j.at("timing_ms").is_null()) r.timing_ms = j.at("timing_ms").get<double>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::string render_structured(const RunReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  render(out, to_json(report), 0);
  return out.str();
}

json coloring_json(const Graph& g, const EdgeColoring& coloring) {
  json rows = json::array();
  for (EdgeId e = 0; e < g.size(); ++e) rows.push_back({g.edge(e).u, g.edge(e).v, coloring.color_of(e)});
  return rows;
}

json outcome_json(const Graph& g, const ColoringOutcome& outcome, bool include_coloring) {
  json j;
  j["colors_used"] = outcome.colors_used;
  j["guarantee"] = outcome.guarantee;
  j["verdict"] = outcome.certificate.connected ? "Connected" : "FailingPair";
  const Provenance& p = outcome.provenance;
  j["provenance"] = {
      {"construction", p.construction},
      {"center", p.center ? json(*p.center) : json(nullptr)},
      {"flipped", p.flipped},
      {"swapped", p.swapped},
      {"forest_seed", p.forest_seed ? json(*p.forest_seed) : json(nullptr)},
      {"repair_attempts", p.repair_attempts},
      {"exact_fallback", p.exact_fallback},
      {"failed_attempts", p.attempts},
  };
  if (include_coloring) j["coloring"] = coloring_json(g, outcome.coloring);
  if (outcome.certificate.connected && !outcome.certificate.witnesses.empty()) {
    json w = json::array();
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) w.push_back({{"pair", {u, v}}, {"path", outcome.certificate.witness(u, v)}});
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

json rc_result_json(const Graph& g, const RcResult& result) {
  json j;
  j["kind"] = result.exact() ? "Exact" : "Bounds";
  if (result.exact()) {
    j["value"] = result.value();
  } else {
    j["value"] = nullptr;
  }
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["colorings_tested"] = result.colorings_tested;
  j["budget_exhausted"] = result.budget_exhausted;
  j["witness"] = result.witness ? coloring_json(g, *result.witness) : json(nullptr);
  return j;
}

}  // namespace rainbow

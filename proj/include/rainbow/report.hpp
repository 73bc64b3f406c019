#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/diam2.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct InputSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> diameter;  // nullopt when disconnected
  std::size_t bridge_count = 0;
  std::vector<Vertex> cut_vertices;
  std::string classification;
  std::optional<SrgParameters> srg;

  friend bool operator==(const InputSummary&, const InputSummary&) = default;
};

InputSummary summarize(const Graph& g);

/// One CLI invocation. `outcome` is command specific; everything else is
/// shared. Timing is the only field that varies between identical runs.
struct RunReport {
  std::string command;
  std::optional<InputSummary> input;
  nlohmann::json outcome = nlohmann::json::object();
  std::optional<double> timing_ms;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// Indented key/value rendering of the same content.
std::string render_text(const RunReport& report);

/// JSON rendering with sorted keys and two-space indent.
std::string render_structured(const RunReport& report);

nlohmann::json outcome_json(const Graph& g, const ColoringOutcome& outcome, bool include_coloring);
nlohmann::json rc_result_json(const Graph& g, const RcResult& result);
nlohmann::json coloring_json(const Graph& g, const EdgeColoring& coloring);

}  // namespace rainbow

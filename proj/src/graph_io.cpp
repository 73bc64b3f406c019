#include "rainbow/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

// Splits on blanks; anything from '#' on is a comment.
std::vector<std::string_view> split_ws(std::string_view line) {
  line = line.substr(0, line.find('#'));
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + std::string(tok) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = parse_uint(tok, line_no);
  if (v > std::numeric_limits<Vertex>::max() - 1) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex index too large");
  }
  return static_cast<Vertex>(v);
}

bool skippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty();
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> declared_n;
  std::vector<VertexPair> edges;
  std::size_t max_index_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (skippable(tokens)) continue;
    if (tokens.front() == "p") {
      if (declared_n || !edges.empty() || tokens.size() != 3) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": misplaced or malformed p line");
      }
      declared_n = parse_uint(tokens[1], line_no);
      parse_uint(tokens[2], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    Vertex a = parse_vertex(tokens[0], line_no);
    Vertex b = parse_vertex(tokens[1], line_no);
    edges.emplace_back(a, b);
    max_index_plus_one = std::max<std::size_t>(max_index_plus_one, std::max(a, b) + 1);
  }
  return Graph::from_edges(declared_n.value_or(max_index_plus_one), edges);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << '\n';
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
  std::vector<Color> colors(g.size(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 3) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v c'");
    }
    Vertex a = parse_vertex(tokens[0], line_no);
    Vertex b = parse_vertex(tokens[1], line_no);
    std::uint64_t c = parse_uint(tokens[2], line_no);
    if (c == 0 || c > std::numeric_limits<Color>::max()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": color must be a positive integer");
    }
    auto e = g.edge_id(a, b);
    if (!e) {
      throw Error(ErrorCode::ColoringMismatch,
                  "line " + std::to_string(line_no) + ": (" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
    }
    if (colors[*e] != 0) {
      throw Error(ErrorCode::ColoringMismatch, "line " + std::to_string(line_no) + ": edge colored twice");
    }
    colors[*e] = static_cast<Color>(c);
  }
  for (EdgeId e = 0; e < colors.size(); ++e) {
    if (colors[e] == 0) {
      throw Error(ErrorCode::ColoringMismatch,
                  "edge (" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + ") has no color");
    }
  }
  return EdgeColoring(g, std::move(colors));
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g) {
  auto in = open_or_throw(path);
  return read_coloring(in, g);
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& coloring) {
  for (EdgeId e = 0; e < g.size(); ++e) out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << coloring.color_of(e) << '\n';
}

}  // namespace rainbow

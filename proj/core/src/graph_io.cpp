#include "gembench/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <string_view>

#include "gembench/error.hpp"

namespace gembench {
namespace {

std::string_view next_token(std::string_view& rest) {
  const auto begin = rest.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(begin);
  const auto end = rest.find_first_of(" \t\r");
  auto token = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return token;
}

NodeId parse_node(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value >= std::numeric_limits<NodeId>::max()) {
    throw ParseError("invalid node id '" + std::string(token) + "'", line);
  }
  return static_cast<NodeId>(value);
}

double parse_weight(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("invalid weight '" + std::string(token) + "'", line);
  }
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError("edge weight must be positive and finite, got '" + std::string(token) +
                          "' (line " + std::to_string(line) + ")");
  }
  return value;
}

}  // namespace

Graph load_edge_list(const std::filesystem::path& path, std::optional<std::size_t> n_hint,
                     EdgeListLoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path.string());

  GraphBuilder builder(n_hint.value_or(0));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest(line);
    if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
    auto first = next_token(rest);
    if (first.empty()) continue;
    auto second = next_token(rest);
    if (second.empty()) throw ParseError("expected 'u v [w]'", lineno);
    const NodeId u = parse_node(first, lineno);
    const NodeId v = parse_node(second, lineno);
    double w = 1.0;
    if (auto third = next_token(rest); !third.empty()) w = parse_weight(third, lineno);
    if (!next_token(rest).empty()) throw ParseError("too many fields", lineno);
    builder.reserve_nodes(static_cast<std::size_t>(std::max(u, v)) + 1);
    builder.add_edge(u, v, w);
  }
  if (in.bad()) throw IoError("read failure on " + path.string());

  Graph g = builder.build();
  if (report != nullptr) {
    report->lines = lineno;
    report->dropped_self_loops = builder.dropped_self_loops();
    report->duplicate_edges = builder.duplicate_edges();
  }
  return g;
}

void save_edge_list(const Graph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  char buf[64];
  for (const auto& e : graph.edges()) {
    auto res = std::to_chars(buf, buf + sizeof(buf), e.weight);
    out << e.u << ' ' << e.v << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf))
        << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace gembench

#include "sdke/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <vector>

#include "sdke/error.hpp"

namespace sdke {

namespace {

// Splits into trimmed, non-empty, non-comment lines with their line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> two_numbers(std::size_t number,
                                                    std::string_view line) {
  std::uint64_t values[2];
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (auto& value : values) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    const auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p) {
      throw InvalidInput("line " + std::to_string(number) +
                         ": expected two non-negative integers");
    }
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  if (p != end) {
    throw InvalidInput("line " + std::to_string(number) +
                       ": unexpected trailing text");
  }
  return {values[0], values[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InvalidInput("edge list is missing its 'n m' header");
  const auto [n, m] = two_numbers(lines[0].first, lines[0].second);
  if (lines.size() - 1 != m) {
    throw InvalidInput("header announces " + std::to_string(m) +
                       " edges but the file lists " +
                       std::to_string(lines.size() - 1));
  }
  if (n > (std::uint64_t{1} << 31)) throw InvalidInput("vertex count too large");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = two_numbers(lines[i].first, lines[i].second);
    if (u >= n || v >= n) {
      throw InvalidInput("line " + std::to_string(lines[i].first) +
                         ": endpoint out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Matching parse_matching(const Graph& g, std::string_view text) {
  std::vector<Edge> pairs;
  for (const auto& [number, line] : content_lines(text)) {
    const auto [u, v] = two_numbers(number, line);
    if (u >= g.order() || v >= g.order()) {
      throw InvalidInput("line " + std::to_string(number) +
                         ": endpoint out of range");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  Matching m(g.order(), pairs);
  require_matching_of(g, m);
  return m;
}

std::string serialize_matching(const Matching& m) {
  std::string out;
  for (const Edge& e : m.pairs()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g, const SdKePartition* partition,
                       const Matching* matching) {
  if (matching != nullptr) require_matching_of(g, *matching);
  if (partition != nullptr) {
    for (const auto* side : {&partition->sd_vertices, &partition->ke_vertices}) {
      for (Vertex v : *side) {
        if (!g.contains(v)) {
          throw InvalidInput("partition names unknown vertex " + std::to_string(v));
        }
      }
    }
    if (partition->sd_vertices.size() + partition->ke_vertices.size() != g.order()) {
      throw InvalidInput("partition does not cover the graph");
    }
  }

  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=" << quoted(g.label(v));
    if (partition != nullptr) {
      const bool sd = partition->is_sd(v);
      out << ", class=" << (sd ? "\"SD\"" : "\"KE\"")
          << ", style=filled, fillcolor=" << (sd ? "black" : "blue")
          << ", fontcolor=white";
    }
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (matching != nullptr && matching->contains(e)) {
      out << " [color=red, penwidth=3, class=\"matched\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sdke

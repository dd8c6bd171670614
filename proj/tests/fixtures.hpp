#pragma once

// Small hand-built graphs, keeping their original vertex labels.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke::fixtures {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

inline std::vector<std::string> numbered(int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back(std::to_string(i));
  return out;
}

inline LabelPairs concat(LabelPairs a, const LabelPairs& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Vertex id(const Graph& g, const std::string& label) {
  return g.find_label(label);
}

inline std::vector<Vertex> ids(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) out.push_back(id(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::string> labels(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<std::string> out;
  for (Vertex v : vs) out.insert(g.label(v));
  return out;
}

inline Edge edge(const Graph& g, const std::string& a, const std::string& b) {
  return {id(g, a), id(g, b)};
}

inline Matching matching(const Graph& g, const LabelPairs& pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back(edge(g, a, b));
  Matching m(g.order(), edges);
  require_matching_of(g, m);
  return m;
}

// KE graph on 1..8 with two perfect matchings.
inline const LabelPairs kKeOctetM1 = {{"1", "5"}, {"2", "6"}, {"3", "7"}, {"4", "8"}};
inline const LabelPairs kKeOctetM2 = {{"1", "5"}, {"2", "6"}, {"7", "8"}, {"3", "4"}};
inline Graph ke_octet() {
  return Graph::from_labeled(
      numbered(1, 8),
      concat({{"5", "6"}, {"2", "1"}, {"6", "7"}, {"2", "3"}, {"8", "7"}, {"3", "4"}},
             kKeOctetM1));
}

// SD graph on 1..8 with two perfect matchings.
inline const LabelPairs kSdOctetM1 = {{"1", "2"}, {"4", "5"}, {"6", "3"}, {"8", "7"}};
inline const LabelPairs kSdOctetM2 = {{"1", "2"}, {"3", "6"}, {"7", "5"}, {"8", "4"}};
inline Graph sd_octet() {
  return Graph::from_labeled(
      numbered(1, 8),
      concat({{"1", "4"}, {"2", "5"}, {"2", "3"}, {"4", "8"}, {"5", "7"},
              {"5", "6"}, {"5", "8"}, {"4", "7"}},
             kSdOctetM1));
}

// Jposy example on 0..11: SD side 0..9, KE side {10, 11}.
inline const LabelPairs kJposyM = {{"2", "3"}, {"4", "5"}, {"1", "0"},
                                  {"6", "7"}, {"8", "9"}, {"10", "11"}};
inline Graph jposy_graph() {
  return Graph::from_labeled(
      numbered(0, 11),
      concat({{"1", "2"}, {"1", "5"}, {"3", "4"}, {"0", "6"}, {"7", "8"}, {"9", "5"},
              {"9", "4"}, {"0", "5"}, {"5", "8"}, {"2", "0"}, {"10", "8"}},
             kJposyM));
}
inline const std::vector<std::string> kJposyWalk = {
    "9", "8", "5", "4", "3", "2", "0", "1", "2",
    "3", "4", "5", "1", "0", "6", "7", "8", "9"};

// Edge-deletion pair: 9 vertices, the maximum matching leaves 5 free and
// 67 lies in every maximum matching.
inline const LabelPairs kStabilityM = {{"1", "2"}, {"3", "4"}, {"6", "7"}, {"8", "9"}};
inline Graph stability_pair() {
  return Graph::from_labeled(
      numbered(1, 9),
      concat({{"3", "2"}, {"3", "1"}, {"3", "8"}, {"8", "7"}, {"4", "5"}, {"4", "6"}},
             kStabilityM));
}

// Worked determinant example: the Jposy graph extended by 20 vertices. The
// SD side keeps the Jposy labels plus c d e f g d1; the KE side is
// h i j k l m r s t u v w z c1.
inline const std::vector<std::string> kExampleSd = {
    "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11",
    "c", "d", "e", "f", "g", "d1"};
inline const std::vector<std::string> kExampleKe = {
    "h", "i", "j", "k", "l", "m", "r", "s", "t", "u", "v", "w", "z", "c1"};
inline const LabelPairs kExampleM = {
    {"2", "3"}, {"4", "5"}, {"1", "0"}, {"6", "7"}, {"8", "9"}, {"10", "11"},
    {"e", "f"}, {"c", "d"}, {"g", "d1"}, {"i", "h"}, {"j", "k"}, {"l", "m"},
    {"s", "r"}, {"t", "u"}, {"v", "w"}, {"z", "c1"}};
inline Graph example32() {
  std::vector<std::string> vertices = kExampleSd;
  vertices.insert(vertices.end(), kExampleKe.begin(), kExampleKe.end());
  return Graph::from_labeled(
      vertices,
      concat({{"1", "2"}, {"1", "5"}, {"3", "4"}, {"0", "6"}, {"7", "8"},
              {"9", "5"}, {"9", "4"}, {"0", "5"}, {"5", "8"}, {"2", "0"},
              {"10", "8"}, {"8", "e"}, {"9", "e"}, {"11", "c"}, {"10", "d"},
              {"d", "g"}, {"f", "g"}, {"f", "d1"}, {"g", "h"}, {"i", "j"},
              {"h", "k"}, {"k", "m"}, {"j", "l"}, {"11", "r"}, {"t", "r"},
              {"t", "s"}, {"t", "v"}, {"t", "w"}, {"w", "z"}},
             kExampleM));
}

}  // namespace sdke::fixtures

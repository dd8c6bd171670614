#include "sdke/report.hpp"

#include "sdke/error.hpp"
#include "sdke/graph_io.hpp"

namespace sdke {

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

namespace {

Json edge_array(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["edges"] = edge_array(g.edges());
  j["labels"] = g.labels();
  j["hash"] = graph_hash(g);
  return j;
}

Json to_json(const Matching& m) { return edge_array(m.pairs()); }

Json to_json(const AlternatingWalk& w) {
  Json j;
  j["kind"] = std::string(to_string(w.kind));
  j["walk"] = w.vertices;
  return j;
}

AlternatingWalk walk_from_json(const Json& j) {
  try {
    const auto kind = parse_walk_kind(j.at("kind").get<std::string>());
    if (!kind) throw InvalidInput("unknown walk kind");
    return {j.at("walk").get<std::vector<Vertex>>(), *kind};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed walk: ") + e.what());
  }
}

Json to_json(const SdKePartition& p) {
  Json j;
  j["sd"] = p.sd_vertices;
  j["ke"] = p.ke_vertices;
  j["cut"] = edge_array(p.cut);
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < p.sd_vertices.size(); ++i) {
    Json w = to_json(p.witnesses[i]);
    Json entry;
    entry["vertex"] = p.sd_vertices[i];
    entry["kind"] = w["kind"];
    entry["walk"] = w["walk"];
    witnesses.push_back(entry);
  }
  j["witnesses"] = witnesses;
  Json markers = Json::array();
  for (const KeMarker& k : p.ke_markers) {
    markers.push_back({{"vertex", k.vertex}, {"failed_search", k.failed_search}});
  }
  j["ke_markers"] = markers;
  return j;
}

Json to_json(const SachsSubgraph& s) {
  Json components = Json::array();
  for (const auto& c : s.components) {
    Json entry;
    entry["kind"] = c.kind == SachsComponent::Kind::kEdge ? "K2" : "cycle";
    entry["vertices"] = c.vertices;
    components.push_back(entry);
  }
  Json j;
  j["components"] = components;
  j["cycles"] = s.cycle_count();
  j["even_components"] = s.even_component_count();
  return j;
}

Json determinants_json(const FactorizationReport& r) {
  Json j;
  j["method"] = std::string(to_string(r.det_method));
  j["det_g"] = r.det_g.str();
  j["det_sd"] = r.det_sd.str();
  j["det_ke"] = r.det_ke.str();
  j["ok"] = r.det_product_ok;
  return j;
}

Json permanents_json(const FactorizationReport& r) {
  if (!r.perm_method) return nullptr;
  Json j;
  j["method"] = std::string(to_string(*r.perm_method));
  j["perm_g"] = r.perm_g->str();
  j["perm_sd"] = r.perm_sd->str();
  j["perm_ke"] = r.perm_ke->str();
  j["ok"] = r.perm_product_ok;
  return j;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["detail"] = c.detail;
  if (c.matching) j["matching"] = to_json(*c.matching);
  if (c.other_matching) j["other_matching"] = to_json(*c.other_matching);
  if (c.vertex) j["vertex"] = *c.vertex;
  if (c.edge) j["edge"] = to_json(*c.edge);
  if (c.sachs) j["sachs"] = to_json(*c.sachs);
  return j;
}

Json to_json(const TheoremReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    if (c.counterexample) entry["counterexample"] = to_json(*c.counterexample);
    checks.push_back(entry);
  }
  return checks;
}

}  // namespace sdke

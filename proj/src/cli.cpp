#include "sdke/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "sdke/error.hpp"
#include "sdke/graph_io.hpp"
#include "sdke/report.hpp"

namespace sdke {

namespace {

struct CliConfig {
  std::string input = "-";
  std::string matching = "auto";
  bool text = false;
  std::string dot_path;
  std::string det_method = "elimination";
  std::string perm_method = "ryser";
  std::size_t max_n = 12;
  bool list = false;
  bool perfect = false;
  std::size_t limit = 0;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  bool decorate = false;
  int threads = 0;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Json header(const std::string& command) {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + g.label(v);
  return s;
}

std::string paren(const BigInt& x) {
  return x < 0 ? "(" + x.str() + ")" : x.str();
}

int decompose(const CliConfig& cfg, const Graph& g, std::istream& in,
              std::ostream& out) {
  Matching m;
  if (cfg.matching == "auto") {
    m = maximum_matching(g);
    if (2 * m.size() != g.order()) throw NotMatchable();
  } else {
    m = parse_matching(g, read_source(cfg.matching, in));
    if (!is_perfect(g, m)) throw NotMatchable("supplied matching is not perfect");
  }
  const SdKePartition p = sd_ke_partition(g, m);
  FactorizationOptions options;
  options.permanents = g.order() <= kPermanentMaxOrder;
  const FactorizationReport f = factorization_report(g, p, options);

  if (!cfg.dot_path.empty()) {
    std::ofstream dot(cfg.dot_path);
    if (!dot) throw InvalidInput("cannot write '" + cfg.dot_path + "'");
    dot << export_dot(g, &p, &m);
  }

  if (cfg.text) {
    out << "graph: n = " << g.order() << ", m = " << g.size() << "\n";
    out << "matching:";
    for (const Edge& e : m.pairs()) out << " " << g.label(e.u) << "-" << g.label(e.v);
    out << "\nSD (" << p.sd_vertices.size() << "): " << labels_of(g, p.sd_vertices)
        << "\nKE (" << p.ke_vertices.size() << "): " << labels_of(g, p.ke_vertices)
        << "\ncut (" << p.cut.size() << "):";
    for (const Edge& e : p.cut) out << " " << g.label(e.u) << "-" << g.label(e.v);
    out << "\ndet(G) = det(SD) · det(KE): " << f.det_g << " = "
        << paren(f.det_sd) << "·" << paren(f.det_ke)
        << (f.det_product_ok ? "" : "  FAILED") << "\n";
    if (f.perm_method) {
      out << "perm(G) = perm(SD) · perm(KE): " << *f.perm_g << " = "
          << paren(*f.perm_sd) << "·" << paren(*f.perm_ke)
          << (f.perm_product_ok ? "" : "  FAILED") << "\n";
    }
    return kExitOk;
  }

  Json j = header("decompose");
  j["graph"] = to_json(g);
  j["matching"] = to_json(m);
  j["partition"] = to_json(p);
  j["determinants"] = determinants_json(f);
  j["permanents"] = permanents_json(f);
  j["seeds"] = Json::array();
  emit(out, j);
  return kExitOk;
}

int determinant_cmd(const CliConfig& cfg, const Graph& g, std::ostream& out) {
  const DetMethod method =
      cfg.det_method == "sachs" ? DetMethod::kSachs : DetMethod::kElimination;
  Json j = header("det");
  j["graph_hash"] = graph_hash(g);
  j["method"] = std::string(to_string(method));
  j["det"] = determinant(g, method).str();
  emit(out, j);
  return kExitOk;
}

int permanent_cmd(const CliConfig& cfg, const Graph& g, std::ostream& out) {
  const PermMethod method =
      cfg.perm_method == "sachs" ? PermMethod::kSachs : PermMethod::kRyser;
  Json j = header("perm");
  j["graph_hash"] = graph_hash(g);
  j["method"] = std::string(to_string(method));
  j["perm"] = permanent(g, method).str();
  emit(out, j);
  return kExitOk;
}

int verify(const CliConfig& cfg, const Graph& g, std::ostream& out) {
  if (!is_matchable(g)) throw NotMatchable();
  SuiteOptions options;
  options.max_order = cfg.max_n;
  const TheoremReport report = run_theorem_suite(g, options);
  const SdKePartition p = sd_ke_partition(g);
  Json j = header("verify");
  j["graph"] = to_json(g);
  j["matching"] = to_json(p.matching);
  j["partition"] = to_json(p);
  j["checks"] = to_json(report);
  j["all_passed"] = report.all_passed();
  j["seeds"] = Json::array();
  emit(out, j);
  return report.all_passed() ? kExitOk : kExitDomain;
}

int sachs_cmd(const CliConfig& cfg, const Graph& g, std::ostream& out) {
  EnumerationLimits limits = kSachsLimits;
  limits.max_order = std::max(limits.max_order, cfg.max_n);
  Json j = header("sachs");
  j["graph_hash"] = graph_hash(g);
  if (cfg.list) {
    Json all = Json::array();
    for_each_sachs(
        g,
        [&](const SachsSubgraph& s) {
          all.push_back(to_json(s));
          return true;
        },
        limits);
    j["count"] = all.size();
    j["subgraphs"] = all;
  } else {
    const SachsSums sums = sachs_sums(g, limits);
    j["count"] = sums.count;
    j["det"] = sums.det.str();
    j["perm"] = sums.perm.str();
  }
  emit(out, j);
  return kExitOk;
}

int matchings_cmd(const CliConfig& cfg, const Graph& g, std::ostream& out) {
  EnumerationLimits limits;
  limits.max_order = std::max(limits.max_order, cfg.max_n);
  limits.max_results = cfg.limit;
  const MatchingFamily family = cfg.perfect
                                    ? enumerate_perfect_matchings(g, limits)
                                    : enumerate_maximum_matchings(g, limits);
  Json j = header("matchings");
  j["graph_hash"] = graph_hash(g);
  j["kind"] = cfg.perfect ? "perfect" : "maximum";
  j["matching_number"] = matching_number(g);
  j["count"] = family.members.size();
  j["truncated"] = family.truncated;
  Json all = Json::array();
  for (const Matching& m : family.members) all.push_back(to_json(m));
  j["matchings"] = all;
  emit(out, j);
  return kExitOk;
}

int export_dot_cmd(const CliConfig& cfg, const Graph& g, std::ostream& out) {
  if (!cfg.decorate) {
    out << export_dot(g);
    return kExitOk;
  }
  const Matching m = maximum_matching(g);
  if (2 * m.size() == g.order()) {
    const SdKePartition p = sd_ke_partition(g, m);
    out << export_dot(g, &p, &m);
  } else {
    out << export_dot(g, nullptr, &m);
  }
  return kExitOk;
}

void report_error(std::ostream& out, const std::string& type,
                  const std::string& message) {
  Json j;
  j["version"] = kVersion;
  j["error"] = {{"type", type}, {"message", message}};
  emit(out, j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"SD-KE decomposition and determinantal factorization of graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  auto input_option = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "edge-list file, or - for stdin")
        ->required();
  };

  auto* decompose_cmd = app.add_subcommand("decompose", "SD-KE partition report");
  input_option(decompose_cmd);
  decompose_cmd->add_option("--matching", cfg.matching,
                            "auto, or a file of matched pairs");
  auto* json_flag = decompose_cmd->add_flag("--json", "JSON output (default)");
  decompose_cmd->add_flag("--text", cfg.text, "human-readable output")
      ->excludes(json_flag);
  decompose_cmd->add_option("--dot", cfg.dot_path, "also write a DOT drawing");

  auto* det_cmd = app.add_subcommand("det", "determinant of the adjacency matrix");
  input_option(det_cmd);
  det_cmd->add_option("--method", cfg.det_method)
      ->check(CLI::IsMember({"elimination", "sachs"}));

  auto* perm_cmd = app.add_subcommand("perm", "permanent of the adjacency matrix");
  input_option(perm_cmd);
  perm_cmd->add_option("--method", cfg.perm_method)
      ->check(CLI::IsMember({"ryser", "sachs"}));

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem checks");
  input_option(verify_cmd);
  verify_cmd->add_option("--max-n", cfg.max_n, "order bound for enumeration checks")
      ->check(CLI::PositiveNumber);

  auto* sachs = app.add_subcommand("sachs", "Sachs subgraphs");
  input_option(sachs);
  auto* list_flag = sachs->add_flag("--list", cfg.list, "list every subgraph");
  sachs->add_flag("--count", "count only (default)")->excludes(list_flag);
  sachs->add_option("--max-n", cfg.max_n, "raise the enumeration order bound")
      ->check(CLI::PositiveNumber);

  auto* matchings = app.add_subcommand("matchings", "enumerate matchings");
  input_option(matchings);
  auto* perfect_flag = matchings->add_flag("--perfect", cfg.perfect);
  matchings->add_flag("--maximum", "maximum matchings (default)")
      ->excludes(perfect_flag);
  matchings->add_option("--limit", cfg.limit, "stop after k matchings");
  matchings->add_option("--max-n", cfg.max_n, "raise the enumeration order bound")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "random matchable graph (edge list)");
  gen->add_option("--n", cfg.n, "even order")->required();
  gen->add_option("--p", cfg.p, "extra-edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", cfg.seed)->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz drawing");
  input_option(dot);
  dot->add_flag("--decorate", cfg.decorate, "style matching and SD/KE sides");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    if (gen->parsed()) {
      const Graph g = random_matchable_graph(cfg.n, cfg.p, cfg.seed);
      out << "# random matchable graph: n=" << cfg.n << " p=" << cfg.p
          << " seed=" << cfg.seed << "\n"
          << serialize_edge_list(g);
      return kExitOk;
    }
    const Graph g = parse_edge_list(read_source(cfg.input, in));
    if (decompose_cmd->parsed()) return decompose(cfg, g, in, out);
    if (det_cmd->parsed()) return determinant_cmd(cfg, g, out);
    if (perm_cmd->parsed()) return permanent_cmd(cfg, g, out);
    if (verify_cmd->parsed()) return verify(cfg, g, out);
    if (sachs->parsed()) return sachs_cmd(cfg, g, out);
    if (matchings->parsed()) return matchings_cmd(cfg, g, out);
    if (dot->parsed()) return export_dot_cmd(cfg, g, out);
  } catch (const NotMatchable& e) {
    report_error(out, "not_matchable", e.what());
    return kExitDomain;
  } catch (const LimitExceeded& e) {
    report_error(out, "limit_exceeded", e.what());
    return kExitDomain;
  } catch (const InvalidInput& e) {
    report_error(out, "invalid_input", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace sdke

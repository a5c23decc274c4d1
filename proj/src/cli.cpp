#include "flipgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flipgraph/component_stats.hpp"
#include "flipgraph/error.hpp"
#include "flipgraph/serialize.hpp"
#include "flipgraph/signed_equiv.hpp"
#include "flipgraph/verify.hpp"

namespace flipgraph {

namespace {

struct RunConfig {
  int vertices = 0;
  int colours = 0;
  std::string sigma = "cyclic";
  std::optional<std::uint64_t> budget;
  int workers = 1;
  std::string format;
  bool drop_isolated = false;
  bool header = false;
  std::string out_path;
  std::string input;
  std::vector<std::string> files;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ColourScheme parse_sigma(const std::string& spec, int colours) {
  if (spec == "cyclic") return ColourScheme::cyclic(colours > 0 ? colours : 2);
  if (spec == "identity") return ColourScheme::identity(colours > 0 ? colours : 2);
  std::vector<Colour> images;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--sigma: '" + item + "' is not an integer");
    }
  }
  if (colours > 0 && static_cast<int>(images.size()) != colours) {
    throw UsageError("--sigma has " + std::to_string(images.size()) + " images but --colours is " +
                     std::to_string(colours));
  }
  try {
    return ColourScheme::from_images(std::move(images));
  } catch (const Error& e) {
    throw UsageError(std::string("--sigma: ") + e.what());
  }
}

std::uint64_t resolve_budget(const RunConfig& cfg, const char* env_budget) {
  if (cfg.budget) return *cfg.budget;
  if (env_budget != nullptr && *env_budget != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env_budget, &used);
      if (used != std::char_traits<char>::length(env_budget) || v == 0) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("FLIPGRAPH_BUDGET: invalid value '") + env_budget + "'");
    }
  }
  return kDefaultNodeBudget;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ColouredInput load(const std::string& path) {
  try {
    return parse_coloured(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

Json graph_to_json(const FlipGraph& graph, bool drop_isolated) {
  Json nodes = Json::array();
  Json edges = Json::array();
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    if (drop_isolated && graph.degree(id) == 0) continue;
    nodes.push_back({{"id", id}, {"key", canonical_key(graph.node(id))}});
    for (const NodeId w : graph.neighbours(id)) {
      if (w > id) edges.push_back({id, w});
    }
  }
  Json j{{"n", graph.vertex_count()}, {"m", graph.scheme().colour_count()}};
  j["sigma"] = std::vector<Colour>(graph.scheme().images().begin(), graph.scheme().images().end());
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

class Runner {
 public:
  Runner(RunConfig cfg, std::ostream& out, const char* env_budget)
      : cfg_(std::move(cfg)), out_(out), env_budget_(env_budget) {}

  int census() {
    const auto c = flipgraph::census(require_vertices(), scheme(), options());
    if (format("csv") == "json") {
      emit(census_to_json(c).dump(2) + "\n");
    } else {
      std::ostringstream s;
      write_census_csv(s, c, cfg_.header);
      emit(s.str());
    }
    return kExitOk;
  }

  int verify() {
    const auto results = run_verification(require_vertices(), scheme(), options());
    std::ostringstream s;
    bool ok = true;
    for (const auto& r : results) {
      s << format_check(r) << '\n';
      ok = ok && (r.passed || r.advisory);
    }
    emit(s.str());
    return ok ? kExitOk : kExitVerifyFailed;
  }

  int export_graph() {
    const std::string fmt = format("dot");
    if (!cfg_.input.empty()) return emit_component(fmt);
    const FlipGraph graph = build_flip_graph(require_vertices(), scheme(), options());
    if (fmt == "json") {
      emit(graph_to_json(graph, cfg_.drop_isolated).dump(2) + "\n");
    } else {
      std::ostringstream s;
      write_dot(s, graph, cfg_.drop_isolated);
      emit(s.str());
    }
    return kExitOk;
  }

  int component() {
    if (cfg_.input.empty()) throw UsageError("component needs --input");
    return emit_component(format("json"));
  }

  int equiv() {
    const auto a = load(cfg_.files.at(0));
    const auto b = load(cfg_.files.at(1));
    emit(decide_equivalence(a.ct, b.ct) ? "equivalent\n" : "not-equivalent\n");
    return kExitOk;
  }

  int analyze() {
    const auto in = load(cfg_.files.at(0));
    const auto& ct = in.ct;
    Json flippable = Json::array();
    for (const Diagonal d : flippable_diagonals(ct)) flippable.push_back({d.a, d.b});
    Json j{{"key", canonical_key(ct)}};
    j["weighting"] = to_json(weighting(ct));
    j["valuation"] = to_json(valuation(ct));
    j["colouring"] = to_json(colouring(ct));
    j["flippable"] = std::move(flippable);
    j["frozen"] = is_frozen(ct);
    emit(j.dump(2) + "\n");
    return kExitOk;
  }

  int enumerate() {
    const int n = require_vertices();
    const ColourScheme s = scheme();
    check_node_budget(n, s.colour_count(), budget());
    std::vector<ColouredTriangulation> all;
    for (const auto& ct : enumerate_coloured(n, s.colour_count())) all.push_back(ct);
    std::sort(all.begin(), all.end());
    if (format("csv") == "json") {
      Json arr = Json::array();
      for (const auto& ct : all) arr.push_back(to_json(ct, s.colour_count()));
      emit(arr.dump(2) + "\n");
    } else {
      std::ostringstream o;
      if (cfg_.header) o << "key\n";
      for (const auto& ct : all) o << canonical_key(ct) << '\n';
      emit(o.str());
    }
    return kExitOk;
  }

 private:
  int require_vertices() const {
    if (cfg_.vertices < 3) throw UsageError("--vertices (>= 3) is required");
    return cfg_.vertices;
  }

  ColourScheme scheme(std::optional<int> file_colours = std::nullopt) const {
    int m = cfg_.colours;
    if (file_colours) {
      if (m > 0 && m != *file_colours) {
        throw UsageError("--colours " + std::to_string(m) + " disagrees with input m=" +
                         std::to_string(*file_colours));
      }
      m = *file_colours;
    }
    return parse_sigma(cfg_.sigma, m);
  }

  std::uint64_t budget() const { return resolve_budget(cfg_, env_budget_); }

  BuildOptions options() const { return {budget(), cfg_.workers}; }

  std::string format(const std::string& fallback) const {
    return cfg_.format.empty() ? fallback : cfg_.format;
  }

  int emit_component(const std::string& fmt) {
    const auto in = load(cfg_.input);
    const ColourScheme s = scheme(in.colour_count);
    check_colours(in.ct, s);
    Component comp = component_of(in.ct, s, budget());
    const int n = in.ct.vertex_count();
    if (count_coloured(n, s.colour_count()) <= std::min<std::uint64_t>(budget(), UINT32_MAX)) {
      attach_node_ids(comp, s.colour_count());
    }
    if (fmt == "dot") {
      std::ostringstream o;
      write_dot(o, comp);
      emit(o.str());
    } else if (fmt == "json") {
      emit(component_to_json(comp, component_stats(comp), s.colour_count()).dump(2) + "\n");
    } else {
      throw UsageError("--format must be json or dot here");
    }
    return kExitOk;
  }

  void emit(const std::string& text) {
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + cfg_.out_path + "'");
    f << text;
  }

  RunConfig cfg_;
  std::ostream& out_;
  const char* env_budget_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBudgetExceeded: return kExitBudget;
    case ErrorKind::kInternal: return kExitVerifyFailed;
    default: return kExitData;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* env_budget) {
  CLI::App app{"Coloured triangulation flip graphs", "flipgraph"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_graph_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--vertices,-n", cfg.vertices, "Polygon vertex count")->check(CLI::Range(3, 64));
    sub->add_option("--colours,-m", cfg.colours, "Colour count (default 2)")->check(CLI::Range(1, 64));
    sub->add_option("--sigma", cfg.sigma, "cyclic, identity, or images such as 1,0,3,2");
    sub->add_option("--budget", cfg.budget, "Maximum node count")->check(CLI::PositiveNumber);
    sub->add_option("--workers,-j", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_out = [&cfg](CLI::App* sub) { sub->add_option("--out,-o", cfg.out_path, "Output path"); };

  auto* census = app.add_subcommand("census", "Component size census");
  add_graph_flags(census);
  add_out(census);
  census->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  census->add_flag("--header", cfg.header, "Print a CSV header row");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_graph_flags(verify);
  add_out(verify);

  auto* exp = app.add_subcommand("export", "Whole graph, or the component of --input");
  add_graph_flags(exp);
  add_out(exp);
  exp->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--drop-isolated", cfg.drop_isolated, "Omit isolated nodes");
  exp->add_option("--input,-i", cfg.input, "Coloured triangulation JSON");

  auto* comp = app.add_subcommand("component", "Component of a coloured triangulation");
  add_graph_flags(comp);
  add_out(comp);
  comp->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json"}));
  comp->add_option("--input,-i", cfg.input, "Coloured triangulation JSON")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide flip equivalence of two signed triangulations");
  add_out(equiv);
  equiv->add_option("files", cfg.files, "Two JSON files")->required()->expected(2);

  auto* analyze = app.add_subcommand("analyze", "Weighting, valuation, colouring, flippable diagonals");
  add_out(analyze);
  analyze->add_option("file", cfg.files, "JSON file")->required()->expected(1);

  auto* enumerate = app.add_subcommand("enumerate", "List coloured triangulations");
  add_graph_flags(enumerate);
  add_out(enumerate);
  enumerate->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_flag("--header", cfg.header, "Print a CSV header row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(cfg, out, env_budget);
  try {
    if (census->parsed()) return runner.census();
    if (verify->parsed()) return runner.verify();
    if (exp->parsed()) return runner.export_graph();
    if (comp->parsed()) return runner.component();
    if (equiv->parsed()) return runner.equiv();
    if (analyze->parsed()) return runner.analyze();
    if (enumerate->parsed()) return runner.enumerate();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace flipgraph

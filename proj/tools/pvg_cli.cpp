// Command-line front end for the visibility-graph library: one subcommand
// per pipeline, stable file formats, and fixed exit codes.
//
//   0  success / positive verdict
//   1  negative verdict
//   2  inconclusive: a search budget ran out
//   3  input or usage error
//
// Artifacts written to --out (or dumped to stdout with '#' metadata lines)
// re-parse through the library's own readers.  Reports stay byte-identical
// across runs and worker counts; nothing timing-dependent is printed.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvg/audit.hpp"
#include "pvg/conditions.hpp"
#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"
#include "pvg/io.hpp"
#include "pvg/planar.hpp"
#include "pvg/reductions.hpp"
#include "pvg/visibility.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSuccess = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

struct Options {
  std::string points_path;
  std::string graph_path;
  std::string out_path;
  std::string grid;
  double time_limit = 10.0;
  std::uint64_t node_limit = 10'000'000;
  int workers = 1;
  std::uint64_t seed = 1;
  bool json = false;
  bool compat = false;
  bool time_limit_given = false;
  bool node_limit_given = false;
};

bool parse_grid(const std::string& text, int* width, int* height) {
  const auto cut = text.find('x');
  if (cut == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const int w = std::stoi(text.substr(0, cut), &used);
    if (used != cut) return false;
    const std::string rest = text.substr(cut + 1);
    const int h = std::stoi(rest, &used);
    if (used != rest.size()) return false;
    if (w < 1 || h < 1) return false;
    *width = w;
    *height = h;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw pvg::ParseError(path, 0, "cannot open for writing");
  return file;
}

Json edges_json(const pvg::Graph& g) {
  Json out = Json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

Json points_json(const pvg::PointSet& points) {
  Json out = Json::array();
  for (const pvg::Point& p : points) out.push_back({p.x, p.y});
  return out;
}

Json blockers_json(const pvg::BlockerMap& blockers) {
  Json out = Json::array();
  for (const auto& [pair, chain] : blockers.entries())
    out.push_back({{"pair", {pair.first, pair.second}}, {"chain", chain}});
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_build(const Options& o) {
  const pvg::PointSet points = pvg::read_points_file(o.points_path);
  const pvg::Embedding e = pvg::build_pvg(points, o.workers);
  const auto emit = [&](std::ostream& out) {
    pvg::write_graph(out, e.graph);
    for (const auto& [pair, chain] : e.blockers.entries()) {
      out << "# blocked " << pair.first << " " << pair.second << ":";
      for (int b : chain) out << " " << b;
      out << "\n";
    }
  };
  if (!o.out_path.empty()) {
    auto file = open_out(o.out_path);
    emit(file);
  }
  if (o.json) {
    print_json({{"order", e.graph.order()},
                {"size", e.graph.size()},
                {"edges", edges_json(e.graph)},
                {"blockers", blockers_json(e.blockers)}});
  } else if (o.out_path.empty()) {
    emit(std::cout);
  } else {
    std::cout << "graph written to " << o.out_path << "\n";
  }
  return kSuccess;
}

int run_check(const Options& o) {
  const pvg::Graph g = pvg::read_graph_file(o.graph_path);
  pvg::SearchLimits limits;
  limits.max_nodes = o.node_limit;
  limits.time_limit_seconds = o.time_limit;
  const pvg::NcReport r = pvg::check_conditions(g, limits);

  const auto name = [](std::optional<pvg::Verdict> v) {
    return v ? std::string(pvg::to_string(*v)) : std::string("not attempted");
  };
  if (o.json) {
    Json j{{"nc1", pvg::to_string(r.nc1)}, {"nc2", name(r.nc2)}, {"nc3", name(r.nc3)}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    print_json(j);
  } else {
    std::cout << "nc1: " << pvg::to_string(r.nc1) << "\n";
    std::cout << "nc2: " << name(r.nc2) << "\n";
    std::cout << "nc3: " << name(r.nc3) << "\n";
    if (!r.detail.empty()) std::cout << "detail: " << r.detail << "\n";
  }

  const auto is = [&](pvg::Verdict v) {
    return r.nc1 == v || (r.nc2 && *r.nc2 == v) || (r.nc3 && *r.nc3 == v);
  };
  if (is(pvg::Verdict::refuted)) return kNegative;
  if (is(pvg::Verdict::inconclusive)) return kInconclusive;
  return kSuccess;
}

int run_planar(const Options& o) {
  const pvg::Graph g = pvg::read_graph_file(o.graph_path);
  const pvg::PlanarClass c = pvg::classify(g);
  std::optional<pvg::Embedding> embedding;
  if (c.positive() && !o.out_path.empty()) embedding = pvg::reconstruct(c);

  if (o.json) {
    Json j{{"kind", pvg::to_string(c.kind)}};
    if (!c.positive()) {
      j["reason"] = c.reason;
    } else if (c.kind == pvg::PlanarKind::particular) {
      j["order"] = c.order;
      j["particular_id"] = c.particular_id;
      j["bijection"] = c.bijection;
    } else {
      j["order"] = c.order;
      j["path"] = c.path;
      if (c.apex1 >= 0) j["apex1"] = c.apex1;
      if (c.apex2 >= 0) j["apex2"] = c.apex2;
      if (c.missed >= 0) j["missed"] = c.missed;
    }
    if (embedding) j["points"] = points_json(embedding->points);
    print_json(j);
  } else {
    std::cout << pvg::to_string(c.kind) << "\n";
    if (!c.positive()) {
      if (!c.reason.empty()) std::cout << "reason: " << c.reason << "\n";
    } else if (c.kind == pvg::PlanarKind::particular) {
      std::cout << "particular_id: " << c.particular_id << "\n";
    } else {
      std::cout << "path:";
      for (int v : c.path) std::cout << " " << v;
      std::cout << "\n";
      if (c.apex1 >= 0) std::cout << "apex1: " << c.apex1 << "\n";
      if (c.apex2 >= 0) std::cout << "apex2: " << c.apex2 << "\n";
      if (c.missed >= 0) std::cout << "missed: " << c.missed << "\n";
    }
  }
  if (embedding) {
    auto file = open_out(o.out_path);
    pvg::write_points(file, embedding->points);
    if (!o.json) std::cout << "points written to " << o.out_path << "\n";
  }
  return c.positive() ? kSuccess : kNegative;
}

int run_hamcycle(const Options& o) {
  const pvg::PointSet points = pvg::read_points_file(o.points_path);
  const pvg::Embedding e = pvg::build_pvg(points);
  std::vector<int> cycle;
  try {
    cycle = pvg::hamiltonian_cycle(e);
  } catch (const std::invalid_argument& reason) {
    if (o.json) {
      print_json({{"cycle", nullptr}, {"reason", reason.what()}});
    } else {
      std::cout << "no cycle: " << reason.what() << "\n";
    }
    return kNegative;
  }
  if (o.json) {
    print_json({{"cycle", cycle}});
  } else {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      std::cout << cycle[i] << (i + 1 < cycle.size() ? ' ' : '\n');
  }
  return kSuccess;
}

int run_audit(const Options& o) {
  const pvg::PointSet points = pvg::read_points_file(o.points_path);
  pvg::AuditOptions options;
  options.seed = o.seed;
  const pvg::AuditReport report = pvg::audit_embedding(pvg::build_pvg(points), options);
  if (o.json) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    print_json({{"checks", checks},
                {"blocker_samples", report.blocker_samples},
                {"all_passed", report.all_passed()}});
  } else {
    for (const auto& c : report.checks) {
      std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL");
      if (!c.witness.empty()) std::cout << " - " << c.witness;
      std::cout << "\n";
    }
    std::cout << "blocker samples: " << report.blocker_samples << "\n";
    std::cout << "result: " << (report.all_passed() ? "all passed" : "failed") << "\n";
  }
  return report.all_passed() ? kSuccess : kNegative;
}

int run_search(const Options& o) {
  int width = 0, height = 0;
  if (!parse_grid(o.grid, &width, &height)) {
    std::cerr << "error: --grid expects WxH with positive integers\n";
    return kInputError;
  }
  const pvg::Graph g = pvg::read_graph_file(o.graph_path);
  pvg::GridSearchBudget budget;
  budget.max_nodes = o.node_limit;
  budget.time_limit_seconds = o.time_limit;
  budget.workers = o.workers;
  const pvg::GridSearchResult r = pvg::grid_search_embedding(g, width, height, budget);

  if (o.json) {
    Json j{{"outcome", pvg::to_string(r.outcome)}};
    if (r.embedding) j["points"] = points_json(r.embedding->points);
    print_json(j);
  } else if (r.embedding && !o.out_path.empty()) {
    auto file = open_out(o.out_path);
    pvg::write_points(file, r.embedding->points);
    std::cout << "outcome: found\npoints written to " << o.out_path << "\n";
  } else {
    std::cout << "# outcome: " << pvg::to_string(r.outcome) << "\n";
    if (r.embedding) pvg::write_points(std::cout, r.embedding->points);
  }
  switch (r.outcome) {
    case pvg::SearchOutcome::found: return kSuccess;
    case pvg::SearchOutcome::exhausted: return kNegative;
    case pvg::SearchOutcome::timeout: return kInconclusive;
  }
  return kInputError;
}

int run_gadget(const Options& o) {
  const pvg::Graph g = pvg::read_graph_file(o.graph_path);
  const pvg::Gadget gadget = pvg::build_gadget(g);

  const std::filesystem::path dir(o.out_path);
  std::filesystem::create_directories(dir);
  {
    auto file = open_out((dir / "graph.txt").string());
    pvg::write_graph(file, gadget.extended);
  }
  {
    auto file = open_out((dir / "points.txt").string());
    pvg::write_points(file, gadget.embedding.points);
  }
  const Json manifest{{"base_order", gadget.base.order()},
                      {"extended_order", gadget.extended.order()},
                      {"added", gadget.added},
                      {"injection", gadget.injection},
                      {"graph_file", "graph.txt"},
                      {"points_file", "points.txt"}};
  {
    auto file = open_out((dir / "manifest.json").string());
    file << manifest.dump(2) << "\n";
  }
  if (o.json) {
    print_json(manifest);
  } else {
    std::cout << "added: " << gadget.added << "\n"
              << "order: " << gadget.base.order() << " -> " << gadget.extended.order() << "\n"
              << "written to " << o.out_path << "\n";
  }
  return kSuccess;
}

int run_etr(const Options& o) {
  const pvg::Graph g = pvg::read_graph_file(o.graph_path);
  const pvg::EtrFormula f = pvg::emit_etr(g, o.compat);
  const std::string script = f.smt2();
  if (!o.out_path.empty()) {
    auto file = open_out(o.out_path);
    file << script;
  }
  if (o.json) {
    print_json({{"order", f.order},
                {"coordinate_variables", f.coordinate_variables.size()},
                {"t_variables", f.t_variables.size()},
                {"assertions", f.assertions.size()},
                {"strict_compat", f.strict_compat},
                {"smt2", script}});
  } else if (o.out_path.empty()) {
    std::cout << script;
  } else {
    std::cout << "formula written to " << o.out_path << "\n";
  }
  return kSuccess;
}

Json catalog_summary(const pvg::Catalog& c) {
  return {{"width", c.width},
          {"height", c.height},
          {"complete", c.complete},
          {"classes_6", c.classes_of(6)},
          {"classes_7", c.classes_of(7)}};
}

int run_catalog(const Options& o) {
  pvg::CatalogBudget budget;
  budget.workers = o.workers;
  if (o.time_limit_given) budget.time_limit_seconds = o.time_limit;
  if (o.node_limit_given) budget.max_subsets = o.node_limit;

  const bool fixed = !o.grid.empty();
  std::vector<pvg::Catalog> runs;
  if (fixed) {
    int width = 0, height = 0;
    if (!parse_grid(o.grid, &width, &height)) {
      std::cerr << "error: --grid expects WxH with positive integers\n";
      return kInputError;
    }
    runs.push_back(pvg::build_catalog(width, height, budget));
  } else {
    for (const int side : {6, 7}) {
      runs.push_back(pvg::build_catalog(side, side, budget));
      const pvg::Catalog& c = runs.back();
      if (!c.complete) break;
      if (c.classes_of(6) == 3 && c.classes_of(7) == 2) break;
    }
  }
  const pvg::Catalog& last = runs.back();
  const bool sufficient = last.classes_of(6) == 3 && last.classes_of(7) == 2;

  Json manifest{{"grid", {{"width", last.width}, {"height", last.height}}},
                {"complete", last.complete},
                {"classes", {{"6", last.classes_of(6)}, {"7", last.classes_of(7)}}},
                {"sufficient", sufficient}};
  Json tried = Json::array();
  for (const pvg::Catalog& c : runs) tried.push_back(catalog_summary(c));
  manifest["tried"] = tried;
  Json entries = Json::array();
  for (const pvg::CatalogEntry& e : last.entries) {
    Json item{{"id", e.id},
              {"order", e.graph.order()},
              {"key", e.key},
              {"gsp", e.gsp},
              {"edges", edges_json(e.graph)},
              {"points", points_json(e.points)}};
    if (!o.out_path.empty()) {
      item["graph_file"] = "entry" + std::to_string(e.id) + "_graph.txt";
      item["points_file"] = "entry" + std::to_string(e.id) + "_points.txt";
    }
    entries.push_back(item);
  }
  manifest["entries"] = entries;

  if (!o.out_path.empty()) {
    const std::filesystem::path dir(o.out_path);
    std::filesystem::create_directories(dir);
    for (const pvg::CatalogEntry& e : last.entries) {
      auto gf = open_out((dir / ("entry" + std::to_string(e.id) + "_graph.txt")).string());
      pvg::write_graph(gf, e.graph);
      auto pf = open_out((dir / ("entry" + std::to_string(e.id) + "_points.txt")).string());
      pvg::write_points(pf, e.points);
    }
    auto mf = open_out((dir / "manifest.json").string());
    mf << manifest.dump(2) << "\n";
  }

  if (o.json) {
    print_json(manifest);
  } else {
    std::cout << "grid: " << last.width << "x" << last.height << "\n"
              << "complete: " << (last.complete ? "yes" : "no") << "\n"
              << "classes n=6: " << last.classes_of(6) << "\n"
              << "classes n=7: " << last.classes_of(7) << "\n";
    for (const pvg::CatalogEntry& e : last.entries)
      std::cout << "entry " << e.id << ": order " << e.graph.order() << ", key " << e.key
                << ", run " << e.gsp << "\n";
    if (!o.out_path.empty()) std::cout << "written to " << o.out_path << "\n";
  }
  if (!last.complete) return kInconclusive;
  if (!fixed && !sufficient) return kNegative;
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point visibility graph toolkit"};
  app.require_subcommand(1);
  Options o;

  const auto add_points = [&](CLI::App* sub) {
    sub->add_option("--points", o.points_path, "point file, one 'x y' pair per line")
        ->required();
  };
  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "graph file, 'n m' header then 'u v' lines")
        ->required();
  };
  const auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "machine-readable report on stdout");
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--time-limit", o.time_limit, "seconds before giving up")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { o.time_limit_given = true; });
    sub->add_option("--node-limit", o.node_limit, "search nodes before giving up")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { o.node_limit_given = true; });
  };
  const auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* build = app.add_subcommand("build", "visibility graph of a point set");
  add_points(build);
  build->add_option("--out", o.out_path, "write the graph file here");
  add_workers(build);
  add_json(build);

  CLI::App* check = app.add_subcommand("check", "necessary-condition report for a graph");
  add_graph(check);
  add_budget(check);
  add_json(check);

  CLI::App* planar = app.add_subcommand("planar", "planar visibility classification");
  add_graph(planar);
  planar->add_option("--out", o.out_path, "write reconstructed points here");
  add_json(planar);

  CLI::App* hamcycle = app.add_subcommand("hamcycle", "Hamiltonian cycle of an embedding");
  add_points(hamcycle);
  add_json(hamcycle);

  CLI::App* audit = app.add_subcommand("audit", "structural invariants of an embedding");
  add_points(audit);
  audit->add_option("--seed", o.seed, "blocker-sampling seed");
  add_json(audit);

  CLI::App* search = app.add_subcommand("search", "exhaustive grid embedding search");
  add_graph(search);
  search->add_option("--grid", o.grid, "grid size WxH")->required();
  search->add_option("--out", o.out_path, "write found points here");
  add_budget(search);
  add_workers(search);
  add_json(search);

  CLI::App* gadget = app.add_subcommand("gadget", "universal-blocker extension of a graph");
  add_graph(gadget);
  gadget->add_option("--out", o.out_path, "output directory")->required();
  add_json(gadget);

  CLI::App* etr = app.add_subcommand("etr", "realizability formula as SMT-LIB 2");
  add_graph(etr);
  etr->add_option("--out", o.out_path, "write the .smt2 script here");
  etr->add_flag("--paper-compat", o.compat, "emit t < -1 in the outside-segment branch");
  add_json(etr);

  CLI::App* catalog = app.add_subcommand("catalog", "sporadic planar classes by grid");
  catalog->add_option("--grid", o.grid, "enumerate exactly this grid instead of escalating");
  catalog->add_option("--out", o.out_path, "output directory");
  add_budget(catalog);
  add_workers(catalog);
  add_json(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (build->parsed()) return run_build(o);
    if (check->parsed()) return run_check(o);
    if (planar->parsed()) return run_planar(o);
    if (hamcycle->parsed()) return run_hamcycle(o);
    if (audit->parsed()) return run_audit(o);
    if (search->parsed()) return run_search(o);
    if (gadget->parsed()) return run_gadget(o);
    if (etr->parsed()) return run_etr(o);
    if (catalog->parsed()) return run_catalog(o);
  } catch (const pvg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

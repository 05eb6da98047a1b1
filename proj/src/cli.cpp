#include "uarnc/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "uarnc/config.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/parallel.hpp"
#include "uarnc/results_io.hpp"

namespace uarnc {

namespace {

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  std::optional<int> runs;
  int threads = 0;
};

// "1,2,5..8" -> {1, 2, 5, 6, 7, 8}
std::vector<int> parse_values(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw ValidationError("empty range '" + item + "' in --values");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw ValidationError("bad entry '" + item + "' in --values");
    }
  }
  if (out.empty()) throw ValidationError("--values is empty");
  return out;
}

std::vector<SchemeKind> parse_scheme_list(const std::string& text) {
  std::vector<SchemeKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_scheme(item));
  if (out.empty()) throw ValidationError("--schemes is empty");
  return out;
}

PlacementSpec::Kind parse_placement(const std::string& name) {
  if (name == "fixed") return PlacementSpec::Kind::Fixed;
  if (name == "pso") return PlacementSpec::Kind::Pso;
  if (name == "grid") return PlacementSpec::Kind::Grid;
  throw ValidationError("unknown placement '" + name + "' (expected fixed | pso | grid)");
}

class Runner {
 public:
  Runner(const GlobalOptions& g, std::ostream& out, std::ostream& err)
      : g_(g), out_(out), err_(err) {
    config_ = g.config_path.empty() ? default_config() : load_config(g.config_path);
    if (g.seed) {
      config_.mc.master_seed = *g.seed;
      config_.scenario.seed = *g.seed;
    }
    if (g.runs) config_.mc.runs = *g.runs;
    if (!g.out.empty()) config_.output_path = g.out;
    if (g.format != "csv" && g.format != "json")
      throw ValidationError("--format must be csv or json");
    config_.resolve();
    workers_ = resolve_workers(g.threads);
  }

  ExperimentConfig& config() { return config_; }
  int workers() const { return workers_; }

  void emit(const ResultsTable& table) {
    const std::string body = g_.format == "json" ? results_json(table) : results_csv(table);
    if (config_.output_path.empty()) {
      out_ << body;
      return;
    }
    write_text(config_.output_path, body);
    write_text(config_.output_path + ".config.json", config_to_json(config_));
  }

  void emit_side(const std::string& suffix, const std::string& body) {
    if (!config_.output_path.empty()) write_text(config_.output_path + suffix, body);
  }

  void note(const std::string& line) { err_ << line << '\n'; }

 private:
  const GlobalOptions& g_;
  std::ostream& out_;
  std::ostream& err_;
  ExperimentConfig config_;
  int workers_ = 1;
};

void cmd_simulate(Runner& r, const std::string& scheme, Point2D q) {
  const Scenario s = r.config().build_scenario();
  const SchemeKind kind = parse_scheme(scheme);
  r.emit({monte_carlo(s, q, kind, r.config().mc, r.workers(), r.config().reception)});
}

void cmd_place(Runner& r, const std::string& method, std::optional<double> grid_step) {
  auto& c = r.config();
  if (grid_step) c.grid_step = *grid_step;
  c.resolve();
  const auto kind = parse_placement(method);
  if (kind == PlacementSpec::Kind::Fixed) throw ValidationError("--method must be pso or grid");
  const Scenario s = c.build_scenario();
  const SwarmResult placed = place(s, c.placement(kind), c.mc, 0, r.workers(), c.reception);
  r.note("q* = (" + format_real(placed.q_star.x) + ", " + format_real(placed.q_star.y) +
         ") fitness " + format_real(placed.fitness));
  r.emit({monte_carlo(s, placed.q_star, SchemeKind::Uarnc, c.mc, r.workers(), c.reception)});
  r.emit_side(".placement.json", placement_json(placed));
}

struct SweepArgs {
  std::string param = "L";
  std::string values;
  std::string placement = "fixed";
  double qx = 0.0;
  double qy = 0.0;
  std::optional<double> grid_step;
  std::string schemes;
};

void cmd_sweep(Runner& r, const SweepArgs& a) {
  auto& c = r.config();
  if (a.grid_step) c.grid_step = *a.grid_step;
  if (!a.schemes.empty()) c.schemes = parse_scheme_list(a.schemes);
  c.resolve();
  if (a.param != "L" && a.param != "T") throw ValidationError("--param must be L or T");
  const SweepParam param = a.param == "L" ? SweepParam::L : SweepParam::T;
  const auto values = parse_values(a.values);
  const Scenario s = c.build_scenario();
  const auto kind = parse_placement(a.placement);
  const auto result = sweep(s, param, values, c.schemes, c.mc, c.placement(kind, {a.qx, a.qy}),
                            r.workers(), c.reception);
  r.emit(result.table);
  if (kind != PlacementSpec::Kind::Fixed)
    r.emit_side(".placements.json", placements_json(result.placements));
}

void cmd_preset(Runner& r, const std::string& name) {
  auto& c = r.config();
  Scenario s;
  SweepParam param = SweepParam::L;
  std::vector<int> values;
  bool with_grid = false;
  if (name == "fig2-uniform" || name == "fig2-clustered") {
    c.scenario.layout = name == "fig2-uniform" ? Layout::Uniform : Layout::Clusters;
    if (c.scenario.layout == Layout::Clusters && c.scenario.clusters.empty())
      c.scenario.clusters = default_clusters(c.scenario.k);
    c.resolve();
    s = c.build_scenario();
    values = {s.layers};
    std::string users = "x,y\n";
    for (const auto& u : s.users) users += format_real(u.x) + "," + format_real(u.y) + "\n";
    r.emit_side(".users.csv", users);
  } else if (name == "fig3") {
    c.base.slots = 10;
    c.resolve();
    s = c.build_scenario();
    values = {1, 2, 3, 4, 5, 6, 7, 8};
    with_grid = true;
  } else if (name == "fig4") {
    c.base.layers = 4;
    if (c.base.fairness.l_min > 4) c.base.fairness.l_min = 4;
    c.base.slots = 10;
    c.resolve();
    s = c.build_scenario();
    param = SweepParam::T;
    values = {4, 5, 6, 7, 8, 9, 10};
  } else {
    throw ValidationError("unknown preset '" + name +
                          "' (expected fig2-uniform | fig2-clustered | fig3 | fig4)");
  }

  auto result = sweep(s, param, values, c.schemes, c.mc, c.placement(PlacementSpec::Kind::Pso),
                      r.workers(), c.reception);
  if (!with_grid) {
    r.emit(result.table);
    r.emit_side(".placements.json", placements_json(result.placements));
    return;
  }

  // uarnc-es: UARNC flown at the exhaustive-search optimum, one row per value
  // after that value's scheme rows.
  const auto es = sweep(s, param, values, std::vector<SchemeKind>{SchemeKind::Uarnc}, c.mc,
                        c.placement(PlacementSpec::Kind::Grid), r.workers(), c.reception);
  ResultsTable merged;
  const std::size_t per_value = c.schemes.size();
  for (std::size_t v = 0; v < values.size(); ++v) {
    for (std::size_t k = 0; k < per_value; ++k) merged.push_back(result.table[v * per_value + k]);
    ResultRow row = es.table[v];
    row.scheme = "uarnc-es";
    merged.push_back(row);
  }
  r.emit(merged);
  auto placements = result.placements;
  placements.insert(placements.end(), es.placements.begin(), es.placements.end());
  r.emit_side(".placements.json", placements_json(placements));
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"UAV-assisted layered multicast with adaptive network coding"};
  app.name("uarnc");
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON experiment configuration");
  app.add_option("--seed", g.seed, "master seed (overrides the config)");
  app.add_option("--out", g.out, "output path; stdout if omitted");
  app.add_option("--format", g.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--runs", g.runs, "Monte Carlo replications (overrides the config)");
  app.add_option("--threads", g.threads, "worker threads; 0 = UARNC_THREADS or all cores");

  auto* simulate = app.add_subcommand("simulate", "one scenario, scheme and position")->fallthrough();
  std::string scheme = "uarnc";
  double qx = 0.0, qy = 0.0;
  simulate->add_option("--scheme", scheme, "uarnc | uarnc-fixed | rnc | arq | rrs");
  simulate->add_option("--qx", qx, "UAV x (m)");
  simulate->add_option("--qy", qy, "UAV y (m)");

  auto* place_cmd = app.add_subcommand("place", "optimize the UAV position")->fallthrough();
  std::string method = "pso";
  std::optional<double> place_step;
  place_cmd->add_option("--method", method, "pso | grid");
  place_cmd->add_option("--grid-step", place_step, "grid spacing (m)");

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep L or T")->fallthrough();
  SweepArgs sa;
  sweep_cmd->add_option("--param", sa.param, "L | T");
  sweep_cmd->add_option("--values", sa.values, "e.g. 1,2,3 or 4..10")->required();
  sweep_cmd->add_option("--placement", sa.placement, "fixed | pso | grid");
  sweep_cmd->add_option("--qx", sa.qx, "fixed placement x (m)");
  sweep_cmd->add_option("--qy", sa.qy, "fixed placement y (m)");
  sweep_cmd->add_option("--grid-step", sa.grid_step, "grid spacing (m)");
  sweep_cmd->add_option("--schemes", sa.schemes, "comma-separated scheme list");

  auto* preset = app.add_subcommand("preset", "reproduce a named experiment")->fallthrough();
  std::string preset_name;
  preset->add_option("name", preset_name, "fig2-uniform | fig2-clustered | fig3 | fig4")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    Runner runner(g, out, err);
    if (simulate->parsed()) cmd_simulate(runner, scheme, {qx, qy});
    else if (place_cmd->parsed()) cmd_place(runner, method, place_step);
    else if (sweep_cmd->parsed()) cmd_sweep(runner, sa);
    else if (preset->parsed()) cmd_preset(runner, preset_name);
    return 0;
  } catch (const InfeasibleProblem& e) {
    err << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return execute(args, out, err);
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return execute(args, std::cout, std::cerr);
}

}  // namespace uarnc

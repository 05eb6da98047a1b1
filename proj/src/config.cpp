#include "uarnc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uarnc/errors.hpp"

namespace uarnc {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object())
    throw ValidationError("config key '" + std::string(where) + "' must be an object");
  const std::set<std::string_view> ok(allowed);
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) {
      const std::string path = where.empty() ? key : std::string(where) + "." + key;
      throw ValidationError("unknown config key '" + path + "'");
    }
  }
}

template <class T>
void read(const json& obj, std::string_view where, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    const std::string path = where.empty() ? key : std::string(where) + "." + key;
    throw ValidationError("config key '" + path + "': " + e.what());
  }
}

Point2D read_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("config key '" + where + "' must be an [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_json(Point2D p) { return json::array({p.x, p.y}); }

std::string_view ber_model_name(BerModel m) {
  return m == BerModel::StandardBpsk ? "bpsk" : "paper";
}

BerModel parse_ber_model(const std::string& s) {
  if (s == "paper") return BerModel::PaperQ2SqrtGamma;
  if (s == "bpsk") return BerModel::StandardBpsk;
  throw ValidationError("config key 'radio.ber_model' must be \"paper\" or \"bpsk\"");
}

}  // namespace

void ExperimentConfig::resolve() {
  base.radio.beta0 = db_to_linear(beta0_db);
  base.radio.sigma2 = db_to_linear(sigma2_db);
  base.area.validate();
  base.radio.validate();
  if (!(base.altitude > 0.0)) throw ValidationError("altitude must be positive");
  if (base.layers < 1) throw ValidationError("coding.L must be >= 1");
  if (base.slots < base.layers)
    throw ValidationError("Deadline T (T ≥ L) violated: coding.T=" + std::to_string(base.slots) +
                          " < coding.L=" + std::to_string(base.layers));
  if (base.fairness.l_min < 1 || base.fairness.l_min > base.layers)
    throw ValidationError("fairness.l_min must lie in [1, L]");
  if (!(base.fairness.p_th >= 0.0 && base.fairness.p_th <= 1.0))
    throw ValidationError("fairness.p_th must lie in [0, 1]");
  pso.bounds = base.area;
  pso.vmax = vmax.value_or(PsoParams::default_vmax(base.area));
  pso.validate();
  if (fitness_runs < 1) throw ValidationError("pso.fitness_runs must be >= 1");
  if (mc.runs < 1) throw ValidationError("monte_carlo.runs must be >= 1");
  if (!(grid_step > 0.0)) throw ValidationError("grid_step must be > 0");
  if (schemes.empty()) throw ValidationError("schemes must not be empty");
  scenario.validate();
  if (scenario.layout == Layout::Explicit) {
    for (const auto& u : scenario.users)
      if (!base.area.contains(u)) throw ValidationError("scenario user lies outside the area");
  }
}

Scenario ExperimentConfig::build_scenario() const { return generate_scenario(scenario, base); }

PlacementSpec ExperimentConfig::placement(PlacementSpec::Kind kind, Point2D q) const {
  PlacementSpec p;
  p.kind = kind;
  p.q = q;
  p.pso = pso;
  p.fitness_runs = fitness_runs;
  p.grid_step = grid_step;
  return p;
}

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.scenario.clusters = default_clusters(c.scenario.k);
  c.resolve();
  return c;
}

ExperimentConfig parse_config(std::string_view text) {
  json root;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    root = json::object();
  } else {
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("config parse error: ") + e.what());
    }
  }
  reject_unknown(root, "",
                 {"scenario", "area", "altitude", "radio", "coding", "fairness", "pso",
                  "monte_carlo", "grid_step", "reception", "schemes", "output"});

  ExperimentConfig c;
  bool clusters_given = false;
  if (auto it = root.find("scenario"); it != root.end()) {
    const json& s = *it;
    reject_unknown(s, "scenario", {"layout", "k", "users", "clusters", "seed"});
    std::string layout = std::string(layout_name(c.scenario.layout));
    read(s, "scenario", "layout", layout);
    c.scenario.layout = parse_layout(layout);
    read(s, "scenario", "k", c.scenario.k);
    read(s, "scenario", "seed", c.scenario.seed);
    if (auto u = s.find("users"); u != s.end()) {
      if (!u->is_array()) throw ValidationError("config key 'scenario.users' must be an array");
      for (std::size_t i = 0; i < u->size(); ++i)
        c.scenario.users.push_back(read_point((*u)[i], "scenario.users[" + std::to_string(i) + "]"));
    }
    if (auto cl = s.find("clusters"); cl != s.end()) {
      if (!cl->is_array()) throw ValidationError("config key 'scenario.clusters' must be an array");
      clusters_given = true;
      for (std::size_t i = 0; i < cl->size(); ++i) {
        const std::string where = "scenario.clusters[" + std::to_string(i) + "]";
        const json& cj = (*cl)[i];
        reject_unknown(cj, where, {"center", "sigma", "count"});
        Cluster cluster;
        if (!cj.contains("center")) throw ValidationError("config key '" + where + ".center' is required");
        cluster.center = read_point(cj["center"], where + ".center");
        read(cj, where, "sigma", cluster.sigma);
        read(cj, where, "count", cluster.count);
        c.scenario.clusters.push_back(cluster);
      }
    }
  }
  if (!clusters_given) c.scenario.clusters = default_clusters(c.scenario.k);

  if (auto it = root.find("area"); it != root.end()) {
    reject_unknown(*it, "area", {"xmin", "xmax", "ymin", "ymax"});
    read(*it, "area", "xmin", c.base.area.xmin);
    read(*it, "area", "xmax", c.base.area.xmax);
    read(*it, "area", "ymin", c.base.area.ymin);
    read(*it, "area", "ymax", c.base.area.ymax);
  }
  read(root, "", "altitude", c.base.altitude);

  if (auto it = root.find("radio"); it != root.end()) {
    reject_unknown(*it, "radio", {"pt_w", "beta0_db", "sigma2_db", "n_bits", "ber_model"});
    read(*it, "radio", "pt_w", c.base.radio.pt);
    read(*it, "radio", "beta0_db", c.beta0_db);
    read(*it, "radio", "sigma2_db", c.sigma2_db);
    read(*it, "radio", "n_bits", c.base.radio.n_bits);
    std::string model = std::string(ber_model_name(c.base.radio.ber_model));
    read(*it, "radio", "ber_model", model);
    c.base.radio.ber_model = parse_ber_model(model);
  }
  if (auto it = root.find("coding"); it != root.end()) {
    reject_unknown(*it, "coding", {"L", "T"});
    read(*it, "coding", "L", c.base.layers);
    read(*it, "coding", "T", c.base.slots);
  }
  if (auto it = root.find("fairness"); it != root.end()) {
    reject_unknown(*it, "fairness", {"l_min", "p_th"});
    read(*it, "fairness", "l_min", c.base.fairness.l_min);
    read(*it, "fairness", "p_th", c.base.fairness.p_th);
  }
  if (auto it = root.find("pso"); it != root.end()) {
    reject_unknown(*it, "pso",
                   {"w", "c1", "c2", "sizepop", "maxg", "vmax", "stall_iterations", "fitness_runs"});
    read(*it, "pso", "w", c.pso.w);
    read(*it, "pso", "c1", c.pso.c1);
    read(*it, "pso", "c2", c.pso.c2);
    read(*it, "pso", "sizepop", c.pso.sizepop);
    read(*it, "pso", "maxg", c.pso.maxg);
    read(*it, "pso", "stall_iterations", c.pso.stall_iterations);
    read(*it, "pso", "fitness_runs", c.fitness_runs);
    if (auto v = it->find("vmax"); v != it->end() && !v->is_null()) {
      double vmax = 0.0;
      read(*it, "pso", "vmax", vmax);
      c.vmax = vmax;
    }
  }
  if (auto it = root.find("monte_carlo"); it != root.end()) {
    reject_unknown(*it, "monte_carlo", {"runs", "master_seed"});
    read(*it, "monte_carlo", "runs", c.mc.runs);
    read(*it, "monte_carlo", "master_seed", c.mc.master_seed);
  }
  read(root, "", "grid_step", c.grid_step);
  if (auto it = root.find("reception"); it != root.end()) {
    std::string r;
    read(root, "", "reception", r);
    c.reception = parse_reception(r);
  }
  if (auto it = root.find("schemes"); it != root.end()) {
    std::vector<std::string> names;
    read(root, "", "schemes", names);
    c.schemes.clear();
    for (const auto& n : names) c.schemes.push_back(parse_scheme(n));
  }
  if (auto it = root.find("output"); it != root.end()) {
    reject_unknown(*it, "output", {"path"});
    read(*it, "output", "path", c.output_path);
  }
  c.resolve();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json users = json::array();
  for (const auto& u : c.scenario.users) users.push_back(point_json(u));
  json clusters = json::array();
  for (const auto& cl : c.scenario.clusters)
    clusters.push_back({{"center", point_json(cl.center)}, {"sigma", cl.sigma}, {"count", cl.count}});
  json schemes = json::array();
  for (auto s : c.schemes) schemes.push_back(std::string(scheme_name(s)));

  json root = {
      {"scenario",
       {{"layout", std::string(layout_name(c.scenario.layout))},
        {"k", c.scenario.k},
        {"users", users},
        {"clusters", clusters},
        {"seed", c.scenario.seed}}},
      {"area",
       {{"xmin", c.base.area.xmin},
        {"xmax", c.base.area.xmax},
        {"ymin", c.base.area.ymin},
        {"ymax", c.base.area.ymax}}},
      {"altitude", c.base.altitude},
      {"radio",
       {{"pt_w", c.base.radio.pt},
        {"beta0_db", c.beta0_db},
        {"sigma2_db", c.sigma2_db},
        {"n_bits", c.base.radio.n_bits},
        {"ber_model", std::string(ber_model_name(c.base.radio.ber_model))}}},
      {"coding", {{"L", c.base.layers}, {"T", c.base.slots}}},
      {"fairness", {{"l_min", c.base.fairness.l_min}, {"p_th", c.base.fairness.p_th}}},
      {"pso",
       {{"w", c.pso.w},
        {"c1", c.pso.c1},
        {"c2", c.pso.c2},
        {"sizepop", c.pso.sizepop},
        {"maxg", c.pso.maxg},
        {"vmax", c.pso.vmax},
        {"stall_iterations", c.pso.stall_iterations},
        {"fitness_runs", c.fitness_runs}}},
      {"monte_carlo", {{"runs", c.mc.runs}, {"master_seed", c.mc.master_seed}}},
      {"grid_step", c.grid_step},
      {"reception", std::string(reception_name(c.reception))},
      {"schemes", schemes},
      {"output", {{"path", c.output_path}}},
  };
  return root.dump(2) + "\n";
}

}  // namespace uarnc

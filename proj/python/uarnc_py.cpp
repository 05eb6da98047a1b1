#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uarnc/analytics.hpp"
#include "uarnc/cli.hpp"
#include "uarnc/coding.hpp"
#include "uarnc/config.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/gf256.hpp"
#include "uarnc/rng.hpp"
#include "uarnc/scheduler.hpp"

namespace py = pybind11;
using namespace uarnc;

namespace {

py::dict row_dict(const ResultRow& r) {
  py::dict d;
  d["scheme"] = r.scheme;
  d["L"] = r.layers;
  d["T"] = r.slots;
  d["K"] = r.users;
  d["q"] = py::make_tuple(r.q.x, r.q.y);
  d["mean_throughput"] = r.mean_throughput;
  d["ci95_lo"] = r.ci95_lo;
  d["ci95_hi"] = r.ci95_hi;
  d["runs"] = r.runs;
  d["seed"] = r.seed;
  d["feasible"] = r.feasible;
  return d;
}

ExperimentConfig config_from(const std::string& text, std::optional<int> runs,
                             std::optional<std::uint64_t> seed) {
  ExperimentConfig c = parse_config(text);
  if (runs) c.mc.runs = *runs;
  if (seed) {
    c.mc.master_seed = *seed;
    c.scenario.seed = *seed;
  }
  c.resolve();
  return c;
}

}  // namespace

PYBIND11_MODULE(_uarnc, m) {
  m.doc() = "UAV-assisted layered multicast with adaptive random network coding.";

  // Translators run most-recent first, so the base class goes in first.
  const auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<InfeasibleProblem>(m, "InfeasibleProblem", base.ptr());
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", base.ptr());

  m.def("gf_mul", [](int a, int b) { return static_cast<int>(gf::mul(static_cast<gf::Element>(a), static_cast<gf::Element>(b))); });
  m.def("gf_inv", [](int a) { return static_cast<int>(gf::inv(static_cast<gf::Element>(a))); });

  m.def(
      "packet_error_rate",
      [](std::pair<double, double> q, std::pair<double, double> user, double altitude,
         double pt_w, double beta0_db, double sigma2_db, int n_bits, const std::string& model) {
        RadioParams radio;
        radio.pt = pt_w;
        radio.beta0 = db_to_linear(beta0_db);
        radio.sigma2 = db_to_linear(sigma2_db);
        radio.n_bits = n_bits;
        radio.ber_model = model == "bpsk" ? BerModel::StandardBpsk : BerModel::PaperQ2SqrtGamma;
        radio.validate();
        return packet_error_rate({{q.first, q.second}, altitude}, {user.first, user.second}, radio);
      },
      py::arg("q"), py::arg("user"), py::arg("altitude") = 200.0, py::arg("pt_w") = 0.025,
      py::arg("beta0_db") = -70.0, py::arg("sigma2_db") = -150.0, py::arg("n_bits") = 10,
      py::arg("ber_model") = "paper");

  m.def("generic_prefix", [](const std::vector<int>& gens) { return generic_prefix(gens); },
        py::arg("generators"));
  m.def("decode_prob", &decode_prob, py::arg("l"), py::arg("L"), py::arg("T"), py::arg("p"));
  m.def("at_least_prob", &at_least_prob, py::arg("l"), py::arg("L"), py::arg("T"), py::arg("p"));

  m.def(
      "episode_throughput",
      [](int layers, int slots, const std::vector<double>& pers, const std::string& scheme,
         std::uint64_t seed) {
        Rng rng(seed);
        return episode_throughput(layers, slots, pers, parse_scheme(scheme), rng);
      },
      py::arg("L"), py::arg("T"), py::arg("pers"), py::arg("scheme"), py::arg("seed"));
  m.def(
      "enumerate_exact",
      [](int layers, int slots, const std::vector<double>& pers, const std::string& scheme) {
        return enumerate_exact(EpisodeSetup{layers, slots}, pers, parse_scheme(scheme));
      },
      py::arg("L"), py::arg("T"), py::arg("pers"), py::arg("scheme"));

  m.def(
      "resolve_config",
      [](const std::string& text) { return config_to_json(parse_config(text)); },
      py::arg("config_json") = "",
      "Fully-resolved configuration (defaults applied) as JSON text.");

  m.def(
      "simulate",
      [](const std::string& config_json, const std::string& scheme, std::pair<double, double> q,
         std::optional<int> runs, std::optional<std::uint64_t> seed) {
        const auto c = config_from(config_json, runs, seed);
        py::gil_scoped_release release;
        const auto row = monte_carlo(c.build_scenario(), {q.first, q.second}, parse_scheme(scheme),
                                     c.mc, 0, c.reception);
        py::gil_scoped_acquire acquire;
        return row_dict(row);
      },
      py::arg("config_json") = "", py::arg("scheme") = "uarnc",
      py::arg("q") = std::pair<double, double>{0.0, 0.0}, py::arg("runs") = py::none(),
      py::arg("seed") = py::none());

  m.def(
      "place",
      [](const std::string& config_json, const std::string& method, std::optional<int> runs,
         std::optional<std::uint64_t> seed) {
        const auto c = config_from(config_json, runs, seed);
        const auto kind = method == "grid" ? PlacementSpec::Kind::Grid : PlacementSpec::Kind::Pso;
        if (method != "grid" && method != "pso") throw ValidationError("method must be pso or grid");
        SwarmResult r;
        {
          py::gil_scoped_release release;
          r = place(c.build_scenario(), c.placement(kind), c.mc, 0, 0, c.reception);
        }
        py::list trace;
        for (const auto& t : r.trace) {
          py::dict e;
          e["iter"] = t.iter;
          e["gbest_fit"] = t.gbest_fit;
          e["q"] = py::make_tuple(t.q.x, t.q.y);
          trace.append(e);
        }
        py::dict d;
        d["q"] = py::make_tuple(r.q_star.x, r.q_star.y);
        d["fitness"] = r.fitness;
        d["evaluations"] = r.evaluations;
        d["trace"] = trace;
        return d;
      },
      py::arg("config_json") = "", py::arg("method") = "pso", py::arg("runs") = py::none(),
      py::arg("seed") = py::none());

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_command(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the CLI in-process; returns (exit_code, stdout, stderr).");
}

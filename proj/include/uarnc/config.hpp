#pragma once

// Experiment configuration: a JSON document whose every key is optional.
// dB-valued keys carry a `_db` suffix and are converted to linear units once,
// here. Unknown keys are rejected.
//
//   {
//     "scenario":    {"layout": "uniform" | "clusters" | "explicit", "k": 20,
//                     "users": [[x, y], ...],
//                     "clusters": [{"center": [x, y], "sigma": 60, "count": 7}],
//                     "seed": 1},
//     "area":        {"xmin": -500, "xmax": 500, "ymin": -500, "ymax": 500},
//     "altitude":    200,
//     "radio":       {"pt_w": 0.025, "beta0_db": -70, "sigma2_db": -150,
//                     "n_bits": 10, "ber_model": "paper" | "bpsk"},
//     "coding":      {"L": 4, "T": 10},
//     "fairness":    {"l_min": 1, "p_th": 0.9},
//     "pso":         {"w": 0.729, "c1": 1.4955, "c2": 1.4955, "sizepop": 100,
//                     "maxg": 400, "vmax": null, "stall_iterations": 0,
//                     "fitness_runs": 200},
//     "monte_carlo": {"runs": 200, "master_seed": 1},
//     "grid_step":   50,
//     "reception":   "generic" | "elimination",
//     "schemes":     ["uarnc", "uarnc-fixed", "rnc", "arq", "rrs"],
//     "output":      {"path": "results.csv"}
//   }

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uarnc/harness.hpp"

namespace uarnc {

struct ExperimentConfig {
  ScenarioSpec scenario;
  Scenario base;  ///< area, altitude, radio (linear), L, T, fairness; no users
  double beta0_db = -70.0;
  double sigma2_db = -150.0;
  PsoParams pso;
  std::optional<double> vmax;  ///< unset: 20% of the larger area side
  int fitness_runs = 200;
  MonteCarloParams mc;
  double grid_step = 50.0;
  ReceptionModel reception = ReceptionModel::Generic;
  std::vector<SchemeKind> schemes{SchemeKind::Uarnc, SchemeKind::UarncFixed, SchemeKind::Rnc,
                                  SchemeKind::Arq, SchemeKind::Rrs};
  std::string output_path;

  /// Re-derives linear radio values and PSO bounds/vmax from the fields
  /// above, then validates every invariant. Throws ValidationError.
  void resolve();

  /// Users generated from `scenario` on top of `base`.
  Scenario build_scenario() const;

  PlacementSpec placement(PlacementSpec::Kind kind, Point2D q = {}) const;
};

ExperimentConfig default_config();

/// Throws ValidationError with the offending key or JSON line/column.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully-resolved configuration in the input schema; parse_config of the
/// result reproduces the same experiment.
std::string config_to_json(const ExperimentConfig& config);

}  // namespace uarnc

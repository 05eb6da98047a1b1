#pragma once

// Scenario generation, Monte Carlo estimation and parameter sweeps.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uarnc/placement.hpp"
#include "uarnc/scenario.hpp"
#include "uarnc/scheme.hpp"

namespace uarnc {

enum class Layout { Explicit, Uniform, Clusters };

struct Cluster {
  Point2D center;
  double sigma = 60.0;  ///< meters; 0 puts every member on the center
  int count = 0;
};

struct ScenarioSpec {
  Layout layout = Layout::Uniform;
  std::vector<Point2D> users;     ///< Explicit
  int k = 20;                     ///< Uniform
  std::vector<Cluster> clusters;  ///< Clusters
  std::uint64_t seed = 1;

  /// Number of users the spec produces.
  int user_count() const;
  void validate() const;
};

/// Three hotspots with sigma = 60 m and k users split as evenly as possible.
std::vector<Cluster> default_clusters(int k);

std::string_view layout_name(Layout layout);
Layout parse_layout(std::string_view name);

/// Fills base.users from the spec; everything else is copied from base.
/// Cluster members are Gaussian around their center, resampled until they
/// fall inside the area.
Scenario generate_scenario(const ScenarioSpec& spec, const Scenario& base);

struct SampleSummary {
  double mean = 0.0;
  double stddev = 0.0;   ///< sample standard deviation (n - 1)
  double std_error = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
};

/// Mean and normal-approximation 95% interval. Compensated sums in index
/// order, so identical samples give an exact mean and a zero-width interval.
SampleSummary summarize(std::span<const double> samples);

struct ResultRow {
  std::string scheme;
  int layers = 0;
  int slots = 0;
  int users = 0;
  Point2D q;
  double mean_throughput = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  int runs = 0;
  std::uint64_t seed = 0;
  bool feasible = true;
};

using ResultsTable = std::vector<ResultRow>;

/// Per-replication throughputs; run r is seeded with
/// derive_seed(mc.master_seed, "episode", r).
std::vector<double> monte_carlo_samples(const Scenario& scenario, Point2D q, SchemeKind scheme,
                                        const MonteCarloParams& mc, int workers = 0,
                                        ReceptionModel reception = ReceptionModel::Generic);

/// One results row for a scheme at q (uarnc-fixed ignores q and uses the
/// origin). The feasibility flag reports the fairness check at the position
/// actually flown.
ResultRow monte_carlo(const Scenario& scenario, Point2D q, SchemeKind scheme,
                      const MonteCarloParams& mc, int workers = 0,
                      ReceptionModel reception = ReceptionModel::Generic);

enum class SweepParam { L, T };

struct PlacementSpec {
  enum class Kind { Fixed, Pso, Grid };
  Kind kind = Kind::Fixed;
  Point2D q;                ///< Fixed: position flown by every scheme
  PsoParams pso;
  int fitness_runs = 200;   ///< replications per fitness evaluation
  double grid_step = 50.0;
};

struct PlacementRecord {
  int value = 0;       ///< sweep value this placement was optimized for
  std::string method;  ///< "pso" or "grid"
  SwarmResult result;
};

struct SweepResult {
  ResultsTable table;
  std::vector<PlacementRecord> placements;
};

/// One row per (value, scheme) in that order. With Pso/Grid placement the
/// position is re-optimized per value and flown by uarnc; uarnc-fixed and
/// the baselines stay at the fixed base-station location (the origin).
/// Throws SweepDomainError if any value breaks T >= L.
SweepResult sweep(const Scenario& base, SweepParam param, std::span<const int> values,
                  std::span<const SchemeKind> schemes, const MonteCarloParams& mc,
                  const PlacementSpec& placement, int workers = 0,
                  ReceptionModel reception = ReceptionModel::Generic);

std::string_view placement_method_name(PlacementSpec::Kind kind);

/// Runs the placement search for one scenario.
SwarmResult place(const Scenario& scenario, const PlacementSpec& placement,
                  const MonteCarloParams& mc, std::uint64_t stream_index, int workers = 0,
                  ReceptionModel reception = ReceptionModel::Generic);

}  // namespace uarnc

#pragma once

// UAV hover-position search: particle swarm optimization restricted to the
// fairness-feasible region, plus an exhaustive grid search used as its
// reference. Fitness is the Monte Carlo mean UARNC throughput over a
// replication seed set shared by every candidate position.

#include <cstdint>
#include <vector>

#include "uarnc/scenario.hpp"
#include "uarnc/scheme.hpp"

namespace uarnc {

class Rng;

struct PsoParams {
  double w = 0.729;   ///< inertia
  double c1 = 1.4955; ///< attraction to the personal best
  double c2 = 1.4955; ///< attraction to the global best
  int sizepop = 100;
  int maxg = 400;     ///< generations, including the initial one
  double vmax = 200.0;
  Area bounds;
  /// Stop after this many generations without a gbest gain above
  /// stall_tolerance; 0 disables.
  int stall_iterations = 0;
  double stall_tolerance = 1e-6;

  void validate() const;
  /// 20% of the larger side of `area`.
  static double default_vmax(const Area& area);
};

struct Particle {
  Point2D o;
  Vec2 v;
  Point2D pbest;
  double pbest_fit = 0.0;
};

struct TraceEntry {
  int iter = 0;
  double gbest_fit = 0.0;
  Point2D q;
};

struct SwarmResult {
  Point2D q_star;
  double fitness = 0.0;
  std::vector<TraceEntry> trace;
  long evaluations = 0;
};

/// Velocity update with explicit per-coordinate attraction weights.
Vec2 update_velocity(const Particle& p, Point2D gbest, const PsoParams& params, Vec2 phi1,
                     Vec2 phi2);
/// Same with phi1, phi2 drawn uniform on [0, 1] per coordinate.
Vec2 update_velocity(const Particle& p, Point2D gbest, const PsoParams& params, Rng& rng);

/// o + v clamped to the bounds; the particle stays put if that candidate
/// violates the fairness constraint.
Point2D update_position(const Particle& p, Vec2 v_new, const Scenario& scenario,
                        const FairnessSpec& spec, const PsoParams& params);

/// Mean UARNC throughput at a position over a fixed replication seed set.
class FitnessEvaluator {
 public:
  FitnessEvaluator(const Scenario& scenario, const MonteCarloParams& mc,
                   ReceptionModel reception = ReceptionModel::Generic);

  double operator()(Point2D q) const;
  int runs() const { return static_cast<int>(seeds_.size()); }

 private:
  Scenario scenario_;
  ReceptionModel reception_;
  std::vector<std::uint64_t> seeds_;
};

double fitness(Point2D q, const Scenario& scenario, const MonteCarloParams& mc);

/// Throws InfeasibleProblem if rejection sampling finds no feasible start.
SwarmResult optimize(const Scenario& scenario, const FairnessSpec& spec, const PsoParams& params,
                     const MonteCarloParams& mc, Rng& rng, int workers = 0,
                     ReceptionModel reception = ReceptionModel::Generic);

/// Best feasible point of the grid xmin + i*step, ymin + j*step. Ties keep
/// the first point in x-major order. Throws InfeasibleProblem if no grid
/// point is feasible.
SwarmResult exhaustive_search(const Scenario& scenario, const FairnessSpec& spec,
                              double grid_step, const MonteCarloParams& mc, int workers = 0,
                              ReceptionModel reception = ReceptionModel::Generic);

std::vector<double> grid_axis(double lo, double hi, double step);

}  // namespace uarnc

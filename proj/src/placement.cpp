#include "uarnc/placement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uarnc/analytics.hpp"
#include "uarnc/baselines.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/parallel.hpp"
#include "uarnc/rng.hpp"
#include "uarnc/scheduler.hpp"

namespace uarnc {

void PsoParams::validate() const {
  bounds.validate();
  if (sizepop < 1) throw ValidationError("pso.sizepop must be >= 1");
  if (maxg < 1) throw ValidationError("pso.maxg must be >= 1");
  if (!(vmax > 0.0)) throw ValidationError("pso.vmax must be > 0");
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) throw ValidationError("pso.c1 and pso.c2 must be >= 0");
  if (!std::isfinite(w)) throw ValidationError("pso.w must be finite");
  if (stall_iterations < 0) throw ValidationError("pso.stall_iterations must be >= 0");
}

double PsoParams::default_vmax(const Area& area) {
  return 0.2 * std::max(area.width(), area.height());
}

Vec2 update_velocity(const Particle& p, Point2D gbest, const PsoParams& params, Vec2 phi1,
                     Vec2 phi2) {
  const Vec2 to_pbest = p.pbest - p.o;
  const Vec2 to_gbest = gbest - p.o;
  Vec2 v{params.w * p.v.x + params.c1 * phi1.x * to_pbest.x + params.c2 * phi2.x * to_gbest.x,
         params.w * p.v.y + params.c1 * phi1.y * to_pbest.y + params.c2 * phi2.y * to_gbest.y};
  v.x = std::clamp(v.x, -params.vmax, params.vmax);
  v.y = std::clamp(v.y, -params.vmax, params.vmax);
  return v;
}

Vec2 update_velocity(const Particle& p, Point2D gbest, const PsoParams& params, Rng& rng) {
  const Vec2 phi1{rng.uniform(), rng.uniform()};
  const Vec2 phi2{rng.uniform(), rng.uniform()};
  return update_velocity(p, gbest, params, phi1, phi2);
}

Point2D update_position(const Particle& p, Vec2 v_new, const Scenario& scenario,
                        const FairnessSpec& spec, const PsoParams& params) {
  const Point2D candidate = params.bounds.clamp(p.o + v_new);
  return feasible(candidate, scenario, spec) ? candidate : p.o;
}

FitnessEvaluator::FitnessEvaluator(const Scenario& scenario, const MonteCarloParams& mc,
                                   ReceptionModel reception)
    : scenario_(scenario), reception_(reception) {
  if (mc.runs < 1) throw ValidationError("monte_carlo.runs must be >= 1");
  seeds_.reserve(static_cast<std::size_t>(mc.runs));
  for (int r = 0; r < mc.runs; ++r)
    seeds_.push_back(derive_seed(mc.master_seed, "episode", static_cast<std::uint64_t>(r)));
}

double FitnessEvaluator::operator()(Point2D q) const {
  const auto pers = scenario_.packet_error_rates(q);
  const EpisodeSetup setup{scenario_.layers, scenario_.slots, reception_};
  double sum = 0.0;
  for (auto seed : seeds_) {
    Rng rng(seed);
    if (reception_ == ReceptionModel::Generic) {
      sum += episode_throughput(setup.layers, setup.slots, pers, SchemeKind::Uarnc, rng);
    } else {
      GstPolicy policy;
      sum += run_episode(setup, pers, policy, rng).throughput;
    }
  }
  return sum / static_cast<double>(seeds_.size());
}

double fitness(Point2D q, const Scenario& scenario, const MonteCarloParams& mc) {
  return FitnessEvaluator(scenario, mc)(q);
}

namespace {

// Evaluates positions concurrently; entries equal to the previous position
// of the same particle reuse the cached fitness (fitness is deterministic
// under common random numbers).
void evaluate_all(const FitnessEvaluator& fit, std::span<const Point2D> positions,
                  std::span<const Point2D> previous, std::span<double> values,
                  std::vector<char>& fresh, int workers) {
  fresh.assign(positions.size(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i)
    fresh[i] = previous.empty() || !(positions[i] == previous[i]) ? 1 : 0;
  parallel_for(positions.size(), workers, [&](std::size_t i) {
    if (fresh[i]) values[i] = fit(positions[i]);
  });
}

}  // namespace

SwarmResult optimize(const Scenario& scenario, const FairnessSpec& spec, const PsoParams& params,
                     const MonteCarloParams& mc, Rng& rng, int workers,
                     ReceptionModel reception) {
  params.validate();
  scenario.validate();
  workers = resolve_workers(workers);
  const FitnessEvaluator fit(scenario, mc, reception);
  const auto n = static_cast<std::size_t>(params.sizepop);
  const int attempts = 10 * params.sizepop;
  const Area& b = params.bounds;

  std::vector<Particle> swarm(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (int a = 0; a < attempts && !placed; ++a) {
      const Point2D cand{rng.uniform(b.xmin, b.xmax), rng.uniform(b.ymin, b.ymax)};
      if (feasible(cand, scenario, spec)) {
        swarm[i].o = cand;
        placed = true;
      }
    }
    if (!placed) {
      if (i == 0)
        throw InfeasibleProblem("no feasible UAV position found in " + std::to_string(attempts) +
                                " samples; the fairness threshold is too strict");
      swarm[i].o = swarm[i - 1].o;
    }
    swarm[i].v = {rng.uniform(-params.vmax, params.vmax), rng.uniform(-params.vmax, params.vmax)};
  }

  std::vector<Point2D> positions(n);
  std::vector<Point2D> previous;
  std::vector<double> values(n, 0.0);
  std::vector<char> fresh;
  for (std::size_t i = 0; i < n; ++i) positions[i] = swarm[i].o;
  evaluate_all(fit, positions, previous, values, fresh, workers);

  SwarmResult result;
  result.evaluations = static_cast<long>(n);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    swarm[i].pbest = swarm[i].o;
    swarm[i].pbest_fit = values[i];
    if (values[i] > values[best]) best = i;
  }
  result.q_star = swarm[best].o;
  result.fitness = values[best];
  result.trace.push_back({0, result.fitness, result.q_star});

  int stalled = 0;
  for (int iter = 1; iter < params.maxg; ++iter) {
    previous = positions;
    for (std::size_t i = 0; i < n; ++i) {
      Particle& p = swarm[i];
      p.v = update_velocity(p, result.q_star, params, rng);
      p.o = update_position(p, p.v, scenario, spec, params);
      positions[i] = p.o;
    }
    evaluate_all(fit, positions, previous, values, fresh, workers);
    const double before = result.fitness;
    for (std::size_t i = 0; i < n; ++i) {
      result.evaluations += fresh[i];
      Particle& p = swarm[i];
      if (values[i] > p.pbest_fit) {
        p.pbest = p.o;
        p.pbest_fit = values[i];
      }
      if (p.pbest_fit > result.fitness) {
        result.fitness = p.pbest_fit;
        result.q_star = p.pbest;
      }
    }
    result.trace.push_back({iter, result.fitness, result.q_star});
    if (params.stall_iterations > 0) {
      stalled = result.fitness - before > params.stall_tolerance ? 0 : stalled + 1;
      if (stalled >= params.stall_iterations) break;
    }
  }
  return result;
}

std::vector<double> grid_axis(double lo, double hi, double step) {
  if (!(step > 0.0)) throw ValidationError("grid step must be > 0");
  std::vector<double> axis;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) axis.push_back(lo + static_cast<double>(i) * step);
  return axis;
}

SwarmResult exhaustive_search(const Scenario& scenario, const FairnessSpec& spec,
                              double grid_step, const MonteCarloParams& mc, int workers,
                              ReceptionModel reception) {
  scenario.validate();
  workers = resolve_workers(workers);
  const auto xs = grid_axis(scenario.area.xmin, scenario.area.xmax, grid_step);
  const auto ys = grid_axis(scenario.area.ymin, scenario.area.ymax, grid_step);
  std::vector<Point2D> points;
  for (double x : xs)
    for (double y : ys)
      if (feasible({x, y}, scenario, spec)) points.push_back({x, y});
  if (points.empty())
    throw InfeasibleProblem("no grid point satisfies the fairness constraint");

  const FitnessEvaluator fit(scenario, mc, reception);
  std::vector<double> values(points.size());
  parallel_for(points.size(), workers, [&](std::size_t i) { values[i] = fit(points[i]); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (values[i] > values[best]) best = i;
  SwarmResult result;
  result.q_star = points[best];
  result.fitness = values[best];
  result.evaluations = static_cast<long>(points.size());
  result.trace.push_back({0, result.fitness, result.q_star});
  return result;
}

}  // namespace uarnc

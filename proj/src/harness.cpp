#include "uarnc/harness.hpp"

#include <cmath>
#include <string>

#include "uarnc/analytics.hpp"
#include "uarnc/baselines.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/parallel.hpp"
#include "uarnc/rng.hpp"
#include "uarnc/scheduler.hpp"

namespace uarnc {

int ScenarioSpec::user_count() const {
  switch (layout) {
    case Layout::Explicit: return static_cast<int>(users.size());
    case Layout::Uniform: return k;
    case Layout::Clusters: {
      int total = 0;
      for (const auto& c : clusters) total += c.count;
      return total;
    }
  }
  return 0;
}

void ScenarioSpec::validate() const {
  if (user_count() < 1) throw ValidationError("scenario needs at least one user (K >= 1)");
  if (layout == Layout::Clusters) {
    for (const auto& c : clusters) {
      if (c.count < 0) throw ValidationError("cluster count must be >= 0");
      if (!(c.sigma >= 0.0) || !std::isfinite(c.sigma))
        throw ValidationError("cluster sigma must be finite and >= 0");
      if (!is_finite(c.center)) throw ValidationError("cluster center must be finite");
    }
  }
}

std::vector<Cluster> default_clusters(int k) {
  const Point2D centers[3] = {{300.0, 300.0}, {350.0, -100.0}, {-50.0, 350.0}};
  std::vector<Cluster> out;
  for (int c = 0; c < 3; ++c) out.push_back({centers[c], 60.0, k / 3 + (c < k % 3 ? 1 : 0)});
  return out;
}

std::string_view layout_name(Layout layout) {
  switch (layout) {
    case Layout::Explicit: return "explicit";
    case Layout::Uniform: return "uniform";
    case Layout::Clusters: return "clusters";
  }
  return "unknown";
}

Layout parse_layout(std::string_view name) {
  if (name == "explicit") return Layout::Explicit;
  if (name == "uniform") return Layout::Uniform;
  if (name == "clusters") return Layout::Clusters;
  throw ValidationError("unknown layout '" + std::string(name) +
                        "' (expected explicit | uniform | clusters)");
}

Scenario generate_scenario(const ScenarioSpec& spec, const Scenario& base) {
  spec.validate();
  Scenario out = base;
  Rng rng(derive_seed(spec.seed, "scenario"));
  const Area& a = base.area;
  switch (spec.layout) {
    case Layout::Explicit:
      out.users = spec.users;
      break;
    case Layout::Uniform:
      out.users.clear();
      for (int i = 0; i < spec.k; ++i) {
        const double x = rng.uniform(a.xmin, a.xmax);
        const double y = rng.uniform(a.ymin, a.ymax);
        out.users.push_back({x, y});
      }
      break;
    case Layout::Clusters:
      out.users.clear();
      for (const auto& c : spec.clusters) {
        if (!a.contains(c.center)) throw ValidationError("cluster center lies outside the area");
        for (int i = 0; i < c.count; ++i) {
          Point2D p = c.center;
          if (c.sigma > 0.0) {
            do {
              const double dx = c.sigma * rng.normal();
              const double dy = c.sigma * rng.normal();
              p = {c.center.x + dx, c.center.y + dy};
            } while (!a.contains(p));
          }
          out.users.push_back(p);
        }
      }
      break;
  }
  out.validate();
  return out;
}

namespace {

template <class F>
double neumaier_sum(std::span<const double> xs, F term) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double v = term(x);
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + carry;
}

}  // namespace

SampleSummary summarize(std::span<const double> samples) {
  SampleSummary s;
  if (samples.empty()) return s;
  const auto n = static_cast<double>(samples.size());
  s.mean = neumaier_sum(samples, [](double x) { return x; }) / n;
  if (samples.size() > 1) {
    const double mean = s.mean;
    const double ss = neumaier_sum(samples, [mean](double x) { return (x - mean) * (x - mean); });
    s.stddev = std::sqrt(ss / (n - 1.0));
    s.std_error = s.stddev / std::sqrt(n);
  }
  s.ci95_lo = s.mean - 1.96 * s.std_error;
  s.ci95_hi = s.mean + 1.96 * s.std_error;
  return s;
}

std::vector<double> monte_carlo_samples(const Scenario& scenario, Point2D q, SchemeKind scheme,
                                        const MonteCarloParams& mc, int workers,
                                        ReceptionModel reception) {
  if (mc.runs < 1) throw ValidationError("monte_carlo.runs must be >= 1");
  const auto pers = scenario.packet_error_rates(scheme_position(scheme, q));
  const EpisodeSetup setup{scenario.layers, scenario.slots, reception};
  std::vector<double> out(static_cast<std::size_t>(mc.runs));
  parallel_for(out.size(), resolve_workers(workers), [&](std::size_t r) {
    Rng rng(derive_seed(mc.master_seed, "episode", r));
    if (reception == ReceptionModel::Generic) {
      out[r] = episode_throughput(setup.layers, setup.slots, pers, scheme, rng);
    } else {
      auto policy = make_policy(scheme);
      out[r] = run_episode(setup, pers, *policy, rng).throughput;
    }
  });
  return out;
}

ResultRow monte_carlo(const Scenario& scenario, Point2D q, SchemeKind scheme,
                      const MonteCarloParams& mc, int workers, ReceptionModel reception) {
  const auto samples = monte_carlo_samples(scenario, q, scheme, mc, workers, reception);
  const auto s = summarize(samples);
  const Point2D flown = scheme_position(scheme, q);
  ResultRow row;
  row.scheme = std::string(scheme_name(scheme));
  row.layers = scenario.layers;
  row.slots = scenario.slots;
  row.users = scenario.user_count();
  row.q = flown;
  row.mean_throughput = s.mean;
  row.ci95_lo = s.ci95_lo;
  row.ci95_hi = s.ci95_hi;
  row.runs = mc.runs;
  row.seed = mc.master_seed;
  row.feasible = feasible(flown, scenario);
  return row;
}

std::string_view placement_method_name(PlacementSpec::Kind kind) {
  switch (kind) {
    case PlacementSpec::Kind::Fixed: return "fixed";
    case PlacementSpec::Kind::Pso: return "pso";
    case PlacementSpec::Kind::Grid: return "grid";
  }
  return "unknown";
}

SwarmResult place(const Scenario& scenario, const PlacementSpec& placement,
                  const MonteCarloParams& mc, std::uint64_t stream_index, int workers,
                  ReceptionModel reception) {
  const MonteCarloParams fit_mc{placement.fitness_runs, mc.master_seed};
  switch (placement.kind) {
    case PlacementSpec::Kind::Pso: {
      Rng rng(derive_seed(mc.master_seed, "pso", stream_index));
      return optimize(scenario, scenario.fairness, placement.pso, fit_mc, rng, workers, reception);
    }
    case PlacementSpec::Kind::Grid:
      return exhaustive_search(scenario, scenario.fairness, placement.grid_step, fit_mc, workers,
                               reception);
    case PlacementSpec::Kind::Fixed:
      break;
  }
  SwarmResult fixed;
  fixed.q_star = placement.q;
  fixed.fitness = FitnessEvaluator(scenario, fit_mc, reception)(placement.q);
  fixed.evaluations = 1;
  fixed.trace.push_back({0, fixed.fitness, fixed.q_star});
  return fixed;
}

SweepResult sweep(const Scenario& base, SweepParam param, std::span<const int> values,
                  std::span<const SchemeKind> schemes, const MonteCarloParams& mc,
                  const PlacementSpec& placement, int workers, ReceptionModel reception) {
  for (int v : values) {
    const int layers = param == SweepParam::L ? v : base.layers;
    const int slots = param == SweepParam::T ? v : base.slots;
    if (layers < 1 || slots < layers)
      throw SweepDomainError("sweep value " + std::to_string(v) +
                             " gives T=" + std::to_string(slots) + " < L=" +
                             std::to_string(layers) + "; Deadline T (T ≥ L) required");
  }
  SweepResult out;
  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    Scenario s = base;
    (param == SweepParam::L ? s.layers : s.slots) = values[vi];
    if (s.fairness.l_min > s.layers) s.fairness.l_min = s.layers;
    s.validate();

    Point2D q_uarnc = placement.q;
    Point2D q_reference = placement.q;
    if (placement.kind != PlacementSpec::Kind::Fixed) {
      auto placed = place(s, placement, mc, vi, workers, reception);
      q_uarnc = placed.q_star;
      q_reference = Point2D{0.0, 0.0};
      out.placements.push_back(
          {values[vi], std::string(placement_method_name(placement.kind)), std::move(placed)});
    }
    for (auto scheme : schemes) {
      const Point2D q = scheme == SchemeKind::Uarnc ? q_uarnc : q_reference;
      out.table.push_back(monte_carlo(s, q, scheme, mc, workers, reception));
    }
  }
  return out;
}

}  // namespace uarnc

#include "uarnc/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uarnc/baselines.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/rng.hpp"

namespace uarnc {

NetworkState NetworkState::empty(int users, int layers, int slots) {
  NetworkState s;
  s.per_user.assign(static_cast<std::size_t>(users), StatusMatrix(layers, slots));
  return s;
}

int planning_prefix(const StatusMatrix& status) {
  return generic_prefix_from_counts(status.generator_counts());
}

namespace {

// Generic prefix of `counts` with one extra packet from generator `gen`,
// without copying the histogram.
int prefix_with_extra(std::span<const int> counts, int gen) {
  const int layers = static_cast<int>(counts.size()) - 1;
  int best = 0;
  int running = 0;
  int d_max = 0;
  for (int l = 1; l <= layers; ++l) {
    running += counts[static_cast<std::size_t>(l)] + (l == gen ? 1 : 0);
    const int d = running - l;
    if (d >= d_max) {
      best = l;
      d_max = d;
    }
  }
  return best;
}

double reward_given_prefixes(const NetworkState& state, std::span<const double> pers,
                             std::span<const int> prefixes, int gen) {
  const int layers = state.layers();
  double reward = 0.0;
  for (std::size_t i = 0; i < state.per_user.size(); ++i) {
    const double success = 1.0 - pers[i];
    if (success <= 0.0 || prefixes[i] == layers) continue;
    const int gain = prefix_with_extra(state.per_user[i].generator_counts(), gen) - prefixes[i];
    reward += success * gain;
  }
  return reward;
}

void check_pers(const NetworkState& state, std::span<const double> pers) {
  if (pers.size() != state.per_user.size())
    throw ParameterError("need one packet error rate per user");
}

}  // namespace

double expected_reward(const NetworkState& state, std::span<const double> pers, Action a) {
  check_pers(state, pers);
  if (a.gen < 1 || a.gen > state.layers()) throw ParameterError("action outside G_1..G_L");
  std::vector<int> prefixes;
  prefixes.reserve(state.per_user.size());
  for (const auto& s : state.per_user) prefixes.push_back(planning_prefix(s));
  return reward_given_prefixes(state, pers, prefixes, a.gen);
}

Action gst_select(const NetworkState& state, std::span<const double> pers) {
  check_pers(state, pers);
  std::vector<int> prefixes;
  prefixes.reserve(state.per_user.size());
  for (const auto& s : state.per_user) prefixes.push_back(planning_prefix(s));
  Action best{1, true};
  double best_reward = -1.0;
  for (int gen = 1; gen <= state.layers(); ++gen) {
    const double r = reward_given_prefixes(state, pers, prefixes, gen);
    if (r > best_reward) {
      best_reward = r;
      best.gen = gen;
    }
  }
  return best;
}

Action GstPolicy::next(const NetworkState& state, std::span<const double> pers) {
  return gst_select(state, pers);
}

Action FixedSchedulePolicy::next(const NetworkState& state, std::span<const double>) {
  if (state.t < 0 || state.t >= static_cast<int>(actions_.size()))
    throw ParameterError("fixed schedule shorter than the episode");
  return actions_[static_cast<std::size_t>(state.t)];
}

ErasurePattern::ErasurePattern(int users, int slots)
    : users_(users),
      slots_(slots),
      bits_(static_cast<std::size_t>(users) * static_cast<std::size_t>(slots), 0) {}

bool ErasurePattern::lost(int user, int slot) const {
  return bits_[static_cast<std::size_t>(user) * static_cast<std::size_t>(slots_) +
               static_cast<std::size_t>(slot)] != 0;
}

void ErasurePattern::set_lost(int user, int slot, bool value) {
  bits_[static_cast<std::size_t>(user) * static_cast<std::size_t>(slots_) +
        static_cast<std::size_t>(slot)] = value ? 1 : 0;
}

namespace {

template <class LossFn>
EpisodeResult simulate(const EpisodeSetup& setup, std::span<const double> pers,
                       TransmissionPolicy& policy, LossFn&& lose, Rng& coeff_rng) {
  if (setup.layers < 1 || setup.slots < setup.layers)
    throw ParameterError("episode needs 1 <= L <= T");
  const int users = static_cast<int>(pers.size());
  if (users < 1) throw ParameterError("episode needs at least one user");

  NetworkState state = NetworkState::empty(users, setup.layers, setup.slots);
  EpisodeResult result;
  result.erasure_log = ErasurePattern(users, setup.slots);
  result.realized_actions.reserve(static_cast<std::size_t>(setup.slots));
  bool any_coded = false;

  for (int t = 0; t < setup.slots; ++t) {
    state.t = t;
    const Action a = policy.next(state, pers);
    if (a.gen < 1 || a.gen > setup.layers) throw ParameterError("policy chose an invalid action");
    any_coded = any_coded || a.coded;
    const CodedPacket packet = a.coded ? encode(a.gen, t, coeff_rng) : uncoded_packet(a.gen, t);
    for (int i = 0; i < users; ++i) {
      if (lose(i, t)) {
        result.erasure_log.set_lost(i, t);
      } else {
        state.per_user[static_cast<std::size_t>(i)].record(packet);
      }
    }
    result.realized_actions.push_back(a);
  }
  state.t = setup.slots;

  result.per_user_prefix.reserve(static_cast<std::size_t>(users));
  long total = 0;
  for (const auto& s : state.per_user) {
    int prefix = 0;
    if (!any_coded) {
      prefix = useful_packets_from_counts(s.generator_counts());
    } else if (setup.reception == ReceptionModel::Elimination) {
      prefix = decodable_prefix(s);
    } else {
      prefix = planning_prefix(s);
    }
    result.per_user_prefix.push_back(prefix);
    total += prefix;
  }
  result.throughput = static_cast<double>(total) / (static_cast<double>(users) * setup.slots);
  return result;
}

}  // namespace

EpisodeResult run_episode(const EpisodeSetup& setup, std::span<const double> pers,
                          TransmissionPolicy& policy, Rng& rng) {
  Rng coeff_rng = rng.fork("coefficients");
  auto lose = [&](int i, int) { return rng.uniform() < pers[static_cast<std::size_t>(i)]; };
  return simulate(setup, pers, policy, lose, coeff_rng);
}

EpisodeResult run_episode(const Scenario& scenario, Point2D q, SchemeKind scheme, Rng& rng,
                          ReceptionModel reception) {
  const auto pers = scenario.packet_error_rates(scheme_position(scheme, q));
  auto policy = make_policy(scheme);
  return run_episode(EpisodeSetup{scenario.layers, scenario.slots, reception}, pers, *policy, rng);
}

double episode_throughput(int layers, int slots, std::span<const double> pers, SchemeKind scheme,
                          Rng& rng) {
  if (layers < 1 || slots < layers) throw ParameterError("episode needs 1 <= L <= T");
  const std::size_t users = pers.size();
  if (users < 1) throw ParameterError("episode needs at least one user");
  const auto width = static_cast<std::size_t>(layers) + 1;

  thread_local std::vector<int> counts;
  thread_local std::vector<int> prefixes;
  counts.assign(users * width, 0);
  prefixes.assign(users, 0);
  auto user_counts = [&](std::size_t i) { return std::span<const int>(&counts[i * width], width); };

  const bool coded = is_coded(scheme);
  for (int t = 0; t < slots; ++t) {
    int gen = layers;
    switch (scheme) {
      case SchemeKind::Uarnc:
      case SchemeKind::UarncFixed: {
        double best_reward = -1.0;
        for (int g = 1; g <= layers; ++g) {
          double reward = 0.0;
          for (std::size_t i = 0; i < users; ++i) {
            const double success = 1.0 - pers[i];
            if (success <= 0.0 || prefixes[i] == layers) continue;
            reward += success * (prefix_with_extra(user_counts(i), g) - prefixes[i]);
          }
          if (reward > best_reward) {
            best_reward = reward;
            gen = g;
          }
        }
        break;
      }
      case SchemeKind::Rnc:
        break;
      case SchemeKind::Arq: {
        int j = 1;
        for (; j <= layers; ++j) {
          bool everyone = true;
          for (std::size_t i = 0; i < users && everyone; ++i)
            everyone = counts[i * width + static_cast<std::size_t>(j)] > 0;
          if (!everyone) break;
        }
        gen = std::min(j, layers);
        break;
      }
      case SchemeKind::Rrs:
        gen = t % layers + 1;
        break;
    }
    for (std::size_t i = 0; i < users; ++i) {
      if (rng.uniform() < pers[i]) continue;
      ++counts[i * width + static_cast<std::size_t>(gen)];
      if (coded) prefixes[i] = generic_prefix_from_counts(user_counts(i));
    }
  }

  long total = 0;
  for (std::size_t i = 0; i < users; ++i)
    total += coded ? prefixes[i] : useful_packets_from_counts(user_counts(i));
  return static_cast<double>(total) / (static_cast<double>(users) * slots);
}

EpisodeResult replay_episode(const EpisodeSetup& setup, std::span<const double> pers,
                             TransmissionPolicy& policy, const ErasurePattern& pattern) {
  if (pattern.users() != static_cast<int>(pers.size()) || pattern.slots() != setup.slots)
    throw ParameterError("erasure pattern dimensions do not match the episode");
  Rng coeff_rng(derive_seed(0, "replay-coefficients"));
  auto lose = [&](int i, int t) { return pattern.lost(i, t); };
  return simulate(setup, pers, policy, lose, coeff_rng);
}

double enumerate_exact(const EpisodeSetup& setup, std::span<const double> pers,
                       SchemeKind scheme) {
  const int users = static_cast<int>(pers.size());
  const int bits = users * setup.slots;
  if (bits > kMaxEnumerationBits)
    throw InstanceTooLarge("exact enumeration needs K*T <= 20, got " + std::to_string(bits));
  EpisodeSetup generic = setup;
  generic.reception = ReceptionModel::Generic;

  double expectation = 0.0;
  const std::uint64_t patterns = std::uint64_t{1} << bits;
  ErasurePattern pattern(users, setup.slots);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double prob = 1.0;
    for (int t = 0; t < setup.slots && prob > 0.0; ++t) {
      for (int i = 0; i < users; ++i) {
        const bool lost = (mask >> (t * users + i)) & 1U;
        pattern.set_lost(i, t, lost);
        const double p = pers[static_cast<std::size_t>(i)];
        prob *= lost ? p : 1.0 - p;
      }
    }
    if (prob == 0.0) continue;
    auto policy = make_policy(scheme);
    expectation += prob * replay_episode(generic, pers, *policy, pattern).throughput;
  }
  return expectation;
}

double enumerate_exact(const Scenario& scenario, Point2D q, SchemeKind scheme) {
  const auto pers = scenario.packet_error_rates(scheme_position(scheme, q));
  return enumerate_exact(EpisodeSetup{scenario.layers, scenario.slots}, pers, scheme);
}

}  // namespace uarnc

#pragma once

// Per-slot MDP layer: network state, expected immediate reward, greedy
// scheduling, and the episode engine shared by every transmission scheme.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "uarnc/coding.hpp"
#include "uarnc/scenario.hpp"
#include "uarnc/scheme.hpp"

namespace uarnc {

class Rng;

/// One transmission: a coded packet from generator G_gen, or (coded == false)
/// the source packet alpha_gen sent in the clear.
struct Action {
  int gen = 1;
  bool coded = true;

  friend bool operator==(const Action&, const Action&) = default;
};

/// Reception records of all K users at slot t.
struct NetworkState {
  std::vector<StatusMatrix> per_user;
  int t = 0;

  static NetworkState empty(int users, int layers, int slots);

  int users() const { return static_cast<int>(per_user.size()); }
  int layers() const { return per_user.empty() ? 0 : per_user.front().layers(); }
  int slots() const { return per_user.empty() ? 0 : per_user.front().slots(); }
};

/// Generic-model decodable prefix of user i.
int planning_prefix(const StatusMatrix& status);

/// sum_i (1 - p_i) * (prefix_i with a added - prefix_i), generic model.
double expected_reward(const NetworkState& state, std::span<const double> pers, Action a);

/// Argmax of expected_reward over G_1..G_L, ties to the smallest index.
Action gst_select(const NetworkState& state, std::span<const double> pers);

/// Per-slot decision rule. Policies may keep episode-local state, so use a
/// fresh instance per episode.
class TransmissionPolicy {
 public:
  virtual ~TransmissionPolicy() = default;
  virtual Action next(const NetworkState& state, std::span<const double> pers) = 0;
};

class GstPolicy final : public TransmissionPolicy {
 public:
  Action next(const NetworkState& state, std::span<const double> pers) override;
};

/// Open-loop schedule fixed in advance; one action per slot.
class FixedSchedulePolicy final : public TransmissionPolicy {
 public:
  explicit FixedSchedulePolicy(std::vector<Action> actions) : actions_(std::move(actions)) {}
  Action next(const NetworkState& state, std::span<const double> pers) override;

 private:
  std::vector<Action> actions_;
};

/// K x T loss indicators, true = packet lost.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  ErasurePattern(int users, int slots);

  int users() const { return users_; }
  int slots() const { return slots_; }
  bool lost(int user, int slot) const;
  void set_lost(int user, int slot, bool value = true);

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  int users_ = 0;
  int slots_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct EpisodeResult {
  std::vector<int> per_user_prefix;
  double throughput = 0.0;  ///< sum of prefixes / (K * T)
  std::vector<Action> realized_actions;
  ErasurePattern erasure_log;
};

struct EpisodeSetup {
  int layers = 1;
  int slots = 1;
  ReceptionModel reception = ReceptionModel::Generic;
};

/// Simulates T slots with Bernoulli losses (user i loses a slot with
/// probability pers[i]). Exactly one uniform draw per user per slot is taken
/// from rng, in user order, so positions sharing a seed share loss draws.
/// Coefficients come from an independent child stream of rng.
EpisodeResult run_episode(const EpisodeSetup& setup, std::span<const double> pers,
                          TransmissionPolicy& policy, Rng& rng);

/// Scenario form: PERs from geometry with the UAV at q.
EpisodeResult run_episode(const Scenario& scenario, Point2D q, SchemeKind scheme, Rng& rng,
                          ReceptionModel reception = ReceptionModel::Generic);

/// Throughput of a built-in scheme under the generic reception model,
/// tracking generator counts only. Consumes rng exactly like run_episode, so
/// the result equals run_episode(...).throughput for the same seed.
double episode_throughput(int layers, int slots, std::span<const double> pers, SchemeKind scheme,
                          Rng& rng);

/// Deterministic replay under a forced erasure pattern.
EpisodeResult replay_episode(const EpisodeSetup& setup, std::span<const double> pers,
                             TransmissionPolicy& policy, const ErasurePattern& pattern);

inline constexpr int kMaxEnumerationBits = 20;

/// Exact expected throughput by summing over all 2^(K*T) erasure patterns.
/// Throws InstanceTooLarge if K*T > 20.
double enumerate_exact(const EpisodeSetup& setup, std::span<const double> pers, SchemeKind scheme);
double enumerate_exact(const Scenario& scenario, Point2D q, SchemeKind scheme);

}  // namespace uarnc

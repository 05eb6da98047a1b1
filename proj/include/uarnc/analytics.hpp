#pragma once

// Closed-form decode-probability model used by the fairness constraint.
//
// decode_prob(l, L, T, p) is the probability that a user with per-slot packet
// error probability p decodes exactly the first l packets of an L-packet
// block within T slots:
//
//   l = L:  sum_{i=L..T} C(T,i) (1-p)^i p^(T-i)
//   l < L:  (1-p)^l p sum_{i=0..L-l-1} C(T-l-1,i) (1-p)^i p^(T-l-1-i)

#include <vector>

#include "uarnc/scenario.hpp"

namespace uarnc {

/// Throws ParameterError unless 1 <= l <= L <= T and p in [0, 1].
double decode_prob(int l, int layers, int slots, double p);

/// sum_{j=l..L} decode_prob(j, L, T, p).
double at_least_prob(int l, int layers, int slots, double p);

/// decode_prob for l = 1..L, index 0 holding l = 1.
std::vector<double> decode_distribution(int layers, int slots, double p);

/// True iff every user meets at_least_prob(spec.l_min, ...) >= spec.p_th with
/// the UAV at q.
bool feasible(Point2D q, const Scenario& scenario, const FairnessSpec& spec);
inline bool feasible(Point2D q, const Scenario& scenario) {
  return feasible(q, scenario, scenario.fairness);
}

}  // namespace uarnc

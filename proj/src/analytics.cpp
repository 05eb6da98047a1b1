#include "uarnc/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uarnc/errors.hpp"

namespace uarnc {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void check(int l, int layers, int slots, double p) {
  if (layers < 1 || l < 1 || l > layers || layers > slots)
    throw ParameterError("need 1 <= l <= L <= T, got l=" + std::to_string(l) +
                         " L=" + std::to_string(layers) + " T=" + std::to_string(slots));
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0, 1]");
}

}  // namespace

double decode_prob(int l, int layers, int slots, double p) {
  check(l, layers, slots, p);
  const double s = 1.0 - p;
  if (l == layers) {
    double sum = 0.0;
    for (int i = layers; i <= slots; ++i)
      sum += binomial(slots, i) * std::pow(s, i) * std::pow(p, slots - i);
    return sum;
  }
  const int rest = slots - l - 1;
  double sum = 0.0;
  for (int i = 0; i <= layers - l - 1; ++i)
    sum += binomial(rest, i) * std::pow(s, i) * std::pow(p, rest - i);
  return std::pow(s, l) * p * sum;
}

double at_least_prob(int l, int layers, int slots, double p) {
  check(l, layers, slots, p);
  double sum = 0.0;
  for (int j = l; j <= layers; ++j) sum += decode_prob(j, layers, slots, p);
  return sum;
}

std::vector<double> decode_distribution(int layers, int slots, double p) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(layers));
  for (int l = 1; l <= layers; ++l) out.push_back(decode_prob(l, layers, slots, p));
  return out;
}

bool feasible(Point2D q, const Scenario& scenario, const FairnessSpec& spec) {
  if (spec.p_th <= 0.0) return true;
  const UavPose pose = scenario.pose(q);
  for (const auto& u : scenario.users) {
    const double p = packet_error_rate(pose, u, scenario.radio);
    if (at_least_prob(spec.l_min, scenario.layers, scenario.slots, p) < spec.p_th) return false;
  }
  return true;
}

}  // namespace uarnc

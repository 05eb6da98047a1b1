#include "uarnc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uarnc/errors.hpp"

namespace uarnc {

bool Area::contains(Point2D p) const {
  return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
}

Point2D Area::clamp(Point2D p) const {
  return {std::clamp(p.x, xmin, xmax), std::clamp(p.y, ymin, ymax)};
}

void Area::validate() const {
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || !std::isfinite(ymin) ||
      !std::isfinite(ymax))
    throw ValidationError("area bounds must be finite");
  if (xmin > xmax || ymin > ymax) throw ValidationError("area bounds must satisfy min <= max");
}

std::vector<double> Scenario::packet_error_rates(Point2D q) const {
  std::vector<double> out;
  out.reserve(users.size());
  const UavPose p = pose(q);
  for (const auto& u : users) out.push_back(packet_error_rate(p, u, radio));
  return out;
}

void Scenario::validate() const {
  area.validate();
  radio.validate();
  if (users.empty()) throw ValidationError("scenario needs at least one user (K >= 1)");
  if (!(altitude > 0.0)) throw ValidationError("altitude must be positive");
  if (layers < 1) throw ValidationError("L must be >= 1");
  if (slots < layers)
    throw ValidationError("Deadline T (T ≥ L) violated: T=" + std::to_string(slots) +
                          " < L=" + std::to_string(layers));
  if (fairness.l_min < 1 || fairness.l_min > layers)
    throw ValidationError("fairness.l_min must lie in [1, L]");
  if (!(fairness.p_th >= 0.0 && fairness.p_th <= 1.0))
    throw ValidationError("fairness.p_th must lie in [0, 1]");
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (!is_finite(users[i]) || !area.contains(users[i]))
      throw ValidationError("user " + std::to_string(i) + " lies outside the area");
  }
}

}  // namespace uarnc

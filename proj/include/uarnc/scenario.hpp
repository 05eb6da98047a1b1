#pragma once

#include <cstdint>
#include <vector>

#include "uarnc/channel.hpp"

namespace uarnc {

/// Axis-aligned rectangle in meters. The default is the 1000 m x 1000 m
/// service area centered at the origin.
struct Area {
  double xmin = -500.0;
  double xmax = 500.0;
  double ymin = -500.0;
  double ymax = 500.0;

  bool contains(Point2D p) const;
  Point2D clamp(Point2D p) const;
  Point2D center() const { return {(xmin + xmax) / 2.0, (ymin + ymax) / 2.0}; }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  void validate() const;
};

/// Every user must decode at least the first l_min packets with probability
/// at least p_th.
struct FairnessSpec {
  int l_min = 1;
  double p_th = 0.9;
};

/// Replication count and master seed. Replication r always uses the seed
/// derive_seed(master_seed, "episode", r), so every caller sharing these
/// parameters shares loss draws (common random numbers).
struct MonteCarloParams {
  int runs = 200;
  std::uint64_t master_seed = 1;
};

/// Immutable description of one experiment instance.
struct Scenario {
  std::vector<Point2D> users;
  Area area;
  double altitude = 200.0;
  RadioParams radio;
  int layers = 4;  ///< L
  int slots = 10;  ///< T
  FairnessSpec fairness;

  int user_count() const { return static_cast<int>(users.size()); }
  UavPose pose(Point2D q) const { return {q, altitude}; }

  /// Per-user packet error rate with the UAV hovering at q.
  std::vector<double> packet_error_rates(Point2D q) const;

  /// Throws ValidationError naming the violated invariant.
  void validate() const;
};

}  // namespace uarnc

#pragma once

// Reference schemes sharing the episode engine: traditional RNC (always G_L),
// multicast ARQ and round-robin scheduling (both uncoded).

#include <memory>
#include <span>

#include "uarnc/scheduler.hpp"

namespace uarnc {

/// Always codes over all L packets.
Action rnc_policy(const NetworkState& state);

struct ArqState {
  int target = 1;  ///< index of the packet currently being (re)transmitted
};

/// Sends alpha_j uncoded, j the smallest index some user still lacks; repeats
/// alpha_L once every user holds everything.
Action arq_policy(const NetworkState& state, ArqState& arq);

/// Sends alpha_{(t mod L) + 1} uncoded regardless of feedback.
Action rrs_policy(const NetworkState& state);

/// Length of the longest run {1..l} contained in the held index set.
int useful_packets(std::span<const int> held);
/// Same, from a histogram indexed by packet (index 0 unused).
int useful_packets_from_counts(std::span<const int> counts);

std::unique_ptr<TransmissionPolicy> make_policy(SchemeKind scheme);

/// Hover position actually used by a scheme: uarnc-fixed is pinned to the
/// origin, every other scheme flies at q.
Point2D scheme_position(SchemeKind scheme, Point2D q);

}  // namespace uarnc

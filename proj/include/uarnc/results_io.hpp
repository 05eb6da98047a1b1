#pragma once

// CSV / JSON serialization of results tables and placement traces.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "uarnc/harness.hpp"

namespace uarnc {

inline constexpr std::string_view kResultsHeader =
    "scheme,L,T,K,qx,qy,mean_throughput,ci95_lo,ci95_hi,runs,seed,feasible";

/// Shortest-form float with 12 significant digits ("%.12g").
std::string format_real(double x);

std::string results_csv(const ResultsTable& table);
ResultsTable parse_results_csv(std::string_view text);

/// {"rows": [{scheme, L, T, K, qx, qy, ...}]}
std::string results_json(const ResultsTable& table);

/// {q:[x,y], fitness, iterations, evaluations, trace:[{iter,gbest_fit,qx,qy}]}
std::string placement_json(const SwarmResult& result);
/// Array of {value, method, placement} objects, one per sweep value.
std::string placements_json(std::span<const PlacementRecord> placements);

/// Throws IoError naming the path.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace uarnc

#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace uarnc {

/// splitmix64 finalizer; used to expand and mix seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derive a seed for a labeled purpose. Distinct (label, index) pairs give
/// independent streams for the same master seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index = 0) noexcept;
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index0, std::uint64_t index1) noexcept;

/// xoshiro256** engine. Satisfies UniformRandomBitGenerator; cheap to seed,
/// which matters because every Monte Carlo replication owns a fresh stream.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform() noexcept;
  /// Uniform on [lo, hi].
  double uniform(double lo, double hi) noexcept;
  /// Uniform integer on [0, bound).
  std::uint64_t below(std::uint64_t bound) noexcept;
  std::uint8_t byte() noexcept;
  /// Standard normal variate.
  double normal() noexcept;

  /// Independent child stream for a labeled sub-purpose.
  Rng fork(std::string_view label, std::uint64_t index = 0) const noexcept;

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
};

}  // namespace uarnc

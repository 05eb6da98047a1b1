#pragma once

// Generator-based adaptive random network coding over GF(2^8).
//
// Generator G_l mixes the first l source packets alpha_1..alpha_l. A user's
// reception record is an L x T status matrix whose column t is the (zero
// padded) coefficient vector of the packet received in slot t, or zero if the
// slot was lost. The decodable prefix is the largest l such that
// alpha_1..alpha_l can all be recovered.

#include <cstdint>
#include <span>
#include <vector>

#include "uarnc/gf256.hpp"

namespace uarnc {

class Rng;

using Block = std::vector<std::uint8_t>;

struct CodedPacket {
  int slot = 0;
  int gen = 1;  ///< generator index l, 1-based
  std::vector<gf::Element> coeffs;  ///< length gen, not all zero
};

/// Draws a G_gen packet: coefficients uniform over GF(2^8), all-zero vectors
/// redrawn.
CodedPacket encode(int gen, int slot, Rng& rng);

/// Uncoded transmission of alpha_index, expressed as a unit coefficient vector.
CodedPacket uncoded_packet(int index, int slot);

/// Payload of a coded packet: sum_k coeffs[k] * originals[k].
Block combine(const CodedPacket& packet, std::span<const Block> originals);

class StatusMatrix {
 public:
  StatusMatrix() = default;
  StatusMatrix(int layers, int slots);

  int layers() const noexcept { return layers_; }
  int slots() const noexcept { return slots_; }

  /// Entry at 0-based (row, slot).
  gf::Element at(int row, int slot) const;
  std::span<const gf::Element> column(int slot) const;
  bool has_packet(int slot) const;
  /// Generator index of the packet held in this slot, 0 if none.
  int generator(int slot) const;

  /// Stores a received packet. Throws ParameterError if the slot is out of
  /// range or already filled, or the packet does not fit in L rows.
  void record(const CodedPacket& packet);

  /// counts[l] = number of received packets from G_l; counts[0] is unused.
  std::span<const int> generator_counts() const noexcept { return counts_; }
  int received() const noexcept { return received_; }

 private:
  int layers_ = 0;
  int slots_ = 0;
  int received_ = 0;
  std::vector<gf::Element> entries_;  // column-major
  std::vector<int> gens_;
  std::vector<int> counts_;
};

/// Largest l with e_1..e_l in the row space of the received coefficient
/// vectors, by Gaussian elimination over GF(2^8).
int decodable_prefix(const StatusMatrix& status);

/// Almost-sure decodable prefix of a set of generator indices under random
/// coefficients: the largest l such that l members with index <= l, sorted
/// ascending as j_1..j_l, satisfy j_k >= k.
int generic_prefix(std::span<const int> gens);

/// Same as generic_prefix, from a histogram (counts[l] for l = 1..size-1).
int generic_prefix_from_counts(std::span<const int> counts);

/// Recovers alpha_1..alpha_p, p = decodable_prefix(status). payloads is
/// indexed by slot; entries for empty slots are ignored. Throws
/// InconsistentSystem if a payload contradicts the coefficients.
std::vector<Block> decode(const StatusMatrix& status, std::span<const Block> payloads);

}  // namespace uarnc

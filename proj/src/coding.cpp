#include "uarnc/coding.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "uarnc/errors.hpp"
#include "uarnc/rng.hpp"

namespace uarnc {

CodedPacket encode(int gen, int slot, Rng& rng) {
  if (gen < 1) throw ParameterError("generator index must be >= 1");
  CodedPacket packet{slot, gen, std::vector<gf::Element>(static_cast<std::size_t>(gen))};
  bool nonzero = false;
  while (!nonzero) {
    for (auto& c : packet.coeffs) {
      c = rng.byte();
      nonzero = nonzero || c != 0;
    }
  }
  return packet;
}

CodedPacket uncoded_packet(int index, int slot) {
  if (index < 1) throw ParameterError("packet index must be >= 1");
  CodedPacket packet{slot, index, std::vector<gf::Element>(static_cast<std::size_t>(index))};
  packet.coeffs.back() = 1;
  return packet;
}

Block combine(const CodedPacket& packet, std::span<const Block> originals) {
  if (packet.coeffs.size() > originals.size())
    throw ParameterError("packet mixes more originals than supplied");
  const std::size_t len = originals.empty() ? 0 : originals.front().size();
  Block out(len, 0);
  for (std::size_t k = 0; k < packet.coeffs.size(); ++k) {
    if (originals[k].size() != len) throw ParameterError("original blocks differ in length");
    gf::axpy(out, packet.coeffs[k], originals[k]);
  }
  return out;
}

StatusMatrix::StatusMatrix(int layers, int slots)
    : layers_(layers),
      slots_(slots),
      entries_(static_cast<std::size_t>(layers) * static_cast<std::size_t>(slots), 0),
      gens_(static_cast<std::size_t>(slots), 0),
      counts_(static_cast<std::size_t>(layers) + 1, 0) {
  if (layers < 1 || slots < 1) throw ParameterError("status matrix needs L >= 1 and T >= 1");
}

gf::Element StatusMatrix::at(int row, int slot) const {
  return column(slot)[static_cast<std::size_t>(row)];
}

std::span<const gf::Element> StatusMatrix::column(int slot) const {
  return std::span<const gf::Element>(entries_).subspan(
      static_cast<std::size_t>(slot) * static_cast<std::size_t>(layers_),
      static_cast<std::size_t>(layers_));
}

bool StatusMatrix::has_packet(int slot) const {
  return gens_[static_cast<std::size_t>(slot)] != 0;
}

int StatusMatrix::generator(int slot) const { return gens_[static_cast<std::size_t>(slot)]; }

void StatusMatrix::record(const CodedPacket& packet) {
  if (packet.slot < 0 || packet.slot >= slots_)
    throw ParameterError("slot " + std::to_string(packet.slot) + " outside [0, T)");
  if (packet.gen < 1 || packet.gen > layers_)
    throw ParameterError("generator " + std::to_string(packet.gen) + " outside [1, L]");
  if (static_cast<int>(packet.coeffs.size()) != packet.gen)
    throw ParameterError("coefficient vector length must equal the generator index");
  if (std::all_of(packet.coeffs.begin(), packet.coeffs.end(), [](auto c) { return c == 0; }))
    throw ParameterError("all-zero coefficient vector");
  const auto s = static_cast<std::size_t>(packet.slot);
  if (gens_[s] != 0) throw ParameterError("slot already holds a packet");
  std::copy(packet.coeffs.begin(), packet.coeffs.end(),
            entries_.begin() + static_cast<std::ptrdiff_t>(s * static_cast<std::size_t>(layers_)));
  gens_[s] = packet.gen;
  ++counts_[static_cast<std::size_t>(packet.gen)];
  ++received_;
}

namespace {

// Echelon basis keyed by the highest nonzero coordinate ("lead"). Vectors
// whose lead is <= l span the intersection of the row space with
// span(e_1..e_l), so the decodable prefix is the run of filled leads from 0.
class Eliminator {
 public:
  Eliminator(int layers, std::size_t payload_len)
      : layers_(layers), payload_len_(payload_len), rows_(static_cast<std::size_t>(layers)) {}

  // Returns false if the vector was dependent and its payload contradicted.
  bool insert(std::vector<gf::Element> v, Block payload) {
    for (int c = layers_ - 1; c >= 0; --c) {
      const auto cu = static_cast<std::size_t>(c);
      if (v[cu] == 0) continue;
      if (!rows_[cu]) {
        const gf::Element f = gf::inv(v[cu]);
        gf::scale(v, f);
        gf::scale(payload, f);
        rows_[cu] = Row{std::move(v), std::move(payload)};
        return true;
      }
      const gf::Element f = v[cu];
      gf::axpy(v, f, rows_[cu]->coeffs);
      gf::axpy(payload, f, rows_[cu]->payload);
    }
    return std::all_of(payload.begin(), payload.end(), [](auto b) { return b == 0; });
  }

  int prefix() const {
    int p = 0;
    while (p < layers_ && rows_[static_cast<std::size_t>(p)]) ++p;
    return p;
  }

  // Forward substitution over the prefix rows: row c has lead c and support
  // in [0, c], so earlier recovered originals can be cancelled in order.
  std::vector<Block> recover() const {
    const int p = prefix();
    std::vector<Block> out;
    out.reserve(static_cast<std::size_t>(p));
    for (int c = 0; c < p; ++c) {
      const Row& row = *rows_[static_cast<std::size_t>(c)];
      Block alpha = row.payload;
      for (int k = 0; k < c; ++k) gf::axpy(alpha, row.coeffs[static_cast<std::size_t>(k)], out[static_cast<std::size_t>(k)]);
      out.push_back(std::move(alpha));
    }
    return out;
  }

  std::size_t payload_len() const { return payload_len_; }

 private:
  struct Row {
    std::vector<gf::Element> coeffs;
    Block payload;
  };
  int layers_;
  std::size_t payload_len_;
  std::vector<std::optional<Row>> rows_;
};

}  // namespace

int decodable_prefix(const StatusMatrix& status) {
  // Coefficient-only elimination, kept separate from the payload path for speed.
  const int layers = status.layers();
  std::vector<std::vector<gf::Element>> basis(static_cast<std::size_t>(layers));
  std::vector<gf::Element> v(static_cast<std::size_t>(layers));
  for (int t = 0; t < status.slots(); ++t) {
    if (!status.has_packet(t)) continue;
    auto col = status.column(t);
    std::copy(col.begin(), col.end(), v.begin());
    for (int c = layers - 1; c >= 0; --c) {
      const auto cu = static_cast<std::size_t>(c);
      if (v[cu] == 0) continue;
      if (basis[cu].empty()) {
        gf::scale(v, gf::inv(v[cu]));
        basis[cu] = v;
        break;
      }
      gf::axpy(v, v[cu], basis[cu]);
    }
  }
  int p = 0;
  while (p < layers && !basis[static_cast<std::size_t>(p)].empty()) ++p;
  return p;
}

int generic_prefix_from_counts(std::span<const int> counts) {
  // Hall's condition for nested supports: for every k <= l, packets with
  // index in [k, l] must number at least l - k + 1. With P(j) the running
  // count and D(j) = P(j) - j, that is D(l) >= max_{m < l} D(m).
  const int layers = static_cast<int>(counts.size()) - 1;
  int best = 0;
  int running = 0;
  int d_max = 0;  // D(0) = 0
  for (int l = 1; l <= layers; ++l) {
    running += counts[static_cast<std::size_t>(l)];
    const int d = running - l;
    if (d >= d_max) {
      best = l;
      d_max = d;
    }
  }
  return best;
}

int generic_prefix(std::span<const int> gens) {
  int top = 0;
  for (int g : gens) {
    if (g < 1) throw ParameterError("generator index must be >= 1");
    top = std::max(top, g);
  }
  std::vector<int> counts(static_cast<std::size_t>(top) + 1, 0);
  for (int g : gens) ++counts[static_cast<std::size_t>(g)];
  return generic_prefix_from_counts(counts);
}

std::vector<Block> decode(const StatusMatrix& status, std::span<const Block> payloads) {
  if (static_cast<int>(payloads.size()) < status.slots())
    throw ParameterError("need one payload entry per slot");
  std::optional<std::size_t> len;
  for (int t = 0; t < status.slots(); ++t) {
    if (!status.has_packet(t)) continue;
    const auto n = payloads[static_cast<std::size_t>(t)].size();
    if (len && *len != n) throw ParameterError("payload blocks differ in length");
    len = n;
  }
  Eliminator elim(status.layers(), len.value_or(0));
  for (int t = 0; t < status.slots(); ++t) {
    if (!status.has_packet(t)) continue;
    auto col = status.column(t);
    if (!elim.insert(std::vector<gf::Element>(col.begin(), col.end()),
                     payloads[static_cast<std::size_t>(t)]))
      throw InconsistentSystem("payload of slot " + std::to_string(t) +
                               " contradicts the received coefficients");
  }
  return elim.recover();
}

}  // namespace uarnc

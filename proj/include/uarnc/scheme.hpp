#pragma once

#include <string_view>

namespace uarnc {

/// Transmission schemes. UarncFixed is the UARNC scheduler with the UAV
/// pinned at the origin (the fixed base-station location).
enum class SchemeKind { Uarnc, UarncFixed, Rnc, Arq, Rrs };

/// How a user's decodable prefix is scored at the end of an episode.
enum class ReceptionModel {
  Generic,      ///< generic-rank model on generator indices
  Elimination,  ///< explicit GF(2^8) elimination on drawn coefficients
};

std::string_view scheme_name(SchemeKind kind);
/// Accepts uarnc | uarnc-fixed | rnc | arq | rrs. Throws ValidationError.
SchemeKind parse_scheme(std::string_view name);
/// True for schemes that transmit network-coded packets.
bool is_coded(SchemeKind kind);

std::string_view reception_name(ReceptionModel model);
ReceptionModel parse_reception(std::string_view name);

}  // namespace uarnc

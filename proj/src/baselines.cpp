#include "uarnc/baselines.hpp"

#include <algorithm>
#include <string>

#include "uarnc/errors.hpp"

namespace uarnc {

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Uarnc: return "uarnc";
    case SchemeKind::UarncFixed: return "uarnc-fixed";
    case SchemeKind::Rnc: return "rnc";
    case SchemeKind::Arq: return "arq";
    case SchemeKind::Rrs: return "rrs";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  for (auto k : {SchemeKind::Uarnc, SchemeKind::UarncFixed, SchemeKind::Rnc, SchemeKind::Arq,
                 SchemeKind::Rrs}) {
    if (scheme_name(k) == name) return k;
  }
  throw ValidationError("unknown scheme '" + std::string(name) +
                        "' (expected uarnc | uarnc-fixed | rnc | arq | rrs)");
}

bool is_coded(SchemeKind kind) {
  return kind == SchemeKind::Uarnc || kind == SchemeKind::UarncFixed || kind == SchemeKind::Rnc;
}

std::string_view reception_name(ReceptionModel model) {
  return model == ReceptionModel::Elimination ? "elimination" : "generic";
}

ReceptionModel parse_reception(std::string_view name) {
  if (name == "generic") return ReceptionModel::Generic;
  if (name == "elimination") return ReceptionModel::Elimination;
  throw ValidationError("unknown reception model '" + std::string(name) +
                        "' (expected generic | elimination)");
}

Action rnc_policy(const NetworkState& state) { return {state.layers(), true}; }

Action arq_policy(const NetworkState& state, ArqState& arq) {
  const int layers = state.layers();
  int j = 1;
  for (; j <= layers; ++j) {
    const bool everyone = std::all_of(state.per_user.begin(), state.per_user.end(), [j](const auto& s) {
      return s.generator_counts()[static_cast<std::size_t>(j)] > 0;
    });
    if (!everyone) break;
  }
  arq.target = std::min(j, layers);
  return {arq.target, false};
}

Action rrs_policy(const NetworkState& state) {
  return {state.t % state.layers() + 1, false};
}

int useful_packets(std::span<const int> held) {
  int l = 0;
  while (std::find(held.begin(), held.end(), l + 1) != held.end()) ++l;
  return l;
}

int useful_packets_from_counts(std::span<const int> counts) {
  int l = 0;
  while (l + 1 < static_cast<int>(counts.size()) && counts[static_cast<std::size_t>(l + 1)] > 0) ++l;
  return l;
}

namespace {

class RncPolicy final : public TransmissionPolicy {
 public:
  Action next(const NetworkState& state, std::span<const double>) override {
    return rnc_policy(state);
  }
};

class ArqPolicy final : public TransmissionPolicy {
 public:
  Action next(const NetworkState& state, std::span<const double>) override {
    return arq_policy(state, arq_);
  }

 private:
  ArqState arq_;
};

class RrsPolicy final : public TransmissionPolicy {
 public:
  Action next(const NetworkState& state, std::span<const double>) override {
    return rrs_policy(state);
  }
};

}  // namespace

std::unique_ptr<TransmissionPolicy> make_policy(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::Uarnc:
    case SchemeKind::UarncFixed:
      return std::make_unique<GstPolicy>();
    case SchemeKind::Rnc:
      return std::make_unique<RncPolicy>();
    case SchemeKind::Arq:
      return std::make_unique<ArqPolicy>();
    case SchemeKind::Rrs:
      return std::make_unique<RrsPolicy>();
  }
  throw ParameterError("unknown scheme");
}

Point2D scheme_position(SchemeKind scheme, Point2D q) {
  return scheme == SchemeKind::UarncFixed ? Point2D{0.0, 0.0} : q;
}

}  // namespace uarnc

#include "uarnc/channel.hpp"

#include <cmath>
#include <string>

#include "uarnc/errors.hpp"

namespace uarnc {

double squared_distance(Point2D a, Point2D b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void RadioParams::validate() const {
  if (!(beta0 > 0.0) || !std::isfinite(beta0))
    throw ValidationError("radio.beta0 must be > 0");
  if (!(pt > 0.0) || !std::isfinite(pt)) throw ValidationError("radio.pt must be > 0");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw ValidationError("radio.sigma2 must be > 0");
  if (n_bits < 1) throw ValidationError("radio.n_bits must be >= 1");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

double squared_range(const UavPose& pose, Point2D user) {
  if (!(pose.h > 0.0) || !std::isfinite(pose.h))
    throw InvalidGeometry("UAV altitude must be positive, got " + std::to_string(pose.h));
  if (!is_finite(pose.q) || !is_finite(user))
    throw InvalidGeometry("non-finite UAV or user coordinate");
  return squared_distance(pose.q, user) + pose.h * pose.h;
}

}  // namespace

double distance(const UavPose& pose, Point2D user) {
  return std::sqrt(squared_range(pose, user));
}

double channel_gain(const UavPose& pose, Point2D user, const RadioParams& radio) {
  return radio.beta0 / squared_range(pose, user);
}

double snr(const UavPose& pose, Point2D user, const RadioParams& radio) {
  return radio.beta0 * radio.pt / (squared_range(pose, user) * radio.sigma2);
}

double ber(double gamma, const RadioParams& radio) {
  if (!(gamma >= 0.0)) throw DomainError("SNR must be non-negative");
  switch (radio.ber_model) {
    case BerModel::StandardBpsk:
      return q_function(std::sqrt(2.0 * gamma));
    case BerModel::PaperQ2SqrtGamma:
      break;
  }
  return q_function(2.0 * std::sqrt(gamma));
}

double per(double ber, const RadioParams& radio) {
  if (ber >= 1.0) return 1.0;
  if (ber <= 0.0) return 0.0;
  // 1 - (1 - b)^n without cancellation for tiny b.
  return -std::expm1(static_cast<double>(radio.n_bits) * std::log1p(-ber));
}

double packet_error_rate(const UavPose& pose, Point2D user, const RadioParams& radio) {
  return per(ber(snr(pose, user, radio), radio), radio);
}

}  // namespace uarnc

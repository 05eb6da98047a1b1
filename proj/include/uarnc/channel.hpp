#pragma once

// Air-to-ground line-of-sight link model: UAV pose and user position to
// distance, channel power gain, SNR, bit error rate and packet error rate.

namespace uarnc {

/// Horizontal position in meters.
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Displacement in meters (or meters per PSO iteration).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Point2D operator+(Point2D p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
inline Vec2 operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }

double squared_distance(Point2D a, Point2D b);
bool is_finite(Point2D p);

struct UavPose {
  Point2D q;
  double h = 200.0;  ///< altitude, meters
};

enum class BerModel {
  PaperQ2SqrtGamma,  ///< Q(2*sqrt(gamma)), the default
  StandardBpsk,      ///< coherent BPSK, Q(sqrt(2*gamma))
};

/// Linear-unit radio parameters. dB inputs are converted at load time.
struct RadioParams {
  double beta0 = 1e-7;    ///< power gain at 1 m reference distance
  double pt = 0.025;      ///< transmit power, W
  double sigma2 = 1e-15;  ///< noise variance, W
  int n_bits = 10;        ///< packet length in bits
  BerModel ber_model = BerModel::PaperQ2SqrtGamma;

  /// Throws ValidationError if any field is out of range.
  void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Gaussian tail Q(x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

/// 3-D UAV-to-user distance. Throws InvalidGeometry if h <= 0 or inputs are
/// not finite.
double distance(const UavPose& pose, Point2D user);
double channel_gain(const UavPose& pose, Point2D user, const RadioParams& radio);
double snr(const UavPose& pose, Point2D user, const RadioParams& radio);
/// Throws DomainError for gamma < 0.
double ber(double gamma, const RadioParams& radio);
double per(double ber, const RadioParams& radio);

/// per(ber(snr(pose, user))) in one call.
double packet_error_rate(const UavPose& pose, Point2D user, const RadioParams& radio);

}  // namespace uarnc

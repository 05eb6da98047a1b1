#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "uarnc/channel.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/rng.hpp"

using namespace uarnc;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// Q(x) evaluated in 50 decimal digits.
double q_oracle(const Big& x) {
  return static_cast<double>(Big(0.5) * boost::multiprecision::erfc(x / boost::multiprecision::sqrt(Big(2))));
}

bool same_sig6(double a, double b) { return std::abs(a - b) <= 5e-7 * std::abs(b); }

}  // namespace

TEST_CASE("distance") {
  CHECK(distance({{0, 0}, 200}, {0, 0}) == 200.0);
  CHECK(distance({{0, 0}, 200}, {300, 400}) == doctest::Approx(std::sqrt(290000.0)).epsilon(1e-15));
  CHECK(distance({{0, 0}, 200}, {300, 400}) == doctest::Approx(538.5165).epsilon(1e-7));
  CHECK_THROWS_AS(distance({{0, 0}, 0}, {0, 0}), InvalidGeometry);
  CHECK_THROWS_AS(distance({{0, 0}, -5}, {0, 0}), InvalidGeometry);
  CHECK_THROWS_AS(distance({{NAN, 0}, 200}, {0, 0}), InvalidGeometry);
}

TEST_CASE("channel gain") {
  RadioParams radio;
  CHECK(channel_gain({{0, 0}, 1.0}, {0, 0}, radio) == radio.beta0);
  CHECK(channel_gain({{0, 0}, 200}, {0, 0}, radio) == doctest::Approx(2.5e-12).epsilon(1e-14));
  const double g1 = channel_gain({{0, 0}, 200}, {100, 0}, radio);
  const double g2 = channel_gain({{0, 0}, 200}, {200, 0}, radio);
  CHECK(g2 / g1 == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("snr at the default radio") {
  RadioParams radio;
  const double far = snr({{0, 0}, 200}, {300, 400}, radio);
  CHECK(far == doctest::Approx(2.5e-9 / 2.9e-10).epsilon(1e-13));
  CHECK(std::round(far * 1e4) / 1e4 == doctest::Approx(8.6207));
  CHECK(snr({{0, 0}, 200}, {0, 0}, radio) == doctest::Approx(62.5).epsilon(1e-14));

  RadioParams louder = radio;
  louder.pt *= 3.0;
  CHECK(snr({{0, 0}, 200}, {300, 400}, louder) == doctest::Approx(3.0 * far).epsilon(1e-15));
}

TEST_CASE("ber against a 50-digit erfc") {
  RadioParams paper;
  RadioParams bpsk;
  bpsk.ber_model = BerModel::StandardBpsk;
  CHECK(ber(0.0, paper) == 0.5);
  CHECK(ber(0.0, bpsk) == 0.5);

  CHECK(same_sig6(ber(1.0, paper), q_oracle(Big(2))));
  CHECK(ber(1.0, paper) == doctest::Approx(0.02275).epsilon(1e-4));

  const Big gamma = Big(2.5e-9) / Big(2.9e-10);
  const double b = ber(2.5e-9 / 2.9e-10, paper);
  CHECK(same_sig6(b, q_oracle(2 * boost::multiprecision::sqrt(gamma))));
  CHECK(b == doctest::Approx(2.1e-9).epsilon(0.05));

  // Relative accuracy of the Q function well into the tail.
  for (double x : {0.1, 0.5, 1.0, 3.0, 6.0, 10.0, 20.0, 30.0}) {
    const double oracle = q_oracle(Big(x));
    CHECK(std::abs(q_function(x) - oracle) <= 1e-12 * oracle);
  }
  CHECK(same_sig6(ber(3.0, bpsk), q_oracle(boost::multiprecision::sqrt(Big(6)))));
  CHECK_THROWS_AS(ber(-1e-9, paper), DomainError);
}

TEST_CASE("per") {
  RadioParams radio;
  CHECK(per(0.0, radio) == 0.0);
  CHECK(per(1.0, radio) == 1.0);
  CHECK(per(0.1, radio) == doctest::Approx(0.6513215599).epsilon(1e-12));
  // tiny ber must not cancel to 0
  CHECK(per(1e-18, radio) == doctest::Approx(1e-17).epsilon(1e-9));
}

TEST_CASE("db conversion") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(-70.0) == doctest::Approx(1e-7).epsilon(1e-15));
  CHECK(db_to_linear(-150.0) == doctest::Approx(1e-15).epsilon(1e-15));
  CHECK(linear_to_db(db_to_linear(-13.0)) == doctest::Approx(-13.0));
}

TEST_CASE("property: per is monotone in horizontal distance and lies in [0, 1]") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RadioParams radio;
    radio.sigma2 = db_to_linear(rng.uniform(-160.0, -120.0));
    radio.n_bits = 1 + static_cast<int>(rng.below(200));
    radio.ber_model = rng.below(2) ? BerModel::StandardBpsk : BerModel::PaperQ2SqrtGamma;
    const UavPose pose{{rng.uniform(-500, 500), rng.uniform(-500, 500)}, rng.uniform(10, 400)};
    const double angle = rng.uniform(0.0, 6.283185307179586);
    double previous = -1.0;
    for (double r = 0.0; r < 1500.0; r += 25.0) {
      const Point2D u{pose.q.x + r * std::cos(angle), pose.q.y + r * std::sin(angle)};
      const double p = packet_error_rate(pose, u, radio);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK(p >= previous);
      previous = p;
    }
  }
}

TEST_CASE("property: gain and snr depend only on the separation") {
  Rng rng(11);
  RadioParams radio;
  for (int trial = 0; trial < 200; ++trial) {
    const Point2D q{rng.uniform(-500, 500), rng.uniform(-500, 500)};
    const Point2D u{rng.uniform(-500, 500), rng.uniform(-500, 500)};
    const Point2D c{rng.uniform(-500, 500), rng.uniform(-500, 500)};
    const double a = rng.uniform(0.0, 6.283185307179586);
    auto rotate = [&](Point2D p) {
      const double dx = p.x - c.x, dy = p.y - c.y;
      return Point2D{c.x + dx * std::cos(a) - dy * std::sin(a), c.y + dx * std::sin(a) + dy * std::cos(a)};
    };
    const UavPose pose{q, 200};
    const UavPose turned{rotate(q), 200};
    CHECK(channel_gain(turned, rotate(u), radio) == doctest::Approx(channel_gain(pose, u, radio)).epsilon(1e-9));
    CHECK(snr(turned, rotate(u), radio) == doctest::Approx(snr(pose, u, radio)).epsilon(1e-9));
  }
}

TEST_CASE("property: large snr drives ber and per to zero") {
  RadioParams radio;
  double previous = 1.0;
  for (double g = 1.0; g < 1e4; g *= 2.0) {
    const double p = per(ber(g, radio), radio);
    CHECK(p <= previous);
    previous = p;
  }
  CHECK(previous == 0.0);
}

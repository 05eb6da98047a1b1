#include <doctest.h>

#include <cmath>

#include <boost/math/distributions/binomial.hpp>

#include "uarnc/analytics.hpp"
#include "uarnc/errors.hpp"
#include "uarnc/rng.hpp"

using namespace uarnc;

namespace {

// P[Bin(T, 1 - p) >= L]
double binomial_tail(int L, int T, double p) {
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  boost::math::binomial_distribution<double> bin(T, 1.0 - p);
  return boost::math::cdf(boost::math::complement(bin, L - 1));
}

}  // namespace

TEST_CASE("decode_prob hand values") {
  CHECK(decode_prob(1, 2, 2, 0.3) == doctest::Approx(0.21).epsilon(1e-14));
  CHECK(decode_prob(2, 2, 2, 0.3) == doctest::Approx(0.49).epsilon(1e-14));
  CHECK(at_least_prob(1, 2, 2, 0.3) == doctest::Approx(0.70).epsilon(1e-14));
  for (int T = 1; T <= 9; ++T)
    for (double p : {0.0, 0.25, 0.5, 0.9})
      CHECK(decode_prob(1, 1, T, p) == doctest::Approx(1.0 - std::pow(p, T)).epsilon(1e-13));
}

TEST_CASE("lossless channel") {
  for (int L = 1; L <= 5; ++L)
    for (int T = L; T <= 8; ++T) {
      CHECK(decode_prob(L, L, T, 0.0) == 1.0);
      for (int l = 1; l < L; ++l) CHECK(decode_prob(l, L, T, 0.0) == 0.0);
      for (int l = 1; l <= L; ++l) CHECK(at_least_prob(l, L, T, 0.0) == 1.0);
    }
}

TEST_CASE("decode_prob(L) is the binomial tail") {
  for (int L = 1; L <= 6; ++L)
    for (int T = L; T <= 12; ++T)
      for (int k = 0; k <= 9; ++k) {
        const double p = k / 10.0;
        const double oracle = binomial_tail(L, T, p);
        CHECK(std::abs(decode_prob(L, L, T, p) - oracle) <= 1e-12 * oracle);
        CHECK(at_least_prob(L, L, T, p) == decode_prob(L, L, T, p));
      }
}

TEST_CASE("property: distribution mass and monotonicity on the grid") {
  for (int L = 1; L <= 6; ++L)
    for (int T = L; T <= 12; ++T) {
      double prev_p_row[7] = {2, 2, 2, 2, 2, 2, 2};
      for (int k = 0; k <= 9; ++k) {
        const double p = k / 10.0;
        const auto f = decode_distribution(L, T, p);
        double total = 0.0;
        for (double x : f) {
          CHECK(x >= 0.0);
          CHECK(x <= 1.0);
          total += x;
        }
        CHECK(total <= 1.0 + 1e-12);
        double previous = 2.0;
        for (int l = 1; l <= L; ++l) {
          const double a = at_least_prob(l, L, T, p);
          CHECK(a <= previous + 1e-15);       // non-increasing in l
          CHECK(a <= prev_p_row[l] + 1e-15);  // non-increasing in p
          prev_p_row[l] = a;
          previous = a;
        }
      }
    }
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(decode_prob(3, 2, 4, 0.1), ParameterError);
  CHECK_THROWS_AS(decode_prob(1, 5, 4, 0.1), ParameterError);
  CHECK_THROWS_AS(decode_prob(0, 2, 4, 0.1), ParameterError);
  CHECK_THROWS_AS(at_least_prob(1, 2, 4, 1.5), ParameterError);
}

TEST_CASE("feasibility") {
  Scenario s;
  s.users = {{0, 0}};
  s.layers = 3;
  s.slots = 6;
  CHECK(feasible({0, 0}, s, {1, 0.9}));
  CHECK(feasible({0, 0}, s, {3, 0.0}));

  Scenario lossy = s;
  lossy.radio.sigma2 = db_to_linear(-130.0);
  lossy.users = {{0, 0}, {400, 400}};
  CHECK(feasible({400, 400}, lossy, {1, 0.0}));
  CHECK_FALSE(feasible({0, 0}, lossy, {1, 1.0}));

  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Point2D q{rng.uniform(-500, 500), rng.uniform(-500, 500)};
    const int l = 1 + static_cast<int>(rng.below(3));
    const double hi = rng.uniform();
    const double lo = hi * rng.uniform();
    if (feasible(q, lossy, {l, hi})) CHECK(feasible(q, lossy, {l, lo}));
  }
}

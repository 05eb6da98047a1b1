#include <doctest.h>

#include <string>

#include "uarnc/config.hpp"
#include "uarnc/errors.hpp"

using namespace uarnc;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("empty input gives the documented defaults") {
  for (const char* text : {"", "   \n\t", "{}"}) {
    const auto c = parse_config(text);
    CHECK(c.pso.c1 == 1.4955);
    CHECK(c.pso.c2 == 1.4955);
    CHECK(c.pso.w == 0.729);
    CHECK(c.pso.maxg == 400);
    CHECK(c.pso.sizepop == 100);
    CHECK(c.pso.vmax == 200.0);
    CHECK(c.base.radio.pt == 0.025);
    CHECK(c.base.radio.beta0 == doctest::Approx(1e-7).epsilon(1e-15));
    CHECK(c.base.radio.sigma2 == doctest::Approx(1e-15).epsilon(1e-15));
    CHECK(c.base.radio.n_bits == 10);
    CHECK(c.base.radio.ber_model == BerModel::PaperQ2SqrtGamma);
    CHECK(c.base.altitude == 200.0);
    CHECK(c.base.area.width() == 1000.0);
    CHECK(c.base.area.height() == 1000.0);
    CHECK(c.base.area.center() == Point2D{0, 0});
    CHECK(c.base.layers == 4);
    CHECK(c.base.slots == 10);
    CHECK(c.base.fairness.l_min == 1);
    CHECK(c.base.fairness.p_th == 0.9);
    CHECK(c.scenario.k == 20);
    CHECK(c.mc.runs == 200);
    CHECK(c.schemes.size() == 5);
  }
}

TEST_CASE("values are read and dB converted") {
  const auto c = parse_config(R"({
    "radio": {"sigma2_db": -140, "beta0_db": -60, "ber_model": "bpsk"},
    "coding": {"L": 3, "T": 6},
    "pso": {"sizepop": 7, "vmax": 55.5},
    "scenario": {"layout": "explicit", "users": [[1, 2], [3, 4]]},
    "schemes": ["rnc", "arq"],
    "monte_carlo": {"runs": 12, "master_seed": 99}
  })");
  CHECK(c.base.radio.sigma2 == doctest::Approx(1e-14).epsilon(1e-15));
  CHECK(c.base.radio.beta0 == doctest::Approx(1e-6).epsilon(1e-15));
  CHECK(c.base.radio.ber_model == BerModel::StandardBpsk);
  CHECK(c.pso.vmax == 55.5);
  CHECK(c.pso.sizepop == 7);
  CHECK(c.build_scenario().users == std::vector<Point2D>{{1, 2}, {3, 4}});
  CHECK(c.schemes == std::vector<SchemeKind>{SchemeKind::Rnc, SchemeKind::Arq});
  CHECK(c.mc.master_seed == 99);
}

TEST_CASE("validation errors name the problem") {
  CHECK(error_of(R"({"coding": {"L": 5, "T": 4}})").find("Deadline T (T ≥ L)") != std::string::npos);
  CHECK(error_of(R"({"fairness": {"p_th": 1.5}})").find("p_th") != std::string::npos);
  CHECK(error_of(R"({"radio": {"sigma2": -150}})").find("radio.sigma2") != std::string::npos);
  CHECK(error_of(R"({"colour": 1})").find("colour") != std::string::npos);
  CHECK(error_of(R"({"pso": {"sizepop": "many"}})").find("pso.sizepop") != std::string::npos);
  CHECK(error_of("{\n  \"coding\": {\"L\": 3,,}\n}").find("line 2") != std::string::npos);
  CHECK(!error_of(R"({"pso": {"maxg": 0}})").empty());
  CHECK(!error_of(R"({"monte_carlo": {"runs": 0}})").empty());
  CHECK(!error_of(R"({"schemes": ["uarnc", "tcp"]})").empty());
  CHECK(!error_of(R"({"scenario": {"layout": "explicit", "users": [[900, 0]]}})").empty());
  CHECK(!error_of(R"({"radio": {"pt_w": 0}})").empty());
}

TEST_CASE("the echoed config reproduces itself") {
  const auto c = parse_config(R"({"coding": {"L": 2, "T": 9}, "grid_step": 25,
                                  "scenario": {"layout": "clusters", "seed": 4},
                                  "reception": "elimination"})");
  const std::string echo = config_to_json(c);
  const auto again = parse_config(echo);
  CHECK(config_to_json(again) == echo);
  CHECK(again.base.slots == 9);
  CHECK(again.grid_step == 25);
  CHECK(again.reception == ReceptionModel::Elimination);
  CHECK(again.build_scenario().users == c.build_scenario().users);
}

TEST_CASE("load_config reports missing files") {
  CHECK_THROWS_AS(load_config("/nonexistent/dir/config.json"), IoError);
}

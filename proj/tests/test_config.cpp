#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "secmimo/config.hpp"

using namespace secmimo;

TEST_CASE("default config is valid") {
  SystemConfig cfg;
  CHECK(validate(cfg).ok());
  CHECK(cfg.rho() == doctest::Approx(28.0 / 128.0));
  CHECK(cfg.snr() == doctest::Approx(10.0));
}

TEST_CASE("symmetric factory ties the per-terminal counts") {
  SystemConfig cfg = SystemConfig::symmetric(256, 28, 4, 20, 20, 5.0, 1.0,
                                             0.6, 0.1);
  CHECK(cfg.n_t == 256);
  CHECK(cfg.n_r == 256);
  CHECK(cfg.n_e == 256);
  CHECK(cfg.l_t == 28);
  CHECK(cfg.l_r == 28);
  CHECK(cfg.l_e == 28);
  CHECK(validate(cfg).ok());
}

TEST_CASE("validation catches ordering violations") {
  SystemConfig cfg;
  cfg.m_t = 30;  // > l_t = 28
  ValidationReport r = validate(cfg);
  CHECK_FALSE(r.ok());
  CHECK(r.summary().find("m_t <= l_t") != std::string::npos);
  CHECK_THROWS_AS(require_valid(cfg), std::invalid_argument);
}

TEST_CASE("validation needs room for AN and Eve inversion") {
  SystemConfig cfg;
  cfg.n_t = 128;
  cfg.l_t = 120;  // n_t - l_t = 8 < m_e = 16
  ValidationReport r = validate(cfg);
  CHECK_FALSE(r.ok());
  CHECK(r.summary().find("n_t - l_t >= m_e") != std::string::npos);
}

TEST_CASE("phi and eta must be interior") {
  SystemConfig cfg;
  cfg.phi = 1.0;
  CHECK_FALSE(validate(cfg).ok());
  cfg.phi = 0.6;
  cfg.eta = 0.0;
  CHECK_FALSE(validate(cfg).ok());
  cfg.eta = 1.0;
  CHECK_FALSE(validate(cfg).ok());
}

TEST_CASE("powers must be positive") {
  SystemConfig cfg;
  cfg.power = 0.0;
  CHECK_FALSE(validate(cfg).ok());
  cfg.power = 1.0;
  cfg.noise_var = -1.0;
  CHECK_FALSE(validate(cfg).ok());
}

TEST_CASE("config text parser handles comments and whitespace") {
  SystemConfig cfg = parse_config_text(
      "# experiment setup\n"
      "n_t = 256\n"
      "\n"
      "  eta=0.2  \n"
      "phi=0.7\n");
  CHECK(cfg.n_t == 256);
  CHECK(cfg.eta == doctest::Approx(0.2));
  CHECK(cfg.phi == doctest::Approx(0.7));
  CHECK(cfg.m_t == 4);  // untouched default
}

TEST_CASE("unknown keys are errors with line numbers") {
  try {
    parse_config_text("n_t=64\nbogus_key=3\n");
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("bogus_key") != std::string::npos);
  }
}

TEST_CASE("malformed values are rejected") {
  CHECK_THROWS_AS(parse_config_text("n_t=12x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("phi=0.5junk\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("n_t\n"), std::invalid_argument);
}

TEST_CASE("serialize round-trips through the parser") {
  SystemConfig cfg = SystemConfig::symmetric(512, 165, 4, 96, 16, 1.584893,
                                             1.0, 0.9, 0.1);
  SystemConfig back = parse_config_text(serialize(cfg));
  CHECK(back.n_t == cfg.n_t);
  CHECK(back.l_t == cfg.l_t);
  CHECK(back.m_r == cfg.m_r);
  CHECK(back.power == doctest::Approx(cfg.power).epsilon(1e-15));
  CHECK(back.phi == doctest::Approx(cfg.phi).epsilon(1e-15));
  CHECK(back.eta == doctest::Approx(cfg.eta).epsilon(1e-15));
}

TEST_CASE("apply_override") {
  SystemConfig cfg;
  apply_override(cfg, "l_t=48");
  CHECK(cfg.l_t == 48);
  CHECK_THROWS_AS(apply_override(cfg, "nope=1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_override(cfg, "l_t"), std::invalid_argument);
}

TEST_CASE("db helpers") {
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(linear_to_db(100.0) == doctest::Approx(20.0));
  CHECK(linear_to_db(db_to_linear(-7.3)) == doctest::Approx(-7.3));
}

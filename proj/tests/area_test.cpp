#include <cmath>
#include <random>

#include "doctest.h"
#include "hiercoop/area.hpp"
#include "oracles.hpp"

using namespace hiercoop;

TEST_CASE("classify examples") {
  const RegimeReport dense = classify({200, 100.0, 2.0, 1.0});
  CHECK(dense.regime == Regime::Dense);
  CHECK(dense.factor == 1.0);
  CHECK(dense.threshold == 100.0);

  const RegimeReport sparse = classify({200, 100.0, 4.0, 1.0});
  CHECK(sparse.regime == Regime::Sparse);
  CHECK(sparse.factor == 0.02);
  CHECK(sparse.threshold == 200.0 - 10000.0);

  const RegimeReport boundary = classify({200, 100.0, 4.0, 50.0});
  CHECK(boundary.regime == Regime::Dense);
  CHECK(boundary.factor == 1.0);
  CHECK(boundary.threshold == 0.0);
}

TEST_CASE("boundary area (c0 n)^{2/alpha} is dense") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> nodes(4, 1'000'000'000);
  std::uniform_real_distribution<double> alpha(2.0, 6.0);
  std::uniform_real_distribution<double> log_c0(std::log(0.01), std::log(100.0));
  for (int i = 0; i < 2000; ++i) {
    NetworkConfig cfg{nodes(rng), 1.0, alpha(rng), std::exp(log_c0(rng))};
    cfg.area = std::pow(cfg.c0 * static_cast<double>(cfg.n), 2.0 / cfg.alpha);
    const RegimeReport r = classify(cfg);
    CHECK(r.regime == Regime::Dense);
    CHECK(r.factor == 1.0);
  }
}

TEST_CASE("factor monotonicity") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> nodes(4, 100'000'000);
  std::uniform_real_distribution<double> log_area(0.0, std::log(1e8));
  std::uniform_real_distribution<double> alpha(2.0, 5.0);
  std::uniform_real_distribution<double> log_c0(std::log(0.01), std::log(100.0));
  for (int i = 0; i < 2000; ++i) {
    const NetworkConfig cfg{nodes(rng), std::exp(log_area(rng)), alpha(rng), std::exp(log_c0(rng))};
    const RegimeReport base = classify(cfg);
    CHECK(base.factor > 0.0);
    CHECK(base.factor <= 1.0);
    CHECK((base.factor == 1.0) == (base.regime == Regime::Dense));

    NetworkConfig bigger_area = cfg;
    bigger_area.area *= 1.7;
    CHECK(classify(bigger_area).factor <= base.factor);

    NetworkConfig more_nodes = cfg;
    more_nodes.n = cfg.n * 2;
    CHECK(classify(more_nodes).factor >= base.factor);

    NetworkConfig higher_c0 = cfg;
    higher_c0.c0 *= 1.3;
    CHECK(classify(higher_c0).factor >= base.factor);
  }
}

TEST_CASE("factor is continuous across the boundary") {
  const NetworkConfig cfg{1000, std::pow(1000.0, 2.0 / 3.0), 3.0, 1.0};
  NetworkConfig just_above = cfg;
  just_above.area *= 1.0 + 1e-9;
  CHECK(classify(cfg).factor == 1.0);
  CHECK(classify(just_above).factor == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("throughput_with_area") {
  const SchemeParams p = derive(1.0, 1.0);
  SUBCASE("dense equals optimal_modified") {
    const ThroughputReport t = throughput_with_area({131072, 10.0, 2.0, 1.0}, p);
    CHECK(t.value == optimal_modified(131072, p).value);
    CHECK(t.area_factor == 1.0);
  }
  SUBCASE("factor one half by construction") {
    const double area = std::pow(2.0 * 131072.0, 2.0 / 3.0);
    const ThroughputReport t = throughput_with_area({131072, area, 3.0, 1.0}, p);
    CHECK(t.area_factor == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(t.value == doctest::Approx(0.5 * optimal_modified(131072, p).value).epsilon(1e-12));
    REQUIRE(t.integer_value);
    CHECK(*t.integer_value == doctest::Approx(0.5 * *optimal_modified(131072, p).integer_value).epsilon(1e-12));
  }
  SUBCASE("sparse example") {
    const ThroughputReport t = throughput_with_area({200, 100.0, 4.0, 1.0}, p);
    CHECK(t.area_factor == 0.02);
    CHECK(t.value == doctest::Approx(0.0284942856702827604).epsilon(1e-12));
  }
  SUBCASE("non-decreasing in c0") {
    double previous = 0.0;
    for (double c0 : {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
      const double v = throughput_with_area({5000, 400.0, 3.5, c0}, p).value;
      CHECK(v >= previous);
      previous = v;
    }
  }
  SUBCASE("invalid config") { CHECK_THROWS_AS(throughput_with_area({200, 100.0, 1.5, 1.0}, p), DomainError); }
}

TEST_CASE("area_from_exponent") {
  CHECK(area_from_exponent(10000, 0.0) == 1.0);
  CHECK(area_from_exponent(10000, 1.0) == 10000.0);
  CHECK(area_from_exponent(10000, 0.5) == doctest::Approx(100.0).epsilon(1e-14));
}

TEST_CASE("c0_tradeoff") {
  const NetworkConfig sparse{200, 100.0, 4.0, 1.0};
  SUBCASE("single candidate is returned as is") {
    const auto rows = c0_tradeoff(sparse, {{3.0, 1.0, 1.0}});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].candidate.c0 == 3.0);
    CHECK(rows[0].report);
  }
  SUBCASE("higher c0 with equal rates wins by exactly its ratio in the sparse regime") {
    const auto rows = c0_tradeoff(sparse, {{1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].candidate.c0 == 2.0);
    CHECK(rows[0].report->value == doctest::Approx(2.0 * rows[1].report->value).epsilon(1e-14));
  }
  SUBCASE("ranking by full evaluation") {
    const auto rows = c0_tradeoff(sparse, {{1.0, 2.0, 2.0}, {0.5, 3.0, 3.0}});
    REQUIRE(rows.size() == 2);
    const double first = 0.02 * optimal_modified(200, derive(2.0, 2.0)).value;
    const double second = 0.01 * optimal_modified(200, derive(3.0, 3.0)).value;
    const double expected_best = std::max(first, second);
    CHECK(rows[0].report->value == doctest::Approx(expected_best).epsilon(1e-12));
    CHECK(rows[0].report->value >= rows[1].report->value);
    // Same Q/R, so throughput scales with R: 0.02 * 2 beats 0.01 * 3.
    CHECK(rows[0].candidate.c0 == 1.0);
  }
  SUBCASE("bad candidates annotate their row and sort last") {
    const auto rows = c0_tradeoff(sparse, {{1.0, 2.0, 0.1}, {1.0, 1.0, 1.0}});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].error.empty());
    CHECK_FALSE(rows[1].error.empty());
    CHECK_FALSE(rows[1].report);
  }
  SUBCASE("empty candidate list") { CHECK_THROWS_AS(c0_tradeoff(sparse, {}), DomainError); }
}

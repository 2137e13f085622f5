#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "hiercoop/optimizer.hpp"
#include "hiercoop/throughput.hpp"
#include "oracles.hpp"

using namespace hiercoop;

namespace {

double walk(const std::vector<double>& sizes, const SchemeParams& p) {
  return oracle::tree_walk_delay(sizes, 1.0, p.rate(), p.quantized_rate());
}

// f(M1) evaluated from its definition, independent of the library.
double throughput_of_top(int h, double top, double n, const SchemeParams& p) {
  const double c = 4.0 * p.quantized_rate() / p.rate();
  const double ratio = p.quantized_rate() / p.rate();
  const double denom = 16.0 / p.rate() * (h - 1) * (1.0 + ratio) * std::pow(c, (h - 2) / 2.0) *
                           std::pow(top / 2.0, static_cast<double>(h) / (h - 1)) +
                       2.0 * n / p.rate();
  return n * top / denom;
}

}  // namespace

TEST_CASE("optimal_cluster_sizes, h = 3, matches grid search") {
  const SchemeParams p = derive(1.0, 1.0);
  const HierarchyPlan plan = optimal_cluster_sizes(3, 512.0, p);
  REQUIRE(plan.sizes.size() == 2);
  CHECK(plan.sizes[1] == doctest::Approx(16.0).epsilon(1e-12));

  const auto grid = oracle::grid_minimum([&](double m2) { return walk({512.0, m2}, p); }, 2.0, 511.75, 0.25);
  CHECK(std::abs(grid.x - 16.0) <= 0.01 * 16.0);
  CHECK(oracle::relative_error(minimal_delay(3, 512.0, 1.0, p).slots, grid.value) <= 1e-3);
}

TEST_CASE("optimal_cluster_sizes, h = 2, has no interior sizes") {
  const SchemeParams p = derive(1.0, 1.0);
  const HierarchyPlan plan = optimal_cluster_sizes(2, 100.0, p);
  CHECK(plan.sizes == std::vector<double>{100.0});
}

TEST_CASE("optimal_cluster_sizes, h = 4, matches coordinate descent") {
  const SchemeParams p = derive(1.0, 1.0);
  const HierarchyPlan plan = optimal_cluster_sizes(4, 4096.0, p);
  REQUIRE(plan.sizes.size() == 3);
  // c^{-(i-1)(h-i)/2} is 4^{-1} for both interior sizes when h = 4.
  CHECK(plan.sizes[1] == doctest::Approx(2.0 / 4.0 * std::pow(2048.0, 2.0 / 3.0)).epsilon(1e-12));
  CHECK(plan.sizes[2] == doctest::Approx(2.0 / 4.0 * std::pow(2048.0, 1.0 / 3.0)).epsilon(1e-12));
  CHECK(plan.sizes[1] == doctest::Approx(80.6349471932718825).epsilon(1e-12));
  CHECK(plan.sizes[2] == doctest::Approx(6.34960420787279790).epsilon(1e-12));

  const auto [best, value] = oracle::coordinate_descent(
      [&](const std::vector<double>& x) { return walk({4096.0, x[0], x[1]}, p); }, {200.0, 20.0});
  CHECK(std::abs(best[0] - plan.sizes[1]) <= 0.01 * plan.sizes[1]);
  CHECK(std::abs(best[1] - plan.sizes[2]) <= 0.01 * plan.sizes[2]);
  CHECK(oracle::relative_error(minimal_delay(4, 4096.0, 1.0, p).slots, value) <= 1e-3);
  CHECK(minimal_delay(4, 4096.0, 1.0, p).slots == doctest::Approx(1248382.98410145505).epsilon(1e-12));
}

TEST_CASE("every bracket term is equal on the optimal plan") {
  for (double ratio : {0.3, 1.0, 2.5, 10.0}) {
    const SchemeParams p = derive(1.0, ratio);
    for (int h = 2; h <= 6; ++h) {
      const double top = 1e7;
      HierarchyPlan plan;
      try {
        plan = optimal_cluster_sizes(h, top, p);
      } catch (const InfeasibleError&) {
        continue;  // too deep for this c
      }
      const DelaySlots d = delay_closed_form(plan, p);
      const auto [lo, hi] = std::minmax_element(d.decomposition.begin(), d.decomposition.end());
      CHECK(*hi / *lo - 1.0 <= 1e-9);
      const double prefactor = 2.0 * top / p.rate();
      CHECK(oracle::relative_error(*lo / prefactor, equal_term(h, top, p)) <= 1e-9);
    }
  }
}

TEST_CASE("perturbing any interior size never lowers the delay") {
  const SchemeParams p = derive(1.0, 1.0);
  for (int h = 3; h <= 6; ++h) {
    const HierarchyPlan plan = optimal_cluster_sizes(h, 1e8, p);
    const double best = delay_closed_form(plan, p).slots;
    for (int i = 1; i < h - 1; ++i) {
      for (double factor : {0.5, 0.9, 1.1, 2.0}) {
        HierarchyPlan moved = plan;
        moved.sizes[i] *= factor;
        // Only valid hierarchies are comparable.
        bool valid = true;
        try {
          validate_plan(moved);
        } catch (const PlanError&) {
          valid = false;
        }
        if (valid) CHECK(delay_closed_form(moved, p).slots >= best);
      }
    }
  }
}

TEST_CASE("minimal_delay examples") {
  const SchemeParams p = derive(1.0, 1.0);
  CHECK(minimal_delay(3, 512.0, 1.0, p).slots == doctest::Approx(65536.0).epsilon(1e-12));
  CHECK(minimal_delay(3, 512.0, 1.0, p).slots ==
        doctest::Approx(delay_recursive(optimal_cluster_sizes(3, 512.0, p), p).slots).epsilon(1e-12));
  CHECK(minimal_delay(2, 8.0, 1.0, p).slots == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(minimal_delay(3, 512.0, 1.0, p).slots <= 81920.0);

  for (int h = 2; h <= 6; ++h) {
    const SchemeParams q = derive(2.0, 3.0);
    const double top = 1e12;
    const double direct = delay_closed_form(optimal_cluster_sizes(h, top, q, 2.5), q).slots;
    CHECK(oracle::relative_error(minimal_delay(h, top, 2.5, q).slots, direct) <= 1e-12);
  }
}

TEST_CASE("infeasible hierarchies are rejected") {
  const SchemeParams p = derive(1.0, 1.0);
  CHECK_THROWS_AS(optimal_cluster_sizes(2, 1.5, p), InfeasibleError);
  CHECK_THROWS_AS(optimal_cluster_sizes(8, 64.0, p), InfeasibleError);
  CHECK_THROWS_AS(optimal_cluster_sizes(1, 64.0, p), DomainError);
  CHECK_THROWS_AS(minimal_delay(8, 64.0, 1.0, p), InfeasibleError);
}

TEST_CASE("optimal_top_cluster matches golden-section maximisation of f(M1)") {
  const SchemeParams p = derive(1.0, 1.0);
  const std::int64_t n = 131072;

  const double m2 = optimal_top_cluster(2, n, p);
  CHECK(m2 == doctest::Approx(181.019335983756166).epsilon(1e-12));
  const auto g2 = oracle::golden_maximum([&](double m) { return throughput_of_top(2, m, n, p); }, 2.0, n);
  CHECK(std::abs(g2.x - m2) <= 0.01 * m2);

  const double m3 = optimal_top_cluster(3, n, p);
  CHECK(m3 == doctest::Approx(512.0).epsilon(1e-12));
  const auto g3 = oracle::golden_maximum([&](double m) { return throughput_of_top(3, m, n, p); }, 2.0, n);
  CHECK(std::abs(g3.x - m3) <= 0.01 * m3);
}

TEST_CASE("optimal_top_cluster satisfies its stationarity identity") {
  for (double ratio : {0.3, 1.0, 4.0}) {
    const SchemeParams p = derive(1.0, ratio);
    for (int h = 2; h <= 6; ++h) {
      for (std::int64_t n : {std::int64_t{1} << 16, std::int64_t{1} << 24, std::int64_t{1} << 40}) {
        double top = 0.0;
        try {
          top = optimal_top_cluster(h, n, p);
        } catch (const InfeasibleError&) {
          continue;
        }
        const double rhs = 8.0 * (1.0 + ratio) * std::pow(p.c(), (h - 2) / 2.0) *
                           std::pow(top / 2.0, static_cast<double>(h) / (h - 1));
        CHECK(oracle::relative_error(rhs, static_cast<double>(n)) <= 1e-9);
        CHECK(top < static_cast<double>(n));
      }
    }
  }
}

TEST_CASE("optimal_top_cluster rejects tiny networks") {
  const SchemeParams p = derive(1.0, 1.0);
  CHECK_THROWS_AS(optimal_top_cluster(2, 4, p), InfeasibleError);
  CHECK_THROWS_AS(optimal_top_cluster(2, 3, p), DomainError);
}

TEST_CASE("layer_choice at n = 131072, Q = R") {
  const SchemeParams p = derive(1.0, 1.0);
  const LayerChoice choice = layer_choice(131072, p);
  CHECK(choice.h_approx == 4.0);
  CHECK(choice.h_exact == doctest::Approx(3.21823903720993820).epsilon(1e-12));
  CHECK(choice.h_int == 3);
  CHECK(choice.feasible);

  // Brute force over every h the closed form allows, feasible or not.
  int best_h = 2;
  for (int h = 2; h <= 8; ++h) {
    if (layer_throughput_formula(h, 131072.0, p) > layer_throughput_formula(best_h, 131072.0, p)) best_h = h;
  }
  CHECK(best_h == choice.h_int);
}

TEST_CASE("h_int is the argmax over every evaluated layer count") {
  for (double ratio : {0.3, 1.0, 3.0}) {
    const SchemeParams p = derive(1.0, ratio);
    for (std::int64_t n : {std::int64_t{1000}, std::int64_t{1} << 20, std::int64_t{1} << 40}) {
      const LayerChoice choice = layer_choice(n, p, 20);
      for (const auto& [h, value] : choice.evaluated) {
        CHECK(layer_throughput(choice.h_int, n, p).value >= value);
        if (value == layer_throughput(choice.h_int, n, p).value) CHECK(choice.h_int <= h);
      }
    }
  }
}

TEST_CASE("layer_choice errors") {
  const SchemeParams p = derive(1.0, 1.0);
  CHECK_THROWS_AS(layer_choice(3, p), DomainError);
  // n = 4 leaves no room for a top cluster of 2 nodes.
  CHECK_THROWS_AS(layer_choice(4, p), InfeasibleError);
  CHECK(default_h_max(131072, p) == 7);
}

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "hiercoop/cli/commands.hpp"
#include "hiercoop/explorer.hpp"
#include "hiercoop/optimizer.hpp"
#include "hiercoop/recurrence.hpp"
#include "hiercoop/throughput.hpp"

namespace hiercoop::cli {
namespace {

struct SuiteResult {
  int cases = 0;
  double worst = 0.0;
};

struct Suite {
  const char* name;
  double tolerance;
  std::function<SuiteResult(const SchemeParams&, std::mt19937_64&)> run;
};

double relative_error(double value, double reference) {
  if (value == reference) return 0.0;
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

void record(SuiteResult& result, double error) {
  ++result.cases;
  result.worst = std::max(result.worst, std::isnan(error) ? INFINITY : error);
}

std::vector<std::int64_t> power_grid(int lo_exp, int hi_exp, int step = 1) {
  std::vector<std::int64_t> grid;
  for (int k = lo_exp; k <= hi_exp; k += step) grid.push_back(std::int64_t{1} << k);
  return grid;
}

// Uniform in log space on [lo, hi].
double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  const std::uint64_t bits = rng() >> 11;
  const double u = static_cast<double>(bits) * 0x1.0p-53;
  return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
}

HierarchyPlan random_plan(std::mt19937_64& rng) {
  HierarchyPlan plan;
  plan.h = 2 + static_cast<int>(rng() % 5);
  plan.bits = log_uniform(rng, 0.1, 100.0);
  for (;;) {
    plan.sizes.assign(1, log_uniform(rng, 16.0, 1e6));
    while (static_cast<int>(plan.sizes.size()) < plan.h - 1) {
      plan.sizes.push_back(plan.sizes.back() * log_uniform(rng, 0.01, 0.9));
    }
    if (plan.sizes.back() >= 2.0) return plan;
  }
}

SuiteResult recursion_closed_form(const SchemeParams& params, std::mt19937_64& rng) {
  SuiteResult result;
  for (int i = 0; i < 200; ++i) {
    const HierarchyPlan plan = random_plan(rng);
    record(result, relative_error(delay_closed_form(plan, params).slots,
                                  delay_recursive(plan, params).slots));
  }
  return result;
}

SuiteResult amgm_equal_terms(const SchemeParams& params, std::mt19937_64& rng) {
  SuiteResult result;
  for (int i = 0; i < 200; ++i) {
    const int h = 2 + static_cast<int>(rng() % 7);
    const double top = log_uniform(rng, 64.0, 1e12);
    HierarchyPlan plan;
    try {
      plan = optimal_cluster_sizes(h, top, params);
    } catch (const InfeasibleError&) {
      continue;
    }
    const DelaySlots closed = delay_closed_form(plan, params);
    const DelaySlots best = minimal_delay(h, top, plan.bits, params);
    double error = relative_error(closed.slots, best.slots);
    for (double term : closed.decomposition) {
      error = std::max(error, relative_error(term, closed.decomposition.front()));
    }
    record(result, error);
  }
  return result;
}

SuiteResult phase_balance(const SchemeParams& params, std::mt19937_64&) {
  SuiteResult result;
  for (int h = 2; h <= 6; ++h) {
    for (std::int64_t n : power_grid(12, 30)) {
      double top = 0.0;
      try {
        top = optimal_top_cluster(h, n, params);
      } catch (const InfeasibleError&) {
        continue;
      }
      const PhaseSlots slots = phase_slots(h, top, n, 1.0, params);
      record(result, relative_error(slots.phase1 + slots.phase3, (h - 1) * slots.phase2));
    }
  }
  return result;
}

SuiteResult layer_optimum(const SchemeParams& params, std::mt19937_64&) {
  SuiteResult result;
  for (int h = 2; h <= 8; ++h) {
    for (std::int64_t n : power_grid(8, 50, 2)) {
      ThroughputReport t;
      try {
        t = layer_throughput(h, n, params);
      } catch (const InfeasibleError&) {
        continue;
      }
      const double f = throughput_given_top_cluster(h, t.top_cluster, n, 1.0, params).value;
      record(result, relative_error(f, t.value));
    }
  }
  return result;
}

// Worst relative excess of any throughput over the upper bound.
SuiteResult upper_bound_holds(const SchemeParams& params, std::mt19937_64&) {
  SuiteResult result;
  for (std::int64_t n : power_grid(4, 60, 2)) {
    const double bound = upper_bound(n, params);
    for (int h = 2; h <= 20; ++h) {
      const double t = layer_throughput_formula(h, static_cast<double>(n), params);
      record(result, std::max(0.0, (t - bound) / bound));
    }
    record(result, std::max(0.0, (optimal_modified(n, params).value - bound) / bound));
  }
  return result;
}

SuiteResult ratio_two_route(const SchemeParams& params, std::mt19937_64&) {
  SuiteResult result;
  for (std::int64_t n : power_grid(10, 44)) {
    record(result, relative_error(ratio_original_closed_form(n, params), ratio_original(n, params)));
  }
  return result;
}

SuiteResult per_pair_two_route(const SchemeParams& params, std::mt19937_64&) {
  SuiteResult result;
  for (std::int64_t n : power_grid(6, 44)) {
    record(result, relative_error(per_pair_rate_identity(n, params), per_pair_rate(n, params)));
  }
  return result;
}

std::string scientific(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SchemeParams params = [&] {
    try {
      return derive(cfg.rate, cfg.quantized_rate);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }();
  if (cfg.c_fault != 1.0) params = with_corrupted_c(params, cfg.c_fault);

  const Suite suites[] = {
      {"recursion_closed_form", 1e-12, recursion_closed_form},
      {"amgm_equal_terms", 1e-9, amgm_equal_terms},
      {"phase_balance", 1e-9, phase_balance},
      {"layer_optimum", 1e-9, layer_optimum},
      {"upper_bound", 0.0, upper_bound_holds},
      {"ratio_two_route", 1e-9, ratio_two_route},
      {"per_pair_two_route", 1e-9, per_pair_two_route},
  };

  int passed = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < std::size(suites); ++i) {
    const Suite& suite = suites[i];
    std::mt19937_64 rng(cfg.seed + i);
    SuiteResult result;
    std::string failure;
    try {
      result = suite.run(params, rng);
    } catch (const Error& e) {
      failure = e.what();
    }
    const bool ok = failure.empty() && result.cases > 0 && result.worst <= suite.tolerance;
    passed += ok ? 1 : 0;
    worst = std::max(worst, failure.empty() ? result.worst : INFINITY);
    out << suite.name << ": " << (ok ? "PASS" : "FAIL") << " cases=" << result.cases
        << " worst_rel_err=" << scientific(result.worst) << " tol=" << scientific(suite.tolerance);
    if (!failure.empty()) out << " error=" << failure;
    out << '\n';
  }
  const bool all = passed == static_cast<int>(std::size(suites));
  out << "verify: " << (all ? "PASS" : "FAIL") << ' ' << passed << '/' << std::size(suites)
      << " suites, worst_rel_err=" << scientific(worst) << ", seed=" << cfg.seed << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace hiercoop::cli

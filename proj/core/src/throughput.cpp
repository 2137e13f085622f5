#include "hiercoop/throughput.hpp"

#include <cmath>

#include "hiercoop/optimizer.hpp"

namespace hiercoop {
namespace {

void check_nodes(std::int64_t n) {
  if (n < 4) throw DomainError("n >= 4 required");
}

// sqrt(log_base(n/2)); DomainError when the logarithm is not positive.
double sqrt_log(std::int64_t n, double base) {
  if (!(base > 1.0)) throw DomainError("logarithm base must exceed 1");
  const double log_value = std::log2(n / 2.0) / std::log2(base);
  if (!(log_value > 0.0)) throw DomainError("log(n/2) must be positive");
  return std::sqrt(log_value);
}

}  // namespace

PhaseSlots phase_slots(int h, double top_cluster, std::int64_t n, double bits,
                       const SchemeParams& params) {
  if (h < 2) throw DomainError("h >= 2 required");
  if (!(top_cluster > 0.0) || !(bits > 0.0)) throw DomainError("M1 and L must be positive");
  const double min_delay = 2.0 * top_cluster * bits / params.rate() * (h - 1) *
                           equal_term(h, top_cluster, params);
  PhaseSlots slots;
  slots.phase1 = 4.0 * min_delay;
  slots.phase2 = 2.0 * static_cast<double>(n) * bits / params.rate();
  slots.phase3 = slots.phase1 * params.ratio();
  return slots;
}

ThroughputReport throughput_given_top_cluster(int h, double top_cluster, std::int64_t n,
                                              double bits, const SchemeParams& params) {
  check_nodes(n);
  if (!(top_cluster <= static_cast<double>(n))) {
    throw InfeasibleError("top cluster cannot exceed the network size");
  }
  (void)optimal_cluster_sizes(h, top_cluster, params, bits);

  ThroughputReport report;
  report.phase_slots = phase_slots(h, top_cluster, n, bits, params);
  report.value = static_cast<double>(n) * top_cluster * bits / report.phase_slots->total();
  report.h_used = h;
  report.top_cluster = top_cluster;
  report.exponent = (h - 1.0) / h;
  report.pre_constant = report.value / std::pow(n / 2.0, report.exponent);
  report.c_n = std::pow(1.0 + 1.0 / params.ratio(), report.exponent);
  report.convention = LayerConvention::Fixed;
  return report;
}

double layer_throughput_formula(double h, double n, const SchemeParams& params) {
  const double exponent = (h - 1.0) / h;
  const double pre = params.rate() /
                     (h * std::pow(1.0 + 1.0 / params.ratio(), exponent) *
                      std::pow(4.0 * params.ratio(), (h - 1.0) / 2.0));
  return pre * std::pow(n / 2.0, exponent);
}

ThroughputReport layer_throughput(int h, std::int64_t n, const SchemeParams& params) {
  check_nodes(n);
  const double top = optimal_top_cluster(h, n, params);
  (void)optimal_cluster_sizes(h, top, params);

  ThroughputReport report;
  report.h_used = h;
  report.top_cluster = top;
  report.exponent = (h - 1.0) / h;
  report.c_n = std::pow(1.0 + 1.0 / params.ratio(), report.exponent);
  report.pre_constant = params.rate() /
                        (h * report.c_n * std::pow(4.0 * params.ratio(), (h - 1.0) / 2.0));
  report.value = report.pre_constant * std::pow(n / 2.0, report.exponent);
  report.phase_slots = phase_slots(h, top, n, 1.0, params);
  report.convention = LayerConvention::Fixed;
  return report;
}

ThroughputReport optimal_modified(std::int64_t n, const SchemeParams& params) {
  check_nodes(n);
  const double s = sqrt_log(n, params.beta1());

  ThroughputReport report;
  report.convention = LayerConvention::Smooth;
  report.h_used = s;
  report.top_cluster = detail::stationary_top_cluster(s, static_cast<double>(n), params);
  report.c_n = std::pow(1.0 + 1.0 / params.ratio(), 1.0 - 1.0 / s);
  report.pre_constant = params.beta1() * params.rate() / (report.c_n * s);
  report.exponent = 1.0 - 2.0 / s;
  report.value = report.pre_constant * std::pow(n / 2.0, report.exponent);

  try {
    const LayerChoice choice = layer_choice(n, params);
    report.integer_h = choice.h_int;
    report.integer_value = layer_throughput(choice.h_int, n, params).value;
  } catch (const InfeasibleError&) {
    // No realisable integer hierarchy for this n; only the smooth value exists.
  }
  return report;
}

double upper_bound(std::int64_t n, const SchemeParams& params) {
  check_nodes(n);
  const double s = sqrt_log(n, params.beta1());
  return params.beta1() * params.rate() * std::pow(n / 2.0, 1.0 - 2.0 / s);
}

double original_optimal_layers(std::int64_t n, double beta) {
  check_nodes(n);
  return sqrt_log(n, beta);
}

double original_throughput(std::int64_t n, const SchemeParams& params) {
  check_nodes(n);
  const double s = sqrt_log(n, params.beta());
  return params.beta() * params.rate() / s * std::pow(n / 2.0, 1.0 - 2.0 / s);
}

double multihop_baseline(std::int64_t n, double c_mh) {
  if (!(c_mh > 0.0)) throw DomainError("multi-hop pre-constant must be positive");
  if (n < 1) throw DomainError("n must be positive");
  return c_mh * std::sqrt(static_cast<double>(n));
}

double per_pair_rate(std::int64_t n, const SchemeParams& params) {
  return optimal_modified(n, params).value / static_cast<double>(n);
}

double per_pair_rate_identity(std::int64_t n, const SchemeParams& params) {
  check_nodes(n);
  const double s = sqrt_log(n, params.beta1());
  const double c_n = std::pow(1.0 + 1.0 / params.ratio(), 1.0 - 1.0 / s);
  return params.beta1() * params.rate() / (c_n * s) * 0.5 * std::pow(params.beta1(), -2.0 * s);
}

}  // namespace hiercoop

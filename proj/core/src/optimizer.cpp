#include "hiercoop/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hiercoop/throughput.hpp"

namespace hiercoop {
namespace {

void check_layers(int h) {
  if (h < 2 || h > kMaxLayers) {
    throw DomainError("layer count h must lie in [2, " + std::to_string(kMaxLayers) + "]");
  }
}

}  // namespace

double equal_term(int h, double top_cluster, const SchemeParams& params) {
  return std::pow(params.c(), (h - 2) / 2.0) * std::pow(top_cluster / 2.0, 1.0 / (h - 1));
}

HierarchyPlan optimal_cluster_sizes(int h, double top_cluster, const SchemeParams& params,
                                    double bits) {
  check_layers(h);
  if (!(top_cluster >= 2.0)) {
    throw InfeasibleError("top cluster size M1 must be at least 2");
  }

  HierarchyPlan plan{h, {}, bits};
  plan.sizes.reserve(h - 1);
  plan.sizes.push_back(top_cluster);
  const double log_c = std::log(params.c());
  const double log_half_top = std::log(top_cluster / 2.0);
  for (int i = 2; i <= h - 1; ++i) {
    const double log_size = std::log(2.0) - 0.5 * (i - 1) * (h - i) * log_c +
                            static_cast<double>(h - i) / (h - 1) * log_half_top;
    plan.sizes.push_back(std::exp(log_size));
  }

  try {
    validate_plan(plan);
  } catch (const PlanError& e) {
    throw InfeasibleError("no valid " + std::to_string(h) + "-layer hierarchy for M1 = " +
                          std::to_string(top_cluster) + " (" + e.field() + ": " + e.reason() + ")");
  }
  return plan;
}

DelaySlots minimal_delay(int h, double top_cluster, double bits, const SchemeParams& params) {
  // Surfaces InfeasibleError for plans that cannot be realised.
  (void)optimal_cluster_sizes(h, top_cluster, params, bits);

  const double term = 2.0 * top_cluster * bits / params.rate() * equal_term(h, top_cluster, params);
  DelaySlots result;
  result.decomposition.assign(h - 1, term);
  result.slots = (h - 1) * term;
  return result;
}

namespace detail {

double stationary_top_cluster(double h, double n, const SchemeParams& params) {
  const double scale = 8.0 * (1.0 + params.ratio()) * std::pow(params.c(), (h - 2.0) / 2.0);
  const double exponent = (h - 1.0) / h;
  return 2.0 * std::pow(scale, -exponent) * std::pow(n, exponent);
}

}  // namespace detail

double optimal_top_cluster(int h, std::int64_t n, const SchemeParams& params) {
  check_layers(h);
  if (n < 4) throw DomainError("n >= 4 required");
  const double top = detail::stationary_top_cluster(h, static_cast<double>(n), params);
  if (!(top >= 2.0)) {
    throw InfeasibleError("optimal top cluster for h = " + std::to_string(h) + " holds fewer than 2 nodes");
  }
  if (!(top < static_cast<double>(n))) {
    throw InfeasibleError("optimal top cluster for h = " + std::to_string(h) + " exceeds the network size");
  }
  return top;
}

int default_h_max(std::int64_t n, const SchemeParams& params) {
  if (n < 4) throw DomainError("n >= 4 required");
  const double h_approx = std::sqrt(std::log2(n / 2.0) / std::log2(params.beta1()));
  return std::min(kMaxLayers, static_cast<int>(std::ceil(h_approx)) + 3);
}

LayerChoice layer_choice(std::int64_t n, const SchemeParams& params, int h_max) {
  if (n < 4) throw DomainError("n >= 4 required");
  if (h_max <= 0) h_max = default_h_max(n, params);
  if (h_max < 2) throw DomainError("h_max must be at least 2");
  h_max = std::min(h_max, kMaxLayers);

  LayerChoice choice;
  const double log_beta1 = std::log(params.beta1());
  const double log_half_n = std::log(n / 2.0);
  choice.h_approx = std::sqrt(std::log2(n / 2.0) / std::log2(params.beta1()));

  const double offset = log_half_n - std::log(1.0 + 1.0 / params.ratio());
  const double discriminant = 1.0 + 4.0 * log_beta1 * offset;
  // Without a real stationary point the quadratic has no positive root.
  choice.h_exact = discriminant > 0.0
                       ? std::max(0.0, (std::sqrt(discriminant) - 1.0) / (2.0 * log_beta1))
                       : 0.0;

  double best = 0.0;
  for (int h = 2; h <= h_max; ++h) {
    double value = 0.0;
    try {
      value = layer_throughput(h, n, params).value;
    } catch (const InfeasibleError&) {
      continue;
    }
    choice.evaluated.emplace_back(h, value);
    if (!choice.feasible || value > best) {
      best = value;
      choice.h_int = h;
      choice.feasible = true;
    }
  }
  if (!choice.feasible) {
    throw InfeasibleError("no feasible layer count in [2, " + std::to_string(h_max) + "] for n = " +
                          std::to_string(n));
  }
  return choice;
}

}  // namespace hiercoop

#include "hiercoop/params.hpp"

#include <cmath>
#include <string>

namespace hiercoop {

SchemeParams derive(double rate, double quantized_rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw DomainError("R must be a positive finite rate");
  }
  if (!(quantized_rate > 0.0) || !std::isfinite(quantized_rate)) {
    throw DomainError("Q must be a positive finite rate");
  }
  const double ratio = quantized_rate / rate;
  if (!(ratio > 0.25)) {
    throw DomainError("Q/R must exceed 1/4 so that beta1 = 2 sqrt(Q/R) > 1");
  }

  SchemeParams p;
  p.rate_ = rate;
  p.quantized_rate_ = quantized_rate;
  p.beta1_ = 2.0 * std::sqrt(ratio);
  p.beta_ = 2.0 * std::sqrt(1.0 + ratio);
  p.c_ = 4.0 * ratio;
  return p;
}

SchemeParams with_corrupted_c(const SchemeParams& params, double factor) {
  SchemeParams p = params;
  p.c_ *= factor;
  return p;
}

void validate(const NetworkConfig& cfg) {
  if (cfg.n < 4) throw DomainError("n >= 4 required (got n = " + std::to_string(cfg.n) + ")");
  if (!(cfg.area > 0.0) || !std::isfinite(cfg.area)) throw DomainError("area > 0 required");
  if (!(cfg.alpha >= 2.0) || !std::isfinite(cfg.alpha)) throw DomainError("alpha >= 2 required");
  if (!(cfg.c0 > 0.0) || !std::isfinite(cfg.c0)) throw DomainError("c0 > 0 required");
}

void validate_plan(const HierarchyPlan& plan) {
  if (plan.h < 2) throw PlanError("h", "at least 2 layers required");
  if (plan.h > kMaxLayers) throw PlanError("h", "at most " + std::to_string(kMaxLayers) + " layers supported");
  if (plan.sizes.size() != static_cast<std::size_t>(plan.h - 1)) {
    throw PlanError("sizes", "expected h-1 = " + std::to_string(plan.h - 1) + " cluster sizes, got " +
                                 std::to_string(plan.sizes.size()));
  }
  if (!(plan.bits > 0.0) || !std::isfinite(plan.bits)) throw PlanError("bits", "must be positive");
  for (std::size_t i = 0; i < plan.sizes.size(); ++i) {
    if (!std::isfinite(plan.sizes[i])) {
      throw PlanError("sizes[" + std::to_string(i) + "]", "must be finite");
    }
  }
  for (std::size_t i = 1; i < plan.sizes.size(); ++i) {
    if (!(plan.sizes[i] < plan.sizes[i - 1])) {
      throw PlanError("sizes[" + std::to_string(i) + "]", "cluster sizes must be strictly decreasing");
    }
  }
  if (!(plan.sizes.back() >= 2.0)) {
    throw PlanError("sizes[" + std::to_string(plan.sizes.size() - 1) + "]", "smallest cluster must hold at least 2 nodes");
  }
}

}  // namespace hiercoop

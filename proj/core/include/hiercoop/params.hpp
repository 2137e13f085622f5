#pragma once

#include <cstdint>
#include <vector>

#include "hiercoop/errors.hpp"

namespace hiercoop {

/// Physical-layer rate constants of the cooperation scheme and the
/// constants derived from them.
///
/// `rate()` is the basic rate R and `quantized_rate()` the rate Q at which
/// destination-cluster nodes forward quantized observations, both in bits
/// per time slot. The derived values are
///   beta1 = 2 sqrt(Q/R)        (layer-count logarithm base)
///   beta  = 2 sqrt(1 + Q/R)    (base of the original three-phase scheme)
///   c     = 4 Q/R = beta1^2    (per-level growth of the delay sum)
/// Construct through derive(); instances are immutable.
class SchemeParams {
 public:
  double rate() const noexcept { return rate_; }
  double quantized_rate() const noexcept { return quantized_rate_; }
  double ratio() const noexcept { return quantized_rate_ / rate_; }
  double beta1() const noexcept { return beta1_; }
  double beta() const noexcept { return beta_; }
  double c() const noexcept { return c_; }

  friend SchemeParams derive(double rate, double quantized_rate);

  // Fault-injection hook used by the verification suites: returns a copy
  // whose c is scaled by `factor` while R and Q are untouched.
  friend SchemeParams with_corrupted_c(const SchemeParams& params, double factor);

 private:
  SchemeParams() = default;

  double rate_ = 0.0;
  double quantized_rate_ = 0.0;
  double beta1_ = 0.0;
  double beta_ = 0.0;
  double c_ = 0.0;
};

// Throws DomainError unless R > 0, Q > 0 and Q/R > 1/4.
SchemeParams derive(double rate, double quantized_rate);

SchemeParams with_corrupted_c(const SchemeParams& params, double factor);

/// A single network instance.
struct NetworkConfig {
  std::int64_t n = 0;
  double area = 1.0;
  double alpha = 2.0;
  double c0 = 1.0;
};

// Throws DomainError naming the first violated field
// (n >= 4, area > 0, alpha >= 2, c0 > 0).
void validate(const NetworkConfig& cfg);

/// A concrete hierarchy for the all-way multiple-access problem:
/// `h` layers, cluster sizes M1 > M2 > ... > M_{h-1} (real valued, fluid
/// model) and `bits` L delivered per node pair per round.
struct HierarchyPlan {
  int h = 2;
  std::vector<double> sizes;
  double bits = 1.0;
};

// Upper bound on h accepted anywhere in the library.
inline constexpr int kMaxLayers = 64;

// Throws PlanError for the first violated invariant, checked in order:
// h >= 2 (and <= kMaxLayers), sizes.size() == h-1, bits > 0, every size finite,
// strictly decreasing sizes, last size >= 2.
void validate_plan(const HierarchyPlan& plan);

}  // namespace hiercoop

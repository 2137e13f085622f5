#pragma once

#include <cstdint>
#include <optional>

#include "hiercoop/params.hpp"

namespace hiercoop {

/// Top-layer slot counts of one round of the scheme.
struct PhaseSlots {
  double phase1 = 0.0;  // all-way multiple access inside source clusters
  double phase2 = 0.0;  // virtual-MIMO transfer between clusters, 2 n L/R
  double phase3 = 0.0;  // quantized-observation delivery, Phase 1 scaled by Q/R

  double total() const noexcept { return phase1 + phase2 + phase3; }
};

enum class LayerConvention {
  Fixed,     // h given by the caller
  Smooth,    // h = sqrt(log_beta1(n/2)) treated as real
  Integer,   // h = argmax over integer layer counts
};

/// Throughput (bits per slot, network-wide) with its decomposition
/// value = pre_constant * (n/2)^exponent.
struct ThroughputReport {
  double value = 0.0;
  double h_used = 0.0;
  double top_cluster = 0.0;
  std::optional<PhaseSlots> phase_slots;
  double pre_constant = 0.0;
  double exponent = 0.0;
  double c_n = 0.0;
  LayerConvention convention = LayerConvention::Fixed;

  // Filled by optimal_modified: the integer-h counterpart of a smooth value.
  std::optional<int> integer_h;
  std::optional<double> integer_value;

  // Power-concentration multiplier already applied to value.
  double area_factor = 1.0;
};

// Slot counts for h layers with top clusters of `top_cluster` nodes. No
// feasibility checks beyond positivity; useful for identities at any M1.
PhaseSlots phase_slots(int h, double top_cluster, std::int64_t n, double bits,
                       const SchemeParams& params);

// f(M1) = n M1 L / (Phase 1 + Phase 2 + Phase 3). Requires a realisable
// hierarchy under M1 (InfeasibleError otherwise) and M1 <= n.
ThroughputReport throughput_given_top_cluster(int h, double top_cluster, std::int64_t n,
                                              double bits, const SchemeParams& params);

// T_h^opt(n) = R / [h (1+R/Q)^{(h-1)/h} (4Q/R)^{(h-1)/2}] (n/2)^{(h-1)/h}
// as a bare formula of real h and n.
double layer_throughput_formula(double h, double n, const SchemeParams& params);

// T_h^opt(n) at the optimal M1, with phase slots for L = 1. Throws
// InfeasibleError when the optimal hierarchy cannot be realised.
ThroughputReport layer_throughput(int h, std::int64_t n, const SchemeParams& params);

// Smooth-h optimum T1*(n) = beta1 R / (c_n s) (n/2)^{1 - 2/s}, s = sqrt(log_beta1(n/2)),
// c_n = (1+R/Q)^{1-1/s}. The integer-h optimum is attached when some
// layer count is feasible for n.
ThroughputReport optimal_modified(std::int64_t n, const SchemeParams& params);

// beta1 R (n/2)^{1 - 2/sqrt(log_beta1(n/2))}; bounds T_h^opt for every h.
double upper_bound(std::int64_t n, const SchemeParams& params);

// Original hierarchical scheme: h*(n) = sqrt(log_beta(n/2)).
double original_optimal_layers(std::int64_t n, double beta);

// Original hierarchical scheme: T*(n) = beta R / s (n/2)^{1-2/s}, s = sqrt(log_beta(n/2)),
// beta = 2 sqrt(1 + Q/R).
double original_throughput(std::int64_t n, const SchemeParams& params);

// c_mh sqrt(n); c_mh is the caller's multi-hop pre-constant.
double multihop_baseline(std::int64_t n, double c_mh);

// optimal_modified(n).value / n.
double per_pair_rate(std::int64_t n, const SchemeParams& params);

// Same quantity via (beta1 R / (c_n s)) (1/2) beta1^{-2 s}.
double per_pair_rate_identity(std::int64_t n, const SchemeParams& params);

}  // namespace hiercoop

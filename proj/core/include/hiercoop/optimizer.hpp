#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hiercoop/params.hpp"
#include "hiercoop/recurrence.hpp"

namespace hiercoop {

/// Optimal cluster sizes for fixed h and top cluster size M1.
///
/// Each term of the closed-form delay sum is made equal, which is the
/// AM-GM optimum because their product c^{(h-1)(h-2)/2} M1/2 does not
/// depend on the interior sizes:
///   M_i = 2 c^{-(i-1)(h-i)/2} (M1/2)^{(h-i)/(h-1)},  2 <= i <= h-1.
/// Throws DomainError for h outside [2, kMaxLayers] and InfeasibleError when
/// M1 < 2 or the resulting plan is not a valid hierarchy (a size below 2 or
/// sizes not strictly decreasing).
HierarchyPlan optimal_cluster_sizes(int h, double top_cluster, const SchemeParams& params,
                                    double bits = 1.0);

// The common value every bracket term takes on the optimal plan:
// c^{(h-2)/2} (M1/2)^{1/(h-1)}.
double equal_term(int h, double top_cluster, const SchemeParams& params);

// D* = 2 M1 (L/R) (h-1) c^{(h-2)/2} (M1/2)^{1/(h-1)}; decomposition holds the
// h-1 equal level contributions.
DelaySlots minimal_delay(int h, double top_cluster, double bits, const SchemeParams& params);

/// Top-layer cluster size maximising throughput for h layers and n nodes,
/// the stationary point of f(M1):
///   M1 = 2 [8 (1 + Q/R) c^{(h-2)/2}]^{-(h-1)/h} n^{(h-1)/h}.
/// Throws InfeasibleError when the result is below 2 or not below n.
double optimal_top_cluster(int h, std::int64_t n, const SchemeParams& params);

namespace detail {
// Unchecked stationary point, also valid for real-valued h.
double stationary_top_cluster(double h, double n, const SchemeParams& params);
}  // namespace detail

/// Layer-count selection for a network of n nodes.
struct LayerChoice {
  double h_exact = 0.0;   // root of h^2 ln(beta1) + h - [ln(n/2) - ln(1+R/Q)] = 0
  double h_approx = 0.0;  // sqrt(log_beta1(n/2))
  int h_int = 2;          // argmax of layer_throughput over the searched range
  bool feasible = false;
  // (h, T_h^opt) for every feasible h that was evaluated, ascending in h.
  std::vector<std::pair<int, double>> evaluated;
};

// Default upper end of the h search: ceil(h_approx) + 3.
int default_h_max(std::int64_t n, const SchemeParams& params);

// Evaluates layer_throughput for every h in [2, h_max] and keeps the best,
// ties toward smaller h; infeasible h are skipped. h_max <= 0 selects
// default_h_max. Throws InfeasibleError if nothing in range is feasible.
LayerChoice layer_choice(std::int64_t n, const SchemeParams& params, int h_max = 0);

}  // namespace hiercoop

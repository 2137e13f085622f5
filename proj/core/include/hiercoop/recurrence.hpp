#pragma once

#include <vector>

#include "hiercoop/params.hpp"

namespace hiercoop {

// Neighbouring clusters time-share so that concurrent transmissions do
// not interfere; every sub-problem delay is multiplied by this factor.
inline constexpr double kTimeSharingFactor = 4.0;

/// Number of time slots needed to solve an all-way multiple-access
/// problem, with the contribution of each hierarchy level.
struct DelaySlots {
  double slots = 0.0;
  std::vector<double> decomposition;
};

struct DelayOptions {
  // Round each level's slot count up to a whole slot.
  bool integer_slots = false;
  // Count M(M-1) ordered pairs in the bottom clusters instead of M^2.
  bool exact_pairs = false;
};

// Direct transmission inside a single cluster of `cluster_size` nodes, each
// pair exchanging `bits` bits at `rate`: (bits / rate) * M^2 slots.
DelaySlots delay_base(double cluster_size, double bits, double rate,
                      const DelayOptions& options = {});

// Evaluates the level recursion literally:
//   D(M1..M_{h-1}, L) = (M1/M2) 2 M1 L/R + 4 D(M2..M_{h-1}, L (Q/R)(M1/M2))
// bottoming out in delay_base. Decomposition entry i is the level-i
// contribution including its accumulated time-sharing multiplier.
DelaySlots delay_recursive(const HierarchyPlan& plan, const SchemeParams& params,
                           const DelayOptions& options = {});

// Closed-form sum
//   2 M1 (L/R) [M1/M2 + c M2/M3 + ... + c^{h-3} M_{h-2}/M_{h-1} + c^{h-2} M_{h-1}/2]
// with one decomposition entry per bracket term (already multiplied by
// the 2 M1 L/R prefactor).
DelaySlots delay_closed_form(const HierarchyPlan& plan, const SchemeParams& params);

/// Fluid-model delay versus the integer-slot evaluation of the same plan.
struct IntegerGap {
  double fluid = 0.0;
  double integer = 0.0;
  double relative_gap = 0.0;  // (integer - fluid) / fluid
};

IntegerGap integer_gap(const HierarchyPlan& plan, const SchemeParams& params,
                       bool exact_pairs = false);

}  // namespace hiercoop

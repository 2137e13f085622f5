#include "hiercoop/recurrence.hpp"

#include <cmath>
#include <numeric>
#include <span>

namespace hiercoop {
namespace {

double maybe_ceil(double slots, const DelayOptions& options) {
  return options.integer_slots ? std::ceil(slots) : slots;
}

// Appends the per-level contributions of the sub-problem on `sizes` with
// per-pair block `bits` to `out`, each multiplied by `multiplier`.
double recurse(std::span<const double> sizes, double bits, const SchemeParams& params,
               const DelayOptions& options, double multiplier, std::vector<double>& out) {
  if (sizes.size() == 1) {
    const double base = delay_base(sizes.front(), bits, params.rate(), options).slots;
    out.push_back(multiplier * base);
    return base;
  }
  const double top = sizes[0];
  const double next = sizes[1];
  const double phase2 = maybe_ceil((top / next) * 2.0 * top * bits / params.rate(), options);
  out.push_back(multiplier * phase2);
  const double inflated_bits = bits * params.ratio() * (top / next);
  const double sub = recurse(sizes.subspan(1), inflated_bits, params, options,
                             multiplier * kTimeSharingFactor, out);
  return phase2 + kTimeSharingFactor * sub;
}

}  // namespace

DelaySlots delay_base(double cluster_size, double bits, double rate, const DelayOptions& options) {
  if (!(cluster_size >= 1.0)) throw DomainError("cluster size must be at least 1");
  if (!(bits > 0.0) || !(rate > 0.0)) throw DomainError("bits and rate must be positive");
  const double pairs = options.exact_pairs ? cluster_size * (cluster_size - 1.0)
                                           : cluster_size * cluster_size;
  const double slots = maybe_ceil(bits / rate * pairs, options);
  return {slots, {slots}};
}

DelaySlots delay_recursive(const HierarchyPlan& plan, const SchemeParams& params,
                           const DelayOptions& options) {
  validate_plan(plan);
  DelaySlots result;
  result.decomposition.reserve(plan.sizes.size());
  result.slots = recurse(plan.sizes, plan.bits, params, options, 1.0, result.decomposition);
  return result;
}

DelaySlots delay_closed_form(const HierarchyPlan& plan, const SchemeParams& params) {
  validate_plan(plan);
  const auto& m = plan.sizes;
  const double prefactor = 2.0 * m.front() * plan.bits / params.rate();

  DelaySlots result;
  result.decomposition.reserve(m.size());
  double c_power = 1.0;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    result.decomposition.push_back(prefactor * c_power * m[i] / m[i + 1]);
    c_power *= params.c();
  }
  result.decomposition.push_back(prefactor * c_power * m.back() / 2.0);
  result.slots = std::accumulate(result.decomposition.begin(), result.decomposition.end(), 0.0);
  return result;
}

IntegerGap integer_gap(const HierarchyPlan& plan, const SchemeParams& params, bool exact_pairs) {
  IntegerGap gap;
  gap.fluid = delay_recursive(plan, params).slots;
  gap.integer = delay_recursive(plan, params, {.integer_slots = true, .exact_pairs = exact_pairs}).slots;
  gap.relative_gap = (gap.integer - gap.fluid) / gap.fluid;
  return gap;
}

}  // namespace hiercoop

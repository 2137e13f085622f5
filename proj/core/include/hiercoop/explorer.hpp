#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hiercoop/params.hpp"

namespace hiercoop {

// T1*(n) / T*(n) by dividing the two throughput evaluations (smooth-h on
// both sides). Builds without NDEBUG also evaluate the closed form and
// throw std::logic_error if the two disagree beyond 1e-9 relative.
double ratio_original(std::int64_t n, const SchemeParams& params);

// The same ratio via
//   (beta1 sqrt(log_beta beta1) / (c_n beta)) beta^{2 (1 - sqrt(log_beta beta1)) sqrt(log_beta(n/2))}.
double ratio_original_closed_form(std::int64_t n, const SchemeParams& params);

// ratio_original(n) / log_a(n); DomainError unless a > 1.
double ratio_log_adjusted(std::int64_t n, double log_base, const SchemeParams& params);

// Smallest n with ratio_original(n) >= threshold: doubling from n = 4, then
// bisection between the last two grid points. nullopt when n_cap is
// reached first.
std::optional<std::int64_t> find_n_for_ratio(double threshold, const SchemeParams& params,
                                             std::int64_t n_cap);

/// One grid point of a scheme comparison.
struct SweepRow {
  std::int64_t n = 0;
  std::map<std::string, double> metrics;
  std::string error;
};

// Place where the ranking of the schemes changes between two consecutive
// successful rows.
struct Crossover {
  std::size_t index = 0;  // first row with the new ranking
  std::string before;     // e.g. "T1_int>T1_smooth>T_orig>multihop"
  std::string after;
};

struct Comparison {
  std::vector<SweepRow> rows;
  std::vector<Crossover> crossovers;
};

struct CompareOptions {
  double log_base = 10.0;
  // When set, each row uses area n^nu instead of cfg.area.
  std::optional<double> nu;
  int h_max = 0;  // 0 selects the default search range
};

// Metric keys written into SweepRow::metrics.
namespace metric {
inline constexpr const char* kT1Smooth = "T1_smooth";
inline constexpr const char* kT1Int = "T1_int";
inline constexpr const char* kTOrig = "T_orig";
inline constexpr const char* kMultihop = "multihop";
inline constexpr const char* kRatio = "ratio";
inline constexpr const char* kRatioInt = "ratio_int";
inline constexpr const char* kRatioLogAdj = "ratio_log_adj";
inline constexpr const char* kPerPair = "per_pair";
inline constexpr const char* kAreaFactor = "area_factor";
}  // namespace metric

// Evaluates every scheme on each n of `n_grid` (which must be non-empty and
// strictly increasing). cfg supplies area, alpha and c0; its n is ignored.
// A row that fails records the error and the sweep continues. T1_int and
// ratio_int are absent when no integer layer count is feasible for n.
Comparison compare_schemes(const std::vector<std::int64_t>& n_grid, const NetworkConfig& cfg,
                           const SchemeParams& params, double c_mh,
                           const CompareOptions& options = {});

}  // namespace hiercoop

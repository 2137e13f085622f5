#include "hiercoop/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hiercoop/area.hpp"
#include "hiercoop/optimizer.hpp"
#include "hiercoop/throughput.hpp"

namespace hiercoop {
namespace {

double direct_ratio(std::int64_t n, const SchemeParams& params) {
  return optimal_modified(n, params).value / original_throughput(n, params);
}

std::string ranking(const SweepRow& row, const SweepRow& other) {
  static constexpr const char* kSchemes[] = {metric::kT1Int, metric::kT1Smooth, metric::kTOrig,
                                             metric::kMultihop};
  std::vector<std::pair<double, std::string>> present;
  for (const char* name : kSchemes) {
    auto it = row.metrics.find(name);
    if (it != row.metrics.end() && other.metrics.contains(name)) present.emplace_back(it->second, name);
  }
  std::stable_sort(present.begin(), present.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string out;
  for (const auto& [value, name] : present) {
    if (!out.empty()) out += '>';
    out += name;
  }
  return out;
}

}  // namespace

double ratio_original_closed_form(std::int64_t n, const SchemeParams& params) {
  if (n < 4) throw DomainError("n >= 4 required");
  const double log_beta = std::log(params.beta());
  const double log_half_n = std::log(n / 2.0);
  if (!(log_half_n > 0.0)) throw DomainError("log(n/2) must be positive");

  const double s1 = std::sqrt(log_half_n / std::log(params.beta1()));
  const double c_n = std::pow(1.0 + 1.0 / params.ratio(), 1.0 - 1.0 / s1);
  const double root = std::sqrt(std::log(params.beta1()) / log_beta);  // sqrt(log_beta beta1)
  const double growth = 2.0 * (1.0 - root) * std::sqrt(log_half_n / log_beta);
  return params.beta1() * root / (c_n * params.beta()) * std::exp(growth * log_beta);
}

double ratio_original(std::int64_t n, const SchemeParams& params) {
  const double direct = direct_ratio(n, params);
#ifndef NDEBUG
  const double closed = ratio_original_closed_form(n, params);
  if (std::abs(direct - closed) > 1e-9 * std::abs(closed)) {
    throw std::logic_error("ratio routes disagree at n = " + std::to_string(n));
  }
#endif
  return direct;
}

double ratio_log_adjusted(std::int64_t n, double log_base, const SchemeParams& params) {
  if (!(log_base > 1.0)) throw DomainError("log base a must exceed 1");
  const double log_n = std::log(static_cast<double>(n)) / std::log(log_base);
  if (!(log_n > 0.0)) throw DomainError("log_a(n) must be positive");
  return ratio_original(n, params) / log_n;
}

std::optional<std::int64_t> find_n_for_ratio(double threshold, const SchemeParams& params,
                                             std::int64_t n_cap) {
  if (!(threshold > 0.0)) throw DomainError("threshold must be positive");
  if (n_cap < 4) throw DomainError("n_cap must be at least 4");

  std::int64_t lo = 4;
  if (ratio_original(lo, params) >= threshold) return lo;
  while (lo < n_cap) {
    const std::int64_t hi = lo > n_cap / 2 ? n_cap : 2 * lo;
    if (ratio_original(hi, params) >= threshold) {
      std::int64_t fail = lo;
      std::int64_t pass = hi;
      while (pass - fail > 1) {
        const std::int64_t mid = fail + (pass - fail) / 2;
        if (ratio_original(mid, params) >= threshold) {
          pass = mid;
        } else {
          fail = mid;
        }
      }
      return pass;
    }
    lo = hi;
  }
  return std::nullopt;
}

Comparison compare_schemes(const std::vector<std::int64_t>& n_grid, const NetworkConfig& cfg,
                           const SchemeParams& params, double c_mh,
                           const CompareOptions& options) {
  if (n_grid.empty()) throw DomainError("n grid must not be empty");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw DomainError("n grid must be strictly increasing");
  }

  Comparison out;
  out.rows.reserve(n_grid.size());
  for (const std::int64_t n : n_grid) {
    SweepRow row;
    row.n = n;
    try {
      NetworkConfig local = cfg;
      local.n = n;
      if (options.nu) local.area = area_from_exponent(n, *options.nu);

      const ThroughputReport modified = optimal_modified(n, params);
      const double original = original_throughput(n, params);
      auto& m = row.metrics;
      m[metric::kT1Smooth] = modified.value;
      m[metric::kTOrig] = original;
      m[metric::kMultihop] = multihop_baseline(n, c_mh);
      m[metric::kRatio] = ratio_original(n, params);
      m[metric::kRatioLogAdj] = ratio_log_adjusted(n, options.log_base, params);
      m[metric::kPerPair] = modified.value / static_cast<double>(n);
      m[metric::kAreaFactor] = classify(local).factor;
      bool has_integer = modified.integer_value.has_value();
      double integer = modified.integer_value.value_or(0.0);
      if (options.h_max > 0) {
        try {
          const LayerChoice choice = layer_choice(n, params, options.h_max);
          integer = layer_throughput(choice.h_int, n, params).value;
          has_integer = true;
        } catch (const InfeasibleError&) {
          has_integer = false;
        }
      }
      if (has_integer) {
        m[metric::kT1Int] = integer;
        m[metric::kRatioInt] = integer / original;
      }
    } catch (const Error& e) {
      row.metrics.clear();
      row.error = e.what();
    }
    out.rows.push_back(std::move(row));
  }

  const SweepRow* previous = nullptr;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const SweepRow& row = out.rows[i];
    if (!row.error.empty()) continue;
    if (previous != nullptr) {
      const std::string before = ranking(*previous, row);
      const std::string after = ranking(row, *previous);
      if (before != after) out.crossovers.push_back({i, before, after});
    }
    previous = &row;
  }
  return out;
}

}  // namespace hiercoop

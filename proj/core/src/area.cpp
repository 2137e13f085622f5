#include "hiercoop/area.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace hiercoop {

const char* to_string(Regime regime) noexcept {
  return regime == Regime::Dense ? "dense" : "sparse";
}

RegimeReport classify(const NetworkConfig& cfg) {
  validate(cfg);
  const double power_need = std::pow(cfg.area, cfg.alpha / 2.0);
  const double budget = cfg.c0 * static_cast<double>(cfg.n);

  RegimeReport report;
  report.threshold = budget - power_need;
  // Compare in log space with a tolerance that tracks the rounding of
  // A = (c0 n)^{2/alpha}, whose error grows with ln(c0 n).
  const double log_budget = std::log(budget);
  const double log_need = cfg.alpha / 2.0 * std::log(cfg.area);
  const double tolerance = 16.0 * DBL_EPSILON * (1.0 + std::abs(log_budget));
  if (power_need <= budget || log_need <= log_budget + tolerance) {
    report.regime = Regime::Dense;
    report.factor = 1.0;
  } else {
    report.regime = Regime::Sparse;
    report.factor = budget / power_need;
  }
  return report;
}

ThroughputReport throughput_with_area(const NetworkConfig& cfg, const SchemeParams& params) {
  const RegimeReport regime = classify(cfg);
  ThroughputReport report = optimal_modified(cfg.n, params);
  report.area_factor = regime.factor;
  report.value *= regime.factor;
  if (report.integer_value) *report.integer_value *= regime.factor;
  return report;
}

double area_from_exponent(std::int64_t n, double nu) {
  if (n < 4) throw DomainError("n >= 4 required");
  return std::pow(static_cast<double>(n), nu);
}

std::vector<TradeoffRow> c0_tradeoff(const NetworkConfig& cfg,
                                     const std::vector<C0Candidate>& candidates) {
  if (candidates.empty()) throw DomainError("at least one c0 candidate required");

  std::vector<TradeoffRow> rows;
  rows.reserve(candidates.size());
  for (const C0Candidate& candidate : candidates) {
    TradeoffRow row{candidate, std::nullopt, std::nullopt, {}};
    try {
      NetworkConfig local = cfg;
      local.c0 = candidate.c0;
      const SchemeParams params = derive(candidate.rate, candidate.quantized_rate);
      row.regime = classify(local);
      row.report = throughput_with_area(local, params);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  std::stable_sort(rows.begin(), rows.end(), [](const TradeoffRow& a, const TradeoffRow& b) {
    if (a.report && b.report) return a.report->value > b.report->value;
    return a.report.has_value() && !b.report.has_value();
  });
  return rows;
}

}  // namespace hiercoop

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiercoop/params.hpp"
#include "hiercoop/throughput.hpp"

namespace hiercoop {

enum class Regime { Dense, Sparse };

const char* to_string(Regime regime) noexcept;

/// Dense networks (A^{alpha/2} <= c0 n) keep the operating SINR at all
/// times; sparse ones concentrate power into a c0 n / A^{alpha/2} fraction
/// of the time.
struct RegimeReport {
  Regime regime = Regime::Dense;
  double factor = 1.0;     // min{1, c0 n / A^{alpha/2}}
  double threshold = 0.0;  // c0 n - A^{alpha/2}; negative when sparse
};

// The boundary A^{alpha/2} == c0 n is Dense. Values within rounding error
// of the boundary count as on it, so A = (c0 n)^{2/alpha} computed in
// floating point still classifies as Dense.
RegimeReport classify(const NetworkConfig& cfg);

// factor * optimal_modified(n); the integer-h value, when present, is scaled too.
ThroughputReport throughput_with_area(const NetworkConfig& cfg, const SchemeParams& params);

// A = n^nu: nu = 0 is the fixed-area convention, nu = 1 fixed density.
double area_from_exponent(std::int64_t n, double nu);

/// One operating point of the c0 tradeoff: a SINR threshold together with
/// the rates it supports.
struct C0Candidate {
  double c0 = 1.0;
  double rate = 1.0;
  double quantized_rate = 1.0;
};

struct TradeoffRow {
  C0Candidate candidate;
  std::optional<RegimeReport> regime;
  std::optional<ThroughputReport> report;
  std::string error;  // non-empty when this candidate could not be evaluated
};

// Evaluates every candidate on `cfg` (its c0 replaced by the candidate's)
// and sorts by throughput, best first; failed candidates sort last in input
// order. Throws DomainError when `candidates` is empty.
std::vector<TradeoffRow> c0_tradeoff(const NetworkConfig& cfg,
                                     const std::vector<C0Candidate>& candidates);

}  // namespace hiercoop

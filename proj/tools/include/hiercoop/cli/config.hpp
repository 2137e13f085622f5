#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hiercoop/area.hpp"
#include "hiercoop/params.hpp"

namespace hiercoop::cli {

// Bad or missing input; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Jsonl };

// n_min:n_max:points:log|lin
struct GridSpec {
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  int points = 0;
  bool log_spacing = true;
};

GridSpec parse_grid(const std::string& text);

// Grid points rounded to integers; duplicates from rounding are dropped so
// the result is strictly increasing.
std::vector<std::int64_t> expand_grid(const GridSpec& grid);

// Illustrative rates used when neither flag nor file sets R and Q. They are
// not derived from any channel model.
inline constexpr double kDefaultRate = 1.0;
inline constexpr double kDefaultQuantizedRate = 1.0;

struct RunConfig {
  double rate = kDefaultRate;
  double quantized_rate = kDefaultQuantizedRate;
  NetworkConfig network{0, 1.0, 2.0, 1.0};
  bool has_n = false;
  std::optional<GridSpec> grid;
  std::optional<double> c_mh;
  double log_base = 10.0;
  std::optional<double> nu;
  int h_max = 0;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 1;
  std::vector<C0Candidate> candidates;
  double c_fault = 1.0;  // verify fault-injection hook; 1 means untouched
};

// Flag or config-file key -> raw text. Keys use the flag spelling without
// the leading dashes, e.g. "rate-r".
using RawSettings = std::map<std::string, std::string>;

// Reads an INI file. Recognised sections and keys:
//   [scheme]   rate-r, rate-q
//   [network]  n, area, alpha, c0
//   [sweep]    grid, format
//   [options]  c-mh, log-base, nu, h-max, seed
//   [tradeoff] candidates   (whitespace/comma separated c0:R:Q triples)
// Unknown sections or keys raise ConfigError.
RawSettings load_config_file(const std::string& path);

// Merges flags over file values over defaults and parses every field.
RunConfig resolve(const RawSettings& flags, const RawSettings& file);

C0Candidate parse_candidate(const std::string& text);

}  // namespace hiercoop::cli

#include "hiercoop/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace hiercoop::cli {
namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"scheme", {"rate-r", "rate-q"}},
      {"network", {"n", "area", "alpha", "c0"}},
      {"sweep", {"grid", "format"}},
      {"options", {"c-mh", "log-base", "nu", "h-max", "seed"}},
      {"tradeoff", {"candidates"}},
  };
  return keys;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError(key + ": expected a finite number (got '" + raw + "')");
  }
  return value;
}

template <typename Int>
Int parse_integer(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  Int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(key + ": expected an integer (got '" + raw + "')");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split(trim(text), ':');
  if (parts.size() != 4) {
    throw ConfigError("grid: expected n_min:n_max:points:log|lin (got '" + text + "')");
  }
  GridSpec grid;
  grid.n_min = parse_integer<std::int64_t>("grid n_min", parts[0]);
  grid.n_max = parse_integer<std::int64_t>("grid n_max", parts[1]);
  grid.points = parse_integer<int>("grid points", parts[2]);
  const std::string spacing = trim(parts[3]);
  if (spacing == "log") {
    grid.log_spacing = true;
  } else if (spacing == "lin") {
    grid.log_spacing = false;
  } else {
    throw ConfigError("grid: spacing must be log or lin (got '" + spacing + "')");
  }
  if (grid.n_min < 4) throw ConfigError("grid: n_min >= 4 required");
  if (grid.n_max < grid.n_min) throw ConfigError("grid: n_max >= n_min required");
  if (grid.points < 1) throw ConfigError("grid: points >= 1 required");
  if (grid.points > 1 && grid.n_max == grid.n_min) {
    throw ConfigError("grid: n_max > n_min required for more than one point");
  }
  return grid;
}

std::vector<std::int64_t> expand_grid(const GridSpec& grid) {
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(grid.points));
  const double lo = static_cast<double>(grid.n_min);
  const double hi = static_cast<double>(grid.n_max);
  for (int i = 0; i < grid.points; ++i) {
    std::int64_t n = grid.n_min;
    if (i == grid.points - 1) {
      n = grid.n_max;
    } else if (i > 0) {
      const double t = static_cast<double>(i) / (grid.points - 1);
      const double x = grid.log_spacing ? std::exp2(std::log2(lo) + t * (std::log2(hi) - std::log2(lo)))
                                        : lo + t * (hi - lo);
      n = static_cast<std::int64_t>(std::llround(x));
    }
    if (values.empty() || n > values.back()) values.push_back(n);
  }
  return values;
}

C0Candidate parse_candidate(const std::string& text) {
  const std::vector<std::string> parts = split(trim(text), ':');
  if (parts.size() != 3) throw ConfigError("candidate: expected c0:R:Q (got '" + text + "')");
  return {parse_real("candidate c0", parts[0]), parse_real("candidate R", parts[1]),
          parse_real("candidate Q", parts[2])};
}

RawSettings load_config_file(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config: " + std::string(e.what()));
  }

  RawSettings settings;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("config: key '" + section + "' outside a section");
    }
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) {
      throw ConfigError("config: unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!known->second.count(key)) {
        throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
      }
      settings[key] = value.data();
    }
  }
  return settings;
}

RunConfig resolve(const RawSettings& flags, const RawSettings& file) {
  auto lookup = [&](const std::string& key) -> const std::string* {
    if (auto it = flags.find(key); it != flags.end()) return &it->second;
    if (auto it = file.find(key); it != file.end()) return &it->second;
    return nullptr;
  };

  RunConfig cfg;
  if (const auto* v = lookup("rate-r")) cfg.rate = parse_real("rate-r", *v);
  if (const auto* v = lookup("rate-q")) cfg.quantized_rate = parse_real("rate-q", *v);
  if (const auto* v = lookup("n")) {
    cfg.network.n = parse_integer<std::int64_t>("n", *v);
    cfg.has_n = true;
  }
  if (const auto* v = lookup("area")) cfg.network.area = parse_real("area", *v);
  if (const auto* v = lookup("alpha")) cfg.network.alpha = parse_real("alpha", *v);
  if (const auto* v = lookup("c0")) cfg.network.c0 = parse_real("c0", *v);
  if (const auto* v = lookup("grid")) cfg.grid = parse_grid(*v);
  if (const auto* v = lookup("format")) {
    const std::string format = trim(*v);
    if (format == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (format == "jsonl") {
      cfg.format = OutputFormat::Jsonl;
    } else {
      throw ConfigError("format: expected csv or jsonl (got '" + format + "')");
    }
  }
  if (const auto* v = lookup("c-mh")) cfg.c_mh = parse_real("c-mh", *v);
  if (const auto* v = lookup("log-base")) cfg.log_base = parse_real("log-base", *v);
  if (const auto* v = lookup("nu")) cfg.nu = parse_real("nu", *v);
  if (const auto* v = lookup("h-max")) cfg.h_max = parse_integer<int>("h-max", *v);
  if (const auto* v = lookup("seed")) cfg.seed = parse_integer<std::uint64_t>("seed", *v);
  if (const auto* v = lookup("candidates")) {
    std::string list = *v;
    for (char& ch : list) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(list);
    for (std::string token; in >> token;) cfg.candidates.push_back(parse_candidate(token));
  }
  if (const auto* v = lookup("inject-c-fault")) cfg.c_fault = parse_real("inject-c-fault", *v);

  if (cfg.c_mh && *cfg.c_mh <= 0.0) throw ConfigError("c-mh > 0 required");
  if (cfg.log_base <= 1.0) throw ConfigError("log-base > 1 required");
  if (cfg.h_max < 0 || cfg.h_max > kMaxLayers) {
    throw ConfigError("h-max must lie in [0, " + std::to_string(kMaxLayers) + "]");
  }
  if (cfg.h_max == 1) throw ConfigError("h-max >= 2 required (0 selects the default)");
  if (cfg.c_fault <= 0.0) throw ConfigError("inject-c-fault > 0 required");
  return cfg;
}

}  // namespace hiercoop::cli

#include "hiercoop/cli/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <variant>

#include "hiercoop/area.hpp"
#include "hiercoop/explorer.hpp"
#include "hiercoop/optimizer.hpp"
#include "hiercoop/throughput.hpp"

namespace hiercoop::cli {
namespace {

using Value = std::variant<std::int64_t, double, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;
using Json = nlohmann::ordered_json;

constexpr const char* kNoIntegerLayers = "T1_int: no feasible integer layer count";

// Rounds through the 12-digit text form so JSON carries the same digits as CSV.
double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string csv_field(const Value& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&value)) return format_number(*d);
  const std::string& s = std::get<std::string>(value);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

Json json_value(const Value& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return *i;
  if (const auto* d = std::get_if<double>(&value)) return rounded(*d);
  return std::get<std::string>(value);
}

Json to_json(const Record& record) {
  Json object = Json::object();
  for (const auto& [key, value] : record) object[key] = json_value(value);
  return object;
}

SchemeParams checked_params(double rate, double quantized_rate) {
  try {
    return derive(rate, quantized_rate);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

void checked_network(const NetworkConfig& network) {
  try {
    validate(network);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

NetworkConfig analysis_network(const RunConfig& cfg) {
  if (!cfg.has_n) throw ConfigError("n is required (--n or [network] n)");
  NetworkConfig network = cfg.network;
  checked_network(network);
  if (cfg.nu) network.area = area_from_exponent(network.n, *cfg.nu);
  checked_network(network);
  return network;
}

void write_record(const Record& record, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Jsonl) {
    out << to_json(record).dump() << '\n';
    return;
  }
  out << "field,value\n";
  for (const auto& [key, value] : record) out << key << ',' << csv_field(value) << '\n';
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const SchemeParams params = checked_params(cfg.rate, cfg.quantized_rate);
  const NetworkConfig network = analysis_network(cfg);

  const RegimeReport regime = classify(network);
  const LayerChoice choice = layer_choice(network.n, params, cfg.h_max);
  const ThroughputReport smooth = throughput_with_area(network, params);
  const ThroughputReport best = layer_throughput(choice.h_int, network.n, params);

  Record record{
      {"n", network.n},
      {"rate_r", params.rate()},
      {"rate_q", params.quantized_rate()},
      {"beta1", params.beta1()},
      {"beta", params.beta()},
      {"c", params.c()},
      {"area", network.area},
      {"alpha", network.alpha},
      {"c0", network.c0},
      {"regime", std::string(to_string(regime.regime))},
      {"area_factor", regime.factor},
      {"regime_threshold", regime.threshold},
      {"h_exact", choice.h_exact},
      {"h_approx", choice.h_approx},
      {"h_int", std::int64_t{choice.h_int}},
      {"T1_smooth", smooth.value},
      {"T1_int", best.value * regime.factor},
      {"c_n", smooth.c_n},
      {"pre_constant", smooth.pre_constant},
      {"exponent", smooth.exponent},
      {"top_cluster", best.top_cluster},
  };
  if (best.phase_slots) {
    record.emplace_back("phase1", best.phase_slots->phase1);
    record.emplace_back("phase2", best.phase_slots->phase2);
    record.emplace_back("phase3", best.phase_slots->phase3);
  }
  for (const auto& [h, value] : choice.evaluated) {
    record.emplace_back("T_h" + std::to_string(h), value * regime.factor);
  }
  record.emplace_back("upper_bound", upper_bound(network.n, params));
  record.emplace_back("h_orig", original_optimal_layers(network.n, params.beta()));
  record.emplace_back("T_orig", original_throughput(network.n, params));
  record.emplace_back("ratio", ratio_original(network.n, params));
  record.emplace_back("per_pair", per_pair_rate(network.n, params));
  if (cfg.c_mh) record.emplace_back("multihop", multihop_baseline(network.n, *cfg.c_mh));

  write_record(record, cfg.format, out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.grid) throw ConfigError("grid is required (--grid or [sweep] grid)");
  const SchemeParams params = checked_params(cfg.rate, cfg.quantized_rate);
  NetworkConfig network = cfg.network;
  network.n = 4;
  checked_network(network);

  CompareOptions options;
  options.log_base = cfg.log_base;
  options.nu = cfg.nu;
  options.h_max = cfg.h_max;
  const Comparison comparison =
      compare_schemes(expand_grid(*cfg.grid), network, params, cfg.c_mh.value_or(1.0), options);

  static const char* const columns[] = {metric::kT1Smooth, metric::kT1Int,       metric::kTOrig,
                                        metric::kMultihop, metric::kRatio,       metric::kRatioLogAdj,
                                        metric::kPerPair,  metric::kAreaFactor};
  if (cfg.format == OutputFormat::Csv) out << kSweepHeader << '\n';
  bool any_ok = false;
  for (const SweepRow& row : comparison.rows) {
    any_ok = any_ok || row.error.empty();
    if (cfg.format == OutputFormat::Csv) {
      out << row.n;
      for (const char* column : columns) {
        out << ',';
        if (auto it = row.metrics.find(column); it != row.metrics.end()) {
          out << format_number(it->second);
        }
      }
      if (!row.error.empty()) {
        out << ',' << csv_field("error: " + row.error);
      } else if (!row.metrics.count(metric::kT1Int)) {
        out << ',' << csv_field(std::string("error: ") + kNoIntegerLayers);
      }
      out << '\n';
    } else {
      Json object = Json::object();
      object["n"] = row.n;
      for (const char* column : columns) {
        if (auto it = row.metrics.find(column); it != row.metrics.end()) {
          object[column] = rounded(it->second);
        } else {
          object[column] = nullptr;
        }
      }
      if (!row.error.empty()) {
        object["error"] = row.error;
      } else if (!row.metrics.count(metric::kT1Int)) {
        object["error"] = kNoIntegerLayers;
      }
      out << object.dump() << '\n';
    }
  }
  for (const Crossover& x : comparison.crossovers) {
    err << "crossover at n=" << comparison.rows[x.index].n << ": " << x.before << " -> " << x.after
        << '\n';
  }
  if (!any_ok) throw DomainError("no grid point could be evaluated");
  return kExitOk;
}

int cmd_tradeoff(const RunConfig& cfg, std::ostream& out) {
  if (cfg.candidates.empty()) {
    throw ConfigError("at least one candidate is required (--candidate c0:R:Q or [tradeoff] candidates)");
  }
  const NetworkConfig network = analysis_network(cfg);
  const std::vector<TradeoffRow> rows = c0_tradeoff(network, cfg.candidates);

  static const char* const header = "rank,c0,rate_r,rate_q,regime,area_factor,T1_smooth,T1_int,error";
  if (cfg.format == OutputFormat::Csv) out << header << '\n';
  bool any_ok = false;
  std::int64_t rank = 0;
  for (const TradeoffRow& row : rows) {
    Record record{{"rank", ++rank},
                  {"c0", row.candidate.c0},
                  {"rate_r", row.candidate.rate},
                  {"rate_q", row.candidate.quantized_rate}};
    if (row.report && row.regime) {
      any_ok = true;
      record.emplace_back("regime", std::string(to_string(row.regime->regime)));
      record.emplace_back("area_factor", row.regime->factor);
      record.emplace_back("T1_smooth", row.report->value);
      if (row.report->integer_value) record.emplace_back("T1_int", *row.report->integer_value);
    }
    if (!row.error.empty()) record.emplace_back("error", row.error);

    if (cfg.format == OutputFormat::Jsonl) {
      out << to_json(record).dump() << '\n';
      continue;
    }
    auto field = [&](const char* key) -> std::string {
      for (const auto& [k, v] : record) {
        if (k == key) return csv_field(v);
      }
      return {};
    };
    out << field("rank") << ',' << field("c0") << ',' << field("rate_r") << ',' << field("rate_q")
        << ',' << field("regime") << ',' << field("area_factor") << ',' << field("T1_smooth") << ','
        << field("T1_int") << ',' << field("error") << '\n';
  }
  if (!any_ok) throw DomainError("no candidate could be evaluated");
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Throughput analysis for hierarchical cooperation in wireless networks"};
  app.name("hiercoop");
  app.require_subcommand(1);
  app.fallthrough();

  RawSettings flags;
  std::string config_path;
  std::vector<std::string> candidates;
  auto flag = [&](const std::string& name, const std::string& help) {
    return app.add_option_function<std::string>(
        "--" + name, [&flags, name](const std::string& value) { flags[name] = value; }, help);
  };
  flag("n", "number of nodes (>= 4)");
  flag("area", "network area A (default 1)");
  flag("alpha", "path-loss exponent (>= 2, default 2)");
  flag("c0", "SINR threshold constant (default 1)");
  flag("rate-r", "basic rate R; default 1 is illustrative");
  flag("rate-q", "quantized-observation rate Q; default 1 is illustrative");
  flag("c-mh", "multi-hop pre-constant (default 1)");
  flag("log-base", "log base a of the log-adjusted ratio (default 10)");
  flag("nu", "area exponent: A = n^nu per grid point");
  flag("h-max", "largest layer count searched (0 = automatic)");
  flag("grid", "n_min:n_max:points:log|lin");
  flag("format", "csv|jsonl (default csv)");
  flag("seed", "seed for verify (default 1)");
  app.add_option("--config", config_path, "INI config file; flags take precedence");
  app.add_option("--candidate", candidates, "tradeoff candidate c0:R:Q (repeatable)");
  flag("inject-c-fault", "scale c in verify")->group("");

  CLI::App* analyze = app.add_subcommand("analyze", "throughput report for one network");
  CLI::App* sweep = app.add_subcommand("sweep", "scheme comparison over an n grid");
  CLI::App* verify = app.add_subcommand("verify", "run the internal consistency suites");
  CLI::App* tradeoff = app.add_subcommand("tradeoff", "rank (c0, R, Q) operating points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!candidates.empty()) {
      std::string joined;
      for (const std::string& c : candidates) joined += c + ' ';
      flags["candidates"] = joined;
    }
    const RawSettings file = config_path.empty() ? RawSettings{} : load_config_file(config_path);
    const RunConfig cfg = resolve(flags, file);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (tradeoff->parsed()) return cmd_tradeoff(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitConfig;
}

}  // namespace hiercoop::cli

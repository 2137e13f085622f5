#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hiercoop/cli/config.hpp"

namespace hiercoop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;

// The fixed sweep CSV header.
inline constexpr const char* kSweepHeader =
    "n,T1_smooth,T1_int,T_orig,multihop,ratio,ratio_log_adj,per_pair,area_factor";

// 12 significant digits, printf %g style.
std::string format_number(double value);

// Each command validates its inputs (ConfigError), writes its report to
// `out` and returns the exit code. Domain errors propagate as
// hiercoop::Error.
int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_tradeoff(const RunConfig& cfg, std::ostream& out);

// Full command line (without the program name) to exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hiercoop::cli

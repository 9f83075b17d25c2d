#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spikecount::cli {

// Exit codes: 0 success, 1 a verification check failed, 2 bad arguments or input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct BuildOptions {
  std::string kind; // mod2 | mod4 | fcsc-counter | fcsc | tsc | unary-fixture
  std::optional<std::uint64_t> T;
  std::optional<std::uint32_t> n;
  std::string out = "-";
};

struct RunOptions {
  std::string net_path;
  std::optional<std::string> input;
  std::optional<std::string> input_file;
  std::optional<std::size_t> horizon; // defaults to |input| + 2
  std::string trace_out = "-";
};

struct VerifyOptions {
  std::string suite; // fcsc | tsc | firing-rules | clean-state | time0
  std::optional<std::uint64_t> T;
  std::uint32_t n = 4;
  std::size_t settle = 2;
  std::uint64_t bound = 12;
  bool json = false;
};

struct ExportDotOptions {
  std::string net_path;
  std::string out = "-";
};

// "-" as a path means standard output.
int cmd_build(const BuildOptions &options, std::ostream &out, std::ostream &err);
int cmd_run(const RunOptions &options, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);
int cmd_export_dot(const ExportDotOptions &options, std::ostream &out, std::ostream &err);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace spikecount::cli

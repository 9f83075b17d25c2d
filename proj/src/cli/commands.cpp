#include "spikecount/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spikecount/cli/dot_export.hpp"
#include "spikecount/constructions.hpp"
#include "spikecount/document.hpp"
#include "spikecount/errors.hpp"
#include "spikecount/verification/clean_state.hpp"
#include "spikecount/verification/exhaustive.hpp"
#include "spikecount/verification/firing_rules.hpp"
#include "spikecount/verification/lemmas.hpp"
#include "spikecount/verification/time0.hpp"

namespace spikecount::cli {
namespace {

using namespace constructions;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
}

std::string read_text(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

NetworkDocument load_network(const std::string &path) {
  NetworkDocument doc = deserialize(read_text(path));
  ValidationReport report = validate_network(doc.network);
  if (!report.valid()) throw UsageError("invalid network: " + report.issues.front().message);
  return doc;
}

std::uint64_t require_T(const std::optional<std::uint64_t> &T, std::string_view what) {
  if (!T) throw UsageError(std::string(what) + " requires --T");
  if (*T < 1) throw UsageError(std::string(what) + " requires T >= 1");
  return *T;
}

struct Built {
  Network network;
  std::optional<LayoutInfo> layout;
};

Built build_kind(const BuildOptions &options) {
  const std::string &kind = options.kind;
  if (kind == "mod2") return {build_mod2_base(), std::nullopt};
  if (kind == "mod4") return {build_mod4(), std::nullopt};
  if (kind == "fcsc-counter") {
    if (!options.n || *options.n < 1) throw UsageError("fcsc-counter requires --n >= 1");
    return {build_fcsc_counter(*options.n), std::nullopt};
  }
  if (kind == "fcsc") {
    const std::uint64_t T = require_T(options.T, kind);
    FcscNetwork fcsc = build_fcsc(T);
    LayoutInfo info = layout_info(fcsc, T);
    return {std::move(fcsc.network), std::move(info)};
  }
  if (kind == "tsc") {
    const std::uint64_t T = require_T(options.T, kind);
    TscNetwork tsc = build_tsc(T);
    LayoutInfo info = layout_info(tsc, T);
    return {std::move(tsc.network), std::move(info)};
  }
  if (kind == "unary-fixture") {
    const std::uint64_t T = require_T(options.T, kind);
    UnaryNetwork unary = build_unary_time0_counter(T);
    LayoutInfo info = layout_info(unary, T);
    return {std::move(unary.network), std::move(info)};
  }
  throw UsageError("unknown network kind '" + kind + "'");
}

InputSequence read_input(const RunOptions &options) {
  std::string text;
  if (options.input && options.input_file) throw UsageError("give either --input or --input-file, not both");
  if (options.input) {
    text = *options.input;
  } else if (options.input_file) {
    text = read_text(*options.input_file);
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
  }
  return InputSequence::parse(text);
}

std::string decoded_line(const NetworkDocument &doc, const FiringState &state) {
  const LayoutInfo &layout = *doc.layout;
  if (layout.kind == "fcsc") {
    return "L=" + std::to_string(decode_fcsc(state, FcscLayout::from_network(doc.network, layout.n)));
  }
  if (layout.kind == "tsc") {
    try {
      return "count=" + std::to_string(decode_tsc(state, TscLayout::from_network(doc.network, layout.n)));
    } catch (const NotCleanStateError &) {
      return "count=unclean";
    }
  }
  if (layout.kind == "unary") {
    std::vector<NeuronId> chain;
    for (const auto &label : layout.output_labels) chain.push_back(doc.network.id_of(label));
    return "count=" + std::to_string(decode_unary(state, chain));
  }
  throw UsageError("unknown layout kind '" + layout.kind + "'");
}

template <typename Fn> int guarded(std::ostream &err, Fn &&fn) {
  try {
    return fn();
  } catch (const verification::BoundExceeded &e) {
    err << "refused: " << e.what() << "\n";
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const StructuralError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

} // namespace

int cmd_build(const BuildOptions &options, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    Built built = build_kind(options);
    write_text(options.out, serialize(built.network, built.layout), out);
    std::ostream &summary = options.out == "-" ? err : out;
    summary << "neurons: " << computing_neuron_count(built.network) << " (plus input x)\n";
    summary << "outputs:";
    for (NeuronId id : built.network.outputs()) summary << " " << built.network.neuron(id).label;
    summary << "\n";
    return kExitOk;
  });
}

int cmd_run(const RunOptions &options, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    NetworkDocument doc = load_network(options.net_path);
    InputSequence input = read_input(options);
    const std::size_t horizon = options.horizon.value_or(input.size() + 2);
    if (horizon < input.size()) {
      throw UsageError("horizon " + std::to_string(horizon) + " is shorter than the input (" +
                       std::to_string(input.size()) + ")");
    }
    Trace trace = run(doc.network, input, horizon);

    std::ostringstream lines;
    write_trace(lines, doc.network, trace);
    write_text(options.trace_out, lines.str(), out);
    if (doc.layout) out << decoded_line(doc, trace.back()) << "\n";
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    using namespace verification;
    VerificationReport report;
    if (auto kind = parse_problem(options.suite)) {
      report = exhaustive_verify(*kind, require_T(options.T, options.suite), options.settle, options.bound);
    } else if (options.suite == "firing-rules") {
      report = verify_firing_rules(options.n);
    } else if (options.suite == "clean-state") {
      report.add(check_mod4_lemma(8));
      report.add(check_tsc_lemma(options.n, 12, 8));
      report.add(check_clean_state_stability(options.n, 4));
    } else if (options.suite == "time0") {
      if (options.T) {
        report = verify_time0(require_T(options.T, options.suite));
      } else {
        for (std::uint64_t T = 2; T <= 8; ++T) report.append(verify_time0(T));
      }
    } else {
      throw UsageError("unknown suite '" + options.suite + "'");
    }
    out << (options.json ? report_json(report) : format_report(report));
    return report.passed() ? kExitOk : kExitCheckFailed;
  });
}

int cmd_export_dot(const ExportDotOptions &options, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    NetworkDocument doc = load_network(options.net_path);
    write_text(options.out, to_dot(doc.network), out);
    return kExitOk;
  });
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Build, simulate and verify spike-counting networks"};
  app.require_subcommand(1);

  BuildOptions build;
  auto *build_cmd = app.add_subcommand("build", "Construct a network and write its document");
  build_cmd->add_option("kind", build.kind, "mod2 | mod4 | fcsc-counter | fcsc | tsc | unary-fixture")->required();
  build_cmd->add_option("--T", build.T, "Maximum input length");
  build_cmd->add_option("--n", build.n, "Number of higher counter digits (fcsc-counter)");
  build_cmd->add_option("--out", build.out, "Output path, - for stdout");

  RunOptions run_opts;
  auto *run_cmd = app.add_subcommand("run", "Simulate a network document on an input spike train");
  run_cmd->add_option("--net", run_opts.net_path, "Network document")->required();
  run_cmd->add_option("--input", run_opts.input, "Spike train as a 0/1 string, index 0 first");
  run_cmd->add_option("--input-file", run_opts.input_file, "File holding the 0/1 spike train");
  run_cmd->add_option("--horizon", run_opts.horizon, "Last simulated time step (default |input|+2)");
  run_cmd->add_option("--trace-out", run_opts.trace_out, "Trace path, - for stdout");

  VerifyOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify.suite, "fcsc | tsc | firing-rules | clean-state | time0")->required();
  verify_cmd->add_option("--T", verify.T, "Maximum input length");
  verify_cmd->add_option("--n", verify.n, "Largest digit index for rule and clean-state suites");
  verify_cmd->add_option("--settle", verify.settle, "Extra steps checked after T+1");
  verify_cmd->add_option("--bound", verify.bound, "Largest T accepted by exhaustive suites");
  verify_cmd->add_flag("--json", verify.json, "Emit the report as JSON");

  ExportDotOptions dot;
  auto *dot_cmd = app.add_subcommand("export-dot", "Render a network document as a Graphviz digraph");
  dot_cmd->add_option("--net", dot.net_path, "Network document")->required();
  dot_cmd->add_option("--out", dot.out, "Output path, - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (build_cmd->parsed()) return cmd_build(build, out, err);
  if (run_cmd->parsed()) return cmd_run(run_opts, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
  return cmd_export_dot(dot, out, err);
}

} // namespace spikecount::cli

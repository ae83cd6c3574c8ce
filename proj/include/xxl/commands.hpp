#pragma once

#include "xxl/linkcheck.hpp"
#include "xxl/report.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace xxl {

enum ExitCode : int { exit_certified = 0, exit_refuted = 1, exit_not_applicable = 2, exit_input_error = 3 };

struct RunConfig {
  std::string alpha = "1/10";
  long precision = default_precision;
  WeightMode mode = WeightMode::paper;
  int radius = 2;
};

struct WitnessOverride {
  std::string a;
  std::string b;
  std::string c;
};

struct CommandResult {
  Json report;
  int exit_code = exit_certified;
};

/// Link condition for the glued complex of a graph.
CommandResult cmd_check(std::string_view graph_text, const RunConfig& config);
/// Rank-one loop and its separator sums.
CommandResult cmd_rank1(std::string_view graph_text, const RunConfig& config,
                        const std::optional<WitnessOverride>& witness = std::nullopt);
/// Presentations, orbit counts, axes and the angle table of I2(m).
CommandResult cmd_dihedral(int m, const RunConfig& config);
/// Word problem in I2(m): exit 0 when the word is trivial, 1 otherwise.
CommandResult cmd_word(int m, std::string_view word, const RunConfig& config);

struct ExportResult {
  std::string text;
  int exit_code = exit_certified;
  std::string error;
};

/// what ∈ {tree-ball, piece-graph, link}; format ∈ {dot, svg}. piece-graph
/// reads `graph_text`, the others use m and config.radius.
ExportResult cmd_export(std::string_view what, std::string_view format, std::string_view graph_text, int m,
                        const RunConfig& config);

/// Serialised report: two-space indented JSON or the human rendering.
std::string format_report(const Json& report, std::string_view format);

}  // namespace xxl

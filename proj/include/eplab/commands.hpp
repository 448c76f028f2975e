#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eplab/fuzz.hpp"
#include "eplab/generators.hpp"
#include "eplab/report.hpp"

namespace eplab {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitViolations = 1, kExitUsage = 2 };

struct CommandResult {
  ReportEnvelope envelope;
  int exit_code = kExitOk;
};

CommandResult cmd_classify(const std::filesystem::path& path, const ToleranceConfig& cfg);
CommandResult cmd_product(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                          const ToleranceConfig& cfg);
CommandResult cmd_decompose(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                            const ToleranceConfig& cfg);
CommandResult cmd_fuzz(const FuzzConfig& cfg);
/// Writes the CSV to out_path when given.
CommandResult cmd_truncate(const std::string& family, const std::vector<Index>& sizes,
                           const std::optional<std::filesystem::path>& out_path, const ToleranceConfig& cfg);
/// Without a name, lists the catalog.  With a name and out_dir, writes
/// <out_dir>/<name>_a.cmat and <out_dir>/<name>_b.cmat.
CommandResult cmd_catalog(const std::optional<std::string>& name,
                          const std::optional<std::filesystem::path>& out_dir);

/// Envelope describing a failed invocation (exit code 2).
CommandResult error_result(const std::string& command, const std::exception& e);

/// "0-20", "2,4,8" or mixtures such as "0-3,10".
std::vector<Index> parse_index_list(const std::string& text);
/// "lo-hi" or a single dimension.
std::pair<Index, Index> parse_dim_range(const std::string& text);

}  // namespace eplab

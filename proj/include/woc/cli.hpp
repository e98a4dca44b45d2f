#pragma once

#include <optional>
#include <string>

namespace woc::cli {

/// Every machine-readable output is wrapped in a document carrying the
/// schema version, the command name, and the parameters it ran with.
inline constexpr const char* kSchemaVersion = "1.0";

struct CommandResult {
  int exit_code = 0;   // 0 pass, 1 failed check, 2 usage
  std::string output;  // complete stdout payload
};

CommandResult cmd_enumerate(int n, std::optional<int> k, const std::string& format, int cap);
CommandResult cmd_hasse(int n, const std::string& format, int cap);
CommandResult cmd_check(const std::string& target, std::optional<int> n, bool slow, int cap);
CommandResult cmd_classify(const std::string& scores_csv, std::optional<int> round_decimals,
                           const std::string& format, int cap);
CommandResult cmd_geometry(int n, const std::string& format, int cap);
CommandResult cmd_medium_walk(int n, const std::string& start_text,
                              const std::string& tokens_csv, int cap);

}  // namespace woc::cli

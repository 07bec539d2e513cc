#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "zgcu/catalog.hpp"
#include "zgcu/error.hpp"
#include "zgcu/report.hpp"

namespace zgcu::cli {

enum class Command { GroupInfo, Classes, SsPairs, Bass, Centralize, Basis, VerifyAll };
enum class Format { Json, Text };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

struct RunConfig {
  Command command = Command::GroupInfo;
  std::string group;
  /// Element for bass and centralize, in any form parse_element accepts.
  std::optional<std::string> g;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> m;
  /// Generators of the normal subgroup M, separated by ';'.
  std::optional<std::string> M;
  std::optional<std::filesystem::path> output;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  Bounds bounds;
};

struct RunResult {
  int exit_code = 0;
  /// The report on success, or {"error": {...}} on failure.
  json report;
};

/// 0 success, 1 verification failure, 2 NotEligible/NotSubnormal, 3 input, I/O and bound errors.
int exit_code_for(ErrorKind kind);

json error_json(ErrorKind kind, std::string_view message);

/// Runs one command without touching stdout, stderr or files.
RunResult run(const RunConfig& config);

std::string render_text(Command c, const json& report);

/// run() followed by writing the report to config.output or `out`, and any error to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zgcu::cli

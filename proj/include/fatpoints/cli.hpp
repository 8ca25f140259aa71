#pragma once

// The command driver behind the fatpoints tool. Every command produces one
// report, rendered as text or as a single JSON document.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fatpoints/biring.hpp"
#include "fatpoints/separator.hpp"

namespace fatpoints {

enum class Command { Ideal, Degree, Hilbert, Separators, GoodCheck, Acm, Resolution, Verify };
enum class OutputFormat { Text, Json };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::Verify;
  std::string scheme_file;
  /// 1-based, as typed on the command line.
  std::optional<std::size_t> point;
  std::optional<Bidegree> rect;
  /// "rational" or "prime:p".
  std::optional<std::string> field;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHypothesis = 3;

struct RunResult {
  int exit_code = kExitOk;
  /// The report; empty on usage errors.
  std::string output;
  std::string error;
};

/// Componentwise max separator degree plus (2,2), enlarged to reach past the
/// stabilization corner of H_Z.
Bidegree default_rectangle(const FatPointAnalysis& z);

RunResult run(const RunConfig& config);

}  // namespace fatpoints

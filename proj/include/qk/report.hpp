#pragma once

// Command runner behind the qk executable. Every command produces a Report
// (a JSON document plus an optional flat table) which is rendered as JSON or
// CSV. Rendering depends only on the configuration and the precision, never
// on the number of worker threads.

#include "qk/error.hpp"
#include "qk/numeric.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qk {

enum class Command { Dims, Spectrum, Fusion, Kp, Decay, Constants, Verify, Table };
enum class Format { Json, Csv };

Command parse_command(std::string_view name);
std::string_view command_name(Command c);
Format parse_format(std::string_view name);

struct RunConfig {
  std::string model_spec;
  Command command = Command::Kp;
  std::optional<Rational> p;
  Rational tol{1, 10000000000};
  /// Level budget; each command has its own default when unset.
  std::optional<std::int64_t> max_length;
  Format format = Format::Json;
  std::optional<std::string> output_path;
  unsigned precision_bits = kDefaultPrecisionBits;
  unsigned threads = 1;
  std::optional<Rational> r;
  /// "1,0" style weight for spectrum; "k,l" for fusion.
  std::optional<std::string> label;
};

/// Checks the invariants of a configuration and flag combinations that make
/// no sense for the chosen command.
void validate(const RunConfig& config);

/// Applies the keys of a JSON config object (same names as the long flags,
/// with '_' or '-') on top of config.
void apply_config_json(RunConfig& config, const nlohmann::json& doc);

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json doc;
  /// Flat rendering used for CSV output.
  Table table;
  int exit_code = 0;
};

inline constexpr const char* kSchema = "qk-report/v1";
inline constexpr const char* kNormalization =
    "invariant form scaled so that short roots have (alpha, alpha) = 2";

/// Runs one command. Validation problems raise qk::Error; the exit code of a
/// completed run is 0, 1 (verify failure) or 3 (inconclusive).
Report run_command(const RunConfig& config);

std::string render(const Report& report, Format format);

/// Writes the rendering to path, or to stdout when path is empty. Returns
/// the number of bytes written; raises ErrorCode::Io with the OS error.
std::size_t emit_report(const Report& report, Format format, const std::optional<std::string>& path);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view value);

/// Maps an error to the process exit code (2 for validation, 4 for I/O).
int exit_code_for(const Error& e);

}  // namespace qk

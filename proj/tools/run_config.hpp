#pragma once

#include "kingman/ewens_pitman.hpp"
#include "kingman/io.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kingman::cli {

/// Bad flags, bad parameter combinations or unreadable files; exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a run depends on. Unset optionals fall back to per-command
/// defaults inside run(); the JSON form only lists what was set.
struct RunConfig {
  std::string command;
  // Partition parameters: alpha/theta for the principal series, N/beta for
  // the degenerate one. wf reads N with eta (or beta).
  std::optional<std::string> alpha;
  std::optional<std::string> theta;
  std::optional<int> N;
  std::optional<std::string> beta;
  std::optional<std::string> eta;

  std::optional<int> n;
  std::optional<int> max_n;
  std::optional<int> m;
  std::optional<int> max_length;
  std::vector<int> n_list;
  std::optional<long> steps;
  std::optional<long> samples;
  std::optional<long> record_every;
  std::optional<double> dt;
  std::optional<double> tail;
  std::vector<std::string> lambdas;
  std::vector<std::string> checks;
  std::optional<std::string> kind;
  std::optional<std::string> start;
  std::optional<std::string> point;

  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<std::string> output;
  std::optional<std::string> format;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

using kingman::to_json;
Json to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);

inline const std::vector<std::string> kCommands{"enumerate", "measure", "chain",  "verify", "generator",
                                                "converge",  "moments", "sample", "wf"};

/// "[2,2]" or the bracket-free "2,2".
Partition parse_partition_flag(const std::string& text);

/// Partition-structure parameters named by the config. Throws ConfigError.
Params params_of(const RunConfig& c);

/// Checks required fields and ranges for the command. Throws ConfigError.
void validate(const RunConfig& c);

/// "json" or "csv" after applying the command's default.
std::string effective_format(const RunConfig& c);

/// Validates, computes and writes the artifact to the output path (joined
/// onto $KINGMAN_OUTPUT_DIR when relative) or to `out` when no path is set.
/// Returns 0 when every check passes and 1 otherwise; a failure report goes
/// to `err`. Throws ConfigError for invalid input.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

}  // namespace kingman::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace overring::cli {

enum class Command { nsg_report, nsg_overrings, nsg_sd, nsg_phi, tower_report, check_paper };

std::string to_string(Command c);
std::optional<Command> parse_command(std::string_view s);

enum class Format { text, json };

inline constexpr int kDefaultFMax = 15;
/// Upper limit for --f-max; the exhaustive corpus doubles with each step.
inline constexpr int kMaxFMax = 20;

struct RunConfig {
  Command command = Command::nsg_report;
  std::optional<std::string> gens;    // "2,5"
  std::optional<std::string> preset;  // "gs8:3"
  std::optional<std::string> file;    // descriptor JSON path
  Format format = Format::text;
  bool oracle = false;
  int f_max = kDefaultFMax;

  /// Throws std::invalid_argument: check-paper takes no input source, every
  /// other command exactly one; 3 ≤ f_max ≤ kMaxFMax.
  void validate() const;
};

/// One row of a verification battery. It passes iff expected == actual.
struct CheckResult {
  std::string check_id;
  std::string description;
  std::string expected;
  std::string actual;
  /// Where the expected value comes from: "closed-form", "oracle" or
  /// "definition".
  std::string source;
  int criterion = 0;

  bool passed() const { return expected == actual; }
};

/// The full acceptance battery, criteria 1 to 12, in a fixed order. Corpus
/// checks cover every semigroup with Frobenius number ≤ f_max.
std::vector<CheckResult> check_paper(int f_max = kDefaultFMax);

/// Oracle cross-checks for a single semigroup given by generators.
std::vector<CheckResult> oracle_checks(const std::vector<int>& generators);

/// Executes one command. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 if any check row failed, 2 on invalid input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "2,5" or "2 5" to {2, 5}. Throws std::invalid_argument.
std::vector<int> parse_generator_list(std::string_view s);

}  // namespace overring::cli

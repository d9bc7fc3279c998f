#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fobce/bce.hpp"

namespace fobce::cli {

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  /// A file for a single input, a directory for several. Standard output
  /// when unset.
  std::optional<std::filesystem::path> output;
  ModeChoice mode = ModeChoice::Auto;
  Strategy strategy = Strategy::Exact;
  bool verify = false;
  unsigned verify_depth = 1;
  std::size_t verify_cap = 20000;
  bool pure_only = false;
  bool delete_tautologies = false;
  bool stats = false;
  /// JSON when the extension is .json, line-oriented text otherwise.
  std::optional<std::filesystem::path> report;
  std::vector<std::filesystem::path> include_dirs;
  std::optional<double> time_limit;
  bool unsafe_noeq = false;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
}  // namespace exit_code

/// Processes every input in order. Reduced problems go to the configured
/// output (or `out`), diagnostics and statistics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fobce::cli

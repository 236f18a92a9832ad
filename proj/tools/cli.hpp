#pragma once

// crownlab command-line front end: decompose, orbit-scan and verify.
//
// Exit codes: 0 ok, 1 usage/config error, 2 decomposition failure,
// 3 suite failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace crownlab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDecomposition = 2, kSuiteFailure = 3 };

struct RunConfig {
  std::string command;  // decompose | orbit-scan | verify
  std::string suite;    // verify only
  std::optional<int> n;
  std::vector<double> x_entries;
  bool center = true;
  std::string group_case = "complex";
  std::optional<std::size_t> samples;
  std::optional<std::size_t> coverage_samples;
  int steps = 64;
  std::uint64_t seed = 42;
  std::optional<double> slack;
  std::optional<double> minor_tol;
  std::optional<double> coverage_threshold;
  std::string output_path;  // empty: stdout
  std::string vertices_path;
  std::string format;  // json | csv; empty picks the command default
  std::string k_file;
  bool identity_k = false;
  unsigned threads = 1;
  bool timestamp = true;
  std::string mutation = "none";
};

/// Default seed: $CROWNLAB_SEED when set and numeric, else 42.
std::uint64_t default_seed();

/// Reads a k matrix stored as n*n CSV lines "re,im" in row-major order.
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<std::pair<double, double>>> read_matrix_csv(const std::string& path);

/// Parses argv (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crownlab::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace wakimoto {

/// Command-line configuration. n, r, gamma_sq and lambda are required unless
/// grid is set, in which case the built-in grid replaces them.
struct RunConfig {
  std::optional<int> n;
  std::optional<int> r;
  std::string gamma_sq;
  std::string lambda;
  int max_mode = 2;
  int max_degree = 3;
  int num_vectors = 20;
  std::uint64_t seed = 1;
  std::string suite = "all";
  bool grid = false;
  std::string output = "json";
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitDiagnostic = 2;
inline constexpr int kExitUsage = 64;

/// Runs the selected suites, writes one report document to out and warnings
/// to err. Returns 0, 1 (authoritative failure), 2 (only lemma failures)
/// or 64 (configuration error).
int run_suite(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and calls run_suite.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wakimoto

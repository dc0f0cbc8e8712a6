#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rosenmorse::cli {

enum class Subcommand { spectrum, coeffs, sample, verify, plotdata };
enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliRequest {
  Subcommand subcommand = Subcommand::spectrum;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<int> n;
  std::optional<double> xmin;
  std::optional<double> xmax;
  std::optional<int> points;
  double tol = 1e-7;
  Format format = Format::csv;
};

// Parses, executes and writes data to `out`, diagnostics to `err`.
// `argv[0]` is the program name. Returns the process exit status.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace rosenmorse::cli

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swanson/spectral.hpp"

namespace swanson::cli {

enum class Subcommand { spectrum, numrange, pseudospectrum, compress, evolve, verify };

const char* to_string(Subcommand s) noexcept;

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,    // parse, validation or I/O error
  kExitNumerical = 2,  // convergence or positive-definiteness failure
  kExitVerifyFail = 3,
};

struct RunConfig {
  Subcommand subcommand = Subcommand::spectrum;
  double gamma = 0.0;
  int dim = 0;
  int modes = 0;
  int count = 0;
  Region region;
  int resolution = 0;
  int theta_samples = 0;
  std::vector<double> coeffs;  // empty: witness superposition
  double t_max = 0.0;
  double dt = 0.0;
  unsigned threads = 0;
  std::string out;
  std::optional<std::string> svg;
};

// Parses arguments (without the program name) into a validated RunConfig.
// Throws ContractViolation with a message naming the offending flag.
RunConfig parse_run_config(const std::vector<std::string>& args);

// Full command: parse, compute, write. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swanson::cli

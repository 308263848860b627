#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homequiv::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Process exit codes. Scripts can rely on these.
enum ExitCode : int {
  kSuccess = 0,          ///< equivalent / true / command succeeded
  kInternal = 1,         ///< library defect
  kParse = 2,            ///< malformed input text or command line
  kSemantic = 3,         ///< well-formed but unusable input
  kNegative = 4,         ///< hypothesis not met, or a false verdict
  kInvalidCertificate = 5,  ///< singular substitution matrix
};

/// Runs one command line (args excludes the program name). The report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homequiv::cli

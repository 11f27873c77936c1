#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enclave::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kViolation = 2,
  kCapExceeded = 3,
};

/// Runs one command line (without the program name). Environment variables
/// ENCLAVE_INPUT, ENCLAVE_FORMAT, ENCLAVE_KIND, ENCLAVE_STARTER, ENCLAVE_CAP_N,
/// ENCLAVE_CHECKS, ENCLAVE_OUT and ENCLAVE_SEED fill the matching flags.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace enclave::cli

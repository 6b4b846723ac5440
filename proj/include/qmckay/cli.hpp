#pragma once

#include "qmckay/grouprep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qmckay {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitBadArguments = 2,
  kExitUnsupportedGroup = 3,
  kExitConsistency = 4,
};

/// "C:k", "D:m", "T", "O", "I", or an ADE label of the binary group ("A3" is
/// Cyclic(2), "D5" is Dihedral(3), "E6".."E8").
GroupSpec parse_group(const std::string& text);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmckay

#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "nsg/error.hpp"

namespace nsg::cli {

/// Exit codes of the command-line front end.
enum Exit : int { Ok = 0, InvalidInput = 2, Defect = 3 };

/// Exit code for a library error: Defect for defect kinds, InvalidInput otherwise.
int exit_code(ErrorKind kind) noexcept;

/// Runs one invocation; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli

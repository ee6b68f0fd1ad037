// Command-line front end. Kept in the library so tests can drive it without
// spawning processes.
#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace renamer::cli {

enum ExitStatus : int {
  kYes = 0,          // member / renamable / satisfiable
  kNo = 1,           // not member / not renamable / unsatisfiable
  kInputError = 2,   // usage, I/O or parse error
  kResourceLimit = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renamer::cli

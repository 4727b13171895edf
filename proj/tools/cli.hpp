#pragma once

// Batch command-line front end.  run() is the whole program: it parses argv,
// dispatches, and maps failures to exit codes (0 success, 1 verification
// failure, 2 usage error, 3 resource limit).

#include <iosfwd>
#include <string>
#include <vector>

namespace symco::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symco::cli

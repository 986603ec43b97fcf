#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lband {

/// Runs the command-line front end on already-split arguments (argv[0]
/// excluded). Results go to `out`, structured errors to `err`. Returns the
/// process exit code: 0 success, 2 usage or parse error, 3 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lband

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsect {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on usage or input-format
/// errors, 2 on semantic failures (validation, relations, inconsistency).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsect

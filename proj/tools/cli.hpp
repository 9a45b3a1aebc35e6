#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pombox::cli {

/// Runs one command line (without the program name). Returns 0 when the query
/// holds, 1 when it does not, 2 on usage or input errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pombox::cli

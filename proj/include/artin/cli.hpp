#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin {

/// Runs one command line (args excludes the program name). The JSON payload
/// goes to `out`, a short summary to `err`. Exit codes: 0 verdict, 1 error,
/// 2 undecided within budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin

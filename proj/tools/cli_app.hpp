#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcube::cli {

/// Runs one command line (without the program name). Normal output goes to
/// `out`; errors go to `err` as a single `error[<Code>] <message>` line.
/// Returns 0 on success, 1 when `verify` or `example` reports a failure,
/// 2 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcube::cli

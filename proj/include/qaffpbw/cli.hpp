#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qaff::cli {

/// Runs one `qaffpbw` invocation. args excludes the program name.
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The worked examples of type A2^1 as named checks; writes a JSON report and
/// returns true when every check passes.
bool verify_examples(std::ostream& out);

}  // namespace qaff::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qk {

/// Exit codes: 0 success or passing check, 1 failed check, 2 input error.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// The comparable part of a report: the document without its "timing" field,
/// re-serialized canonically. Text that is not JSON is returned unchanged.
std::string canonical_section(const std::string &report_text);

} // namespace qk

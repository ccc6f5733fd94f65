#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbalg {

/// Full command-line driver; `main` is a thin wrapper around this so the
/// dispatch, JSON emission, and exit-code mapping are all testable in-process.
/// Machine-readable JSON goes to `out`, human summaries and errors to `err`.
/// Returns the process exit code: 0 success/verified, 1 property violated
/// (with witness in the JSON), 2 input error, 3 budget or fuel exhausted.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace symbalg

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upp {

// Command dispatch behind the upptool binary, callable in-process so tests
// can assert outputs and exit codes directly.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 precondition violation,
// 4 invariant violation, 1 unexpected failure.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace upp

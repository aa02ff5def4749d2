#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurtab {

// The schurtab command line: enumerate | count | weightpoly | straighten |
// verify <task> | report. JSON on stdout, progress on stderr.
// Exit codes: 0 success / all checks pass, 1 a verified claim failed
// (counterexample JSON on stdout), 2 usage or resource-bound error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurtab

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symidx {

// Command-line front end. Exit codes: 0 success / verified, 1 verification
// failure (survivors, failed checks, obstructed embedding), 2 usage error or
// unknown space id. Output is deterministic for a fixed catalog.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symidx

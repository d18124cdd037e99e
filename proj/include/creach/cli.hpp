#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace creach {

// Dispatches one invocation; returns the process exit code.
// decide: 0 reachable, 1 not reachable; any usage or domain error: 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace creach

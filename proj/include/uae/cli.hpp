#pragma once
// Command line front end. dispatch runs one command (program name excluded)
// and writes all output to the given streams, so tests can drive it without
// spawning processes. Exit code 0 means every requested check passed, 1 means
// a computation failed or a verification found a mismatch, 2 is a usage
// error.
#include <iosfwd>
#include <string>
#include <vector>

namespace uae {

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace uae

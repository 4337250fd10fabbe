#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in memory.

#include <iosfwd>
#include <string>
#include <vector>

namespace monodisk::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// args excludes the program name. Errors go to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monodisk::cli

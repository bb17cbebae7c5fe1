#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace homfib::cli {

/// A worked-example document compiled into the binary.
struct Fixture {
  const char* name;
  const char* text;
};

std::span<const Fixture> embedded_fixtures();

/// Runs `homfib <args...>` (args excludes the program name). Returns the exit
/// code: 0 success, 1 expectation mismatch, 2 input error, 3 internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace homfib::cli

#pragma once

#include <stdexcept>
#include <string>

namespace homfib {

/// Caller-supplied data violates a precondition or schema rule.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The built-in cohomology table has no entry for the requested space.
class TableMiss : public std::runtime_error {
 public:
  explicit TableMiss(const std::string& what)
      : std::runtime_error("undecidable_with_table: " + what) {}
};

/// An internal invariant failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homfib

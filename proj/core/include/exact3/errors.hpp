#ifndef EXACT3_ERRORS_HPP
#define EXACT3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exact3 {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller passed a value that is malformed regardless of graph structure
// (unknown vertex id, u == v, permutation that is not a permutation, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The arguments are well-formed but the graph does not satisfy the
// operation's structural precondition (not connected, not biconnected,
// cut not minimum, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parse or serialization failure for one of the text formats.
// line is 1-based, or -1 when no line applies.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, int line_no = -1)
      : Error(what), line(line_no) {}
  int line;
};

// Something a theorem rules out happened anyway; a bug, not a user error.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Per-operation exactness assertions. They execute the preservation
// propositions after each synthesis operation and cost O(n * maxflow) each,
// so they default to off; the EXACT3_DEBUG_ASSERT=1 environment variable or
// set_debug_asserts(true) turns them on.
bool debug_asserts_enabled();
void set_debug_asserts(bool on);

}  // namespace exact3

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

enum class ErrorKind {
  precision,        // coefficient requested beyond a certified truncation
  domain,           // operation undefined for the given input
  invalid_spec,     // malformed series or graph specification
  divergence,       // fixed point expression is not a contraction
  not_invertible,   // compositional or multiplicative inverse does not exist
  not_applicable,   // a theorem's hypotheses are not met
  incompatible,     // operands of a binary operation do not match
  budget,           // oracle refused: input exceeds configured budget
  internal,         // two independent computations disagreed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace riordan

#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

enum class ErrorCategory {
  input,          // malformed or out-of-domain arguments
  precondition,   // caller violated a documented precondition
  invariant,      // a value-type invariant does not hold (e.g. reality)
  configuration,  // inconsistent resolution / truncation settings
  degeneracy,     // geometric degeneracy (vanishing speed, kernel pole)
  geometry,       // self-intersection / chord collapse
  numeric,        // iteration failed to converge, overflow
  size,           // combinatorial guard exceeded
};

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string& msg) {
  throw Error(c, msg);
}

inline void require(bool cond, ErrorCategory c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace mobius

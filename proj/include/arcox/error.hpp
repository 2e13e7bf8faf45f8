#ifndef ARCOX_ERROR_HPP
#define ARCOX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arcox {

// Every failure in the library carries one of these categories so that
// callers (and the C API) can map it to a stable code.
enum class ErrorCode {
  parse,             // malformed input document
  validate,          // input rejected by a validation rule
  invalid_argument,  // caller passed an out-of-contract value (e.g. bad k)
  label_conflict,    // induced label function received contradictory values
  budget_exhausted,  // an oracle ran out of its reduction/enumeration budget
  unsupported,       // decision procedure not available for this input class
  check_failed,      // a verification check with status fail blocked an operation
  internal,          // broken invariant; a bug, never expected on valid inputs
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

  // Position info for parse errors; -1 when unknown.
  int line = -1;
  int column = -1;

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Internal invariant check. Unlike assert() this is always on: a violated
// construction invariant must surface as ErrorCode::internal, not UB.
inline void require_internal(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::internal, "internal invariant violated: " + message);
}

const char* error_code_name(ErrorCode code);

}  // namespace arcox

#endif

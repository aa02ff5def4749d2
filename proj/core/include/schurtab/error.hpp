#pragma once

#include <stdexcept>
#include <string>

namespace schurtab {

enum class ErrorCode {
    Usage,             // malformed input, unknown symbol, shape/alphabet mismatch
    ResourceLimit,     // tensor-space dimension bound exceeded
    IterationCap,      // straightening step budget exhausted (termination hypothesis)
    PatternMismatch,   // rewrite site does not match the documented violation pattern
    InconsistentSolve, // coordinates against a claimed basis do not exist
    Internal,          // broken invariant (exact division left a remainder, ...)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace schurtab

// Error taxonomy shared across the library. Budget exhaustion carries the
// partial trace so callers can inspect how far normalization got.
#pragma once

#include <stdexcept>
#include <string>

namespace pathrw {

enum class ErrorKind {
  Parse,            // malformed expression or environment file
  UnknownAtom,      // atom or homotopy family not declared in the environment
  LooseTerm,        // endpoints requested for a connective-only constructor
  EndpointMismatch, // composition or substitution endpoints do not line up
  BadPosition,      // substitution position does not exist in the point
  BudgetExceeded,   // normalization ran out of steps
  IllFormedResult,  // a rule application broke endpoint preservation (catalog bug)
  NotCirclePath,    // winding asked of a term outside the circle language
  NotNatPath,       // encode asked of a term outside the naturals language
  NotCoprodPath,    // classification asked of a non-coproduct path
  EmptyCode,        // decode asked for an uninhabited code
  GenerationFailed, // random generator could not satisfy its constraints
  Internal,         // invariant violation inside the library
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

} // namespace pathrw

#pragma once

#include <stdexcept>
#include <string>

namespace routh {

/// Base of every failure raised by the library. `is_usage()` separates
/// malformed input (exit 64 on the CLI) from valid input that cannot be
/// analysed (exit 65).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual bool is_usage() const noexcept { return false; }
};

#define ROUTH_DEFINE_ERROR(Name, Usage)                   \
  class Name : public Error {                             \
   public:                                                \
    using Error::Error;                                   \
    bool is_usage() const noexcept override { return Usage; } \
  };

ROUTH_DEFINE_ERROR(DivisionByZero, false)
ROUTH_DEFINE_ERROR(ParseError, true)
ROUTH_DEFINE_ERROR(EmptyPolynomial, false)
ROUTH_DEFINE_ERROR(DegreeTooSmall, false)
ROUTH_DEFINE_ERROR(OriginRoot, false)
ROUTH_DEFINE_ERROR(NegativeLeadingCoefficient, false)
ROUTH_DEFINE_ERROR(PolicyUnsupported, false)
ROUTH_DEFINE_ERROR(EpsContaminatedRow, false)
ROUTH_DEFINE_ERROR(UnpairedComplexRoot, false)
ROUTH_DEFINE_ERROR(NoParameter, true)
ROUTH_DEFINE_ERROR(MultipleParameters, true)
ROUTH_DEFINE_ERROR(InvalidArgument, true)

#undef ROUTH_DEFINE_ERROR

}  // namespace routh

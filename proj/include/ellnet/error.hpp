#ifndef ELLNET_ERROR_HPP
#define ELLNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ellnet {

// Every failure raised by the library derives from ellnet::Error so callers
// (the CLI in particular) can separate input problems from internal bugs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ELLNET_DEFINE_ERROR(Name)                 \
  class Name : public Error {                     \
   public:                                        \
    using Error::Error;                           \
  };

ELLNET_DEFINE_ERROR(NotOnCurveError)
ELLNET_DEFINE_ERROR(SingularPointError)
ELLNET_DEFINE_ERROR(SingularCurveError)
ELLNET_DEFINE_ERROR(DivisionByZeroError)
ELLNET_DEFINE_ERROR(DegenerateSequenceError)
ELLNET_DEFINE_ERROR(DegenerateConfigurationError)
ELLNET_DEFINE_ERROR(ZeroDivisorError)
ELLNET_DEFINE_ERROR(NonIntegralModelError)
ELLNET_DEFINE_ERROR(ModelError)
ELLNET_DEFINE_ERROR(IdentityPointError)
ELLNET_DEFINE_ERROR(IdentityCombinationError)
ELLNET_DEFINE_ERROR(LatticeElementError)
ELLNET_DEFINE_ERROR(PrecisionExhaustedError)
ELLNET_DEFINE_ERROR(BadProbeError)
ELLNET_DEFINE_ERROR(DependentPointsError)
ELLNET_DEFINE_ERROR(TorsionPointError)
ELLNET_DEFINE_ERROR(HypothesisViolatedError)
ELLNET_DEFINE_ERROR(FormViolationError)
ELLNET_DEFINE_ERROR(ParseError)
ELLNET_DEFINE_ERROR(InvalidArgumentError)

#undef ELLNET_DEFINE_ERROR

}  // namespace ellnet

#endif  // ELLNET_ERROR_HPP

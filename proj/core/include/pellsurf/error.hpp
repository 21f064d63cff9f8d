#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pellsurf {

enum class Errc {
  InvalidArgument,
  NotFundamental,
  DiscriminantTooLarge,
  NotPositiveDefinite,
  SquareDiscriminant,
  DiscMismatch,
  NotFound,
  ZeroElement,
  NonPrimitiveIdeal,
  NotOnSurface,
  NotPrimitive,
  BadSign,
  S1GcdViolation,
  GcdNotPower,
  MixedLevels,
  NotOnYamamoto,
  ParityViolation,
  NotDivisor,
  PreconditionViolated,
  FactorLimitExceeded,
  NegativeLeadingCoefficient,
  NegativeA,
  Internal,
};

std::string_view errc_name(Errc code);

// Domain and invariant failures. Codes GcdNotPower, NotFound and Internal
// indicate a broken invariant rather than bad input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pellsurf

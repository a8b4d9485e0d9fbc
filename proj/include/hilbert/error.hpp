#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbert {

enum class Errc {
  DivisionByNonUnit,
  NonzeroConstantTerm,
  PoleAtOrigin,
  UnknownKind,
  BadParameter,
  InsufficientOrder,
  ZeroPolynomial,
  BadOperationPolynomial,
  NoSeriesBranch,
  AmbiguousBranch,
  ResourceLimit,
  EmptySection,
  CoefficientBoundViolated,
  NotInvertible,
  OrderExceeded,
  ConstantTermNotOne,
  Validation,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this type; `code()` tells the
/// caller which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hilbert

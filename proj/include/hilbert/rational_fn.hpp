#pragma once

#include <string>

#include "hilbert/poly.hpp"

namespace hilbert {

/// num/den with gcd(num, den) = 1 and den(0) = 1, so the function is
/// expandable at t = 0 and equal functions have equal representations.
class RationalFn {
 public:
  RationalFn() : num_(), den_(UniPoly::constant(1)) {}
  /// Reduces and normalizes; throws ZeroPolynomial for den = 0 and
  /// PoleAtOrigin when the reduced denominator vanishes at 0.
  RationalFn(UniPoly num, UniPoly den);
  explicit RationalFn(UniPoly num) : RationalFn(std::move(num), UniPoly::constant(1)) {}

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const Rat& c, const RationalFn& a);
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)" with redundant parentheses and a unit denominator dropped.
  std::string to_string() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

}  // namespace hilbert

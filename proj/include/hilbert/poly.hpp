#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/rat.hpp"

namespace hilbert {

/// Dense univariate polynomial over the rationals, index = degree. The
/// coefficient vector never ends in a zero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Coefficient of t^n (zero past the degree).
  Rat operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a) { return a *= Rat(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(unsigned n) const;

  /// Renders in the variable `var`, e.g. "1-2t", "1+t^3", "(1/2)t^2".
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division over Q; throws ZeroPolynomial if `b` is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// a / b where b is known to divide a; throws Validation otherwise.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Integer multiple with coprime integer coefficients and positive leading term.
UniPoly primitive_part(const UniPoly& p);

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

}  // namespace hilbert

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "hilbert/poly.hpp"
#include "hilbert/rat.hpp"
#include "hilbert/series.hpp"

namespace hilbert {

/// Sparse polynomial in Q[t, z]. Terms are keyed by (degree in t, degree in z)
/// and zero coefficients are never stored.
class BiPoly {
 public:
  struct Exponent {
    std::size_t t = 0;
    std::size_t z = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
  };
  using Terms = std::map<Exponent, Rat>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);

  static BiPoly constant(const Rat& c);
  static BiPoly term(const Rat& c, std::size_t t_deg, std::size_t z_deg);
  static BiPoly t() { return term(1, 1, 0); }
  static BiPoly z() { return term(1, 0, 1); }
  static BiPoly in_t(const UniPoly& p);
  static BiPoly in_z(const UniPoly& p);

  const Terms& terms() const { return terms_; }
  Rat coeff(std::size_t t_deg, std::size_t z_deg) const;
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree_z() const;
  int degree_t() const;
  /// Coefficient of z^j as a polynomial in t.
  UniPoly coeff_of_z(std::size_t j) const;

  /// Leading exponent in the lex order comparing z-degree first, then t-degree.
  Exponent leading_exponent() const;

  /// Primitive integer coefficients with positive leading coefficient.
  BiPoly normalized() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Rat(-1); }
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned n) const;

  /// Terms by descending z-degree then t-degree, e.g. "729z^4 - 64t^3z + 16t^3".
  std::string to_string(char t_var = 't', char z_var = 'z') const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  Terms terms_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

/// a / b when b divides a in Q[t, z]; throws Validation otherwise.
BiPoly exact_quotient(const BiPoly& a, const BiPoly& b);

/// p(t_image, z_image).
BiPoly substitute(const BiPoly& p, const BiPoly& t_image, const BiPoly& z_image);

/// P(t, f(t)) to the order of f.
Series evaluate(const BiPoly& p, const Series& f);

}  // namespace hilbert

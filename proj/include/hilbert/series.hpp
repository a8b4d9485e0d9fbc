#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hilbert/poly.hpp"
#include "hilbert/rat.hpp"
#include "hilbert/rational_fn.hpp"

namespace hilbert {

/// Power series truncated at an explicit order N: coefficients of t^0..t^N
/// are exact, everything beyond is unknown. Binary operations produce the
/// smaller of the two orders.
class Series {
 public:
  explicit Series(std::size_t order = 0) : coeffs_(order + 1) {}
  /// Order is coeffs.size() - 1; an empty vector is promoted to the zero series of order 0.
  explicit Series(std::vector<Rat> coeffs);

  static Series from_ints(const std::vector<long>& coeffs);
  static Series from_poly(const UniPoly& p, std::size_t order);
  static Series one(std::size_t order);
  /// The series t (order >= 1 keeps the coefficient).
  static Series variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rat& operator[](std::size_t n) { return coeffs_.at(n); }
  std::span<const Rat> coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient; nullopt if all stored ones vanish.
  std::optional<std::size_t> valuation() const;

  /// Drops coefficients above `order` (never extends).
  Series truncated(std::size_t order) const;
  /// Multiplies by t^k; the order grows by k.
  Series shifted_up(std::size_t k) const;
  /// Divides by t^k; the k lowest coefficients must vanish and the order drops by k.
  Series shifted_down(std::size_t k) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rat& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= Rat(-1); }
  friend Series operator*(Series a, const Rat& c) { return a *= c; }
  friend Series operator*(const Rat& c, Series a) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);
  /// Throws DivisionByNonUnit when b(0) = 0.
  friend Series operator/(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  bool all_nonnegative_integers() const;

 private:
  std::vector<Rat> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Series series_arith(const Series& a, const Series& b, ArithOp op);

/// f(g(t)) by Horner; g(0) must be 0 (NonzeroConstantTerm otherwise).
Series compose(const Series& f, const Series& g);

/// The s with s(0) = 1 and s^2 = 1 + f; f(0) must be 0.
Series sqrt_one_plus(const Series& f);

/// Taylor expansion of rf at 0 to order n.
Series expand_rational(const RationalFn& rf, std::size_t order);

/// Keeps the coefficients at multiples of s, zeroes the rest.
Series section(const Series& f, std::size_t s);

/// c(t) = (1 - sqrt(1 - 4t)) / 2 = t + t^2 + 2t^3 + 5t^4 + ...
Series catalan(std::size_t order);

enum class NamedSeries { EulerPartitions, DistinctParts, Smith, ShearerP, ShearerRho, UfnarovskijUL };

/// Accepts the snake_case names used on the command line; UnknownKind otherwise.
NamedSeries parse_named_series(std::string_view name);

/// Truncated expansions of the classical intermediate-growth products.
Series named_series(NamedSeries kind, std::size_t order);

enum class LacunaryKind { Powers, Factorials };

LacunaryKind parse_lacunary_kind(std::string_view name);

/// 0/1 series supported on {d^n : n >= 0} or {n! : n >= 1}; d >= 2 for Powers.
Series lacunary(LacunaryKind kind, unsigned long d, std::size_t order);

}  // namespace hilbert

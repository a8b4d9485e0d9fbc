#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hilbert/rat.hpp"
#include "hilbert/rational_fn.hpp"
#include "hilbert/series.hpp"

namespace hilbert::invariants {

/// Dense square matrix with exact rational entries, row-major.
class SqMatrix {
 public:
  explicit SqMatrix(std::size_t size = 0) : size_(size), entries_(size * size) {}
  SqMatrix(std::size_t size, std::vector<Rat> entries);

  static SqMatrix identity(std::size_t size);
  /// Permutation matrix sending basis vector e_j to e_{perm[j]}.
  static SqMatrix permutation(const std::vector<std::size_t>& perm);

  std::size_t size() const { return size_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }

  Rat trace() const;
  Rat determinant() const;

  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);
  friend bool operator==(const SqMatrix& a, const SqMatrix& b) = default;
  /// Size first, then row-major lexicographic; used to key ordered containers.
  friend bool operator<(const SqMatrix& a, const SqMatrix& b) {
    return a.size_ != b.size_ ? a.size_ < b.size_ : a.entries_ < b.entries_;
  }

 private:
  std::size_t size_;
  std::vector<Rat> entries_;
};

/// A finite matrix group, listed element by element (identity first).
class MatrixGroup {
 public:
  /// Validation error unless the list is closed under products, contains
  /// the identity and all elements have a common size.
  explicit MatrixGroup(std::vector<SqMatrix> elements);

  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return elements_.front().size(); }
  const std::vector<SqMatrix>& elements() const { return elements_; }

 private:
  std::vector<SqMatrix> elements_;
};

/// Closure of `gens` under multiplication by a deterministic worklist.
/// Throws NotInvertible, OrderExceeded, or Validation for mixed sizes.
MatrixGroup group_closure(const std::vector<SqMatrix>& gens, std::size_t max_order = 10'000);

/// Named example groups: "S2" (swap on two letters) and "C3" (cyclic
/// permutation of three letters).
MatrixGroup named_group(std::string_view name);

struct AveragedSeries {
  Series series;
  RationalFn rational;
};

/// (1/|G|) sum 1/det(I - tg): commutative invariants.
AveragedSeries molien_commutative(const MatrixGroup& g, std::size_t order);

/// (1/|G|) sum 1/(1 - tr(g) t): invariants in the free associative algebra.
AveragedSeries dicks_formanek(const MatrixGroup& g, std::size_t order);

struct FreeGenerators {
  Series a;
  /// Every coefficient is a natural number, as it must be for a genuine free generating set.
  bool natural_coefficients;
};

/// a = 1 - 1/H, from H = 1/(1 - a). H(0) must be 1 (ConstantTermNotOne).
FreeGenerators free_generator_series(const Series& h);

enum class ClosedForm { Sl2Assoc, Ut2Assoc, Sl2AssocGens, Ut2AssocGens };
ClosedForm parse_closed_form(std::string_view name);

/// SL2 / UT2 invariants of the free associative algebra on two letters, and
/// their free-generator series, expanded exactly from the square-root forms.
Series closed_form_series(ClosedForm kind, std::size_t order);

enum class OracleKind { Sl2Nonassoc, Ut2Nonassoc, Sl2Assoc, Ut2Assoc };
OracleKind parse_oracle_kind(std::string_view name);

/// Invariant dimensions from the decomposition of tensor powers of the
/// natural representation: SL2 invariants in V^{(x)n} number Cat(n/2) for even
/// n, UT2 invariants C(n, floor(n/2)); the nonassociative kinds multiply by
/// the c_n bracketings and have no degree-0 part.
Series weyl_oracle_dims(OracleKind kind, std::size_t order);

enum class EllipticKind { Sl2Literal, Ut2Literal, Sl2WeylFixed };
EllipticKind parse_elliptic_kind(std::string_view name);

/// Termwise-exact expansion of the integrals over u in [0, 1]
///   sl2_literal:   sin^2(2 pi u) (1 - sqrt(1 - 8t sin(2 pi u)))
///   ut2_literal:   cos^2(pi u)   (1 - sqrt(1 - 8t cos(2 pi u)))
///   sl2_weylfixed: sin^2(2 pi u) (1 - sqrt(1 - 8t cos(2 pi u)))
/// using 1 - sqrt(1 - 4x) = 2 sum c_n x^n and the Wallis moments of sin/cos.
Series elliptic_integral_series(EllipticKind kind, std::size_t order);

}  // namespace hilbert::invariants

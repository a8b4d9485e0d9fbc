#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hilbert/rat.hpp"
#include "hilbert/rational_fn.hpp"
#include "hilbert/series.hpp"

namespace hilbert::magma {

/// Operation counts of an Omega-magma: either finitely many arities n >= 2
/// with counts p_n, or a closed form p(t) = sum p_n t^n with valuation >= 2
/// and nonnegative integer expansion.
class OmegaSignature {
 public:
  /// Validation error unless all keys are >= 2, all counts >= 0 and one is positive.
  static OmegaSignature from_arities(std::map<std::size_t, Int> arity_counts);
  /// Validation error unless the expansion (checked to `check_order`) has
  /// valuation >= 2, nonnegative integer coefficients and is nonzero.
  static OmegaSignature from_closed_form(RationalFn p, std::size_t check_order = 64);

  static OmegaSignature binary();
  /// One operation of every arity n >= 2: p(t) = t^2 / (1 - t).
  static OmegaSignature super_catalan();

  /// p(t) truncated at `order`.
  Series operation_series(std::size_t order) const;
  /// Arities with nonzero count up to `max_arity` (all of them for finite support).
  std::map<std::size_t, Int> arities_up_to(std::size_t max_arity) const;

  const std::optional<RationalFn>& closed_form() const { return closed_form_; }
  const std::map<std::size_t, Int>& arity_counts() const { return arity_counts_; }

 private:
  std::map<std::size_t, Int> arity_counts_;
  std::optional<RationalFn> closed_form_;
};

/// Generating function a(t) of a graded generating set: a(0) = 0, nonnegative integers.
class GeneratorWeights {
 public:
  explicit GeneratorWeights(Series a);
  /// One generator of degree 1, a(t) = t.
  static GeneratorWeights single(std::size_t order);
  const Series& series() const { return a_; }

 private:
  Series a_;
};

/// The series f with f(0) = 0 and f = a(t) + p(f), to `order`.
Series magma_series(const OmegaSignature& sig, const GeneratorWeights& gens, std::size_t order);

/// Counts planar Omega-trees with n leaves by recursive construction over the
/// root arity and the leaf compositions of its subtrees (memoized on leaf
/// count). Throws ResourceLimit once any count exceeds `limit`.
Int brute_force_count(const OmegaSignature& sig, std::size_t n, const Int& limit = Int("1000000000000"));

/// The submagma of degrees divisible by s is nonempty iff gcd(d, s) = 1 for
/// d = gcd{n - 1 : p_n != 0}.
bool section_nonempty(const OmegaSignature& sig, std::size_t s);

struct SubmagmaGenerators {
  Series section;     ///< g_S: elements of degree divisible by s
  Series generators;  ///< a = g_S - p(g_S): free generators of that submagma
};

/// Throws EmptySection when the submagma is empty.
SubmagmaGenerators submagma_generators(const OmegaSignature& sig, std::size_t s, std::size_t order);

/// (2n, a_{2n} / c_{2n}) for 2n <= order, where a is the binary s = 2 generator
/// series and c the Catalan series.
std::vector<std::pair<std::size_t, Rat>> branch_parity_ratio(std::size_t order);

}  // namespace hilbert::magma

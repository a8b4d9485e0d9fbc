#pragma once

#include <cstddef>

#include "hilbert/bipoly.hpp"
#include "hilbert/poly.hpp"
#include "hilbert/series.hpp"

namespace hilbert {

/// b(z, z - t): from an equation b(t, p(t)) = 0 for the operation series to
/// one satisfied by the one-generator magma series. Normalized.
BiPoly shift_transform(const BiPoly& b);

/// q(t, z - p(z)) for a polynomial operation series p of valuation >= 2
/// (BadOperationPolynomial otherwise). Normalized.
BiPoly substitute_case2(const BiPoly& q, const UniPoly& p);

/// Res_z(q(t, z), b(u, u - z)) as a polynomial in (t, u); u occupies the z
/// slot of the returned BiPoly. Sylvester matrix over Q[t, u], determinant by
/// Bareiss elimination. Normalized.
BiPoly resultant_case3(const BiPoly& q, const BiPoly& b);

/// Sylvester resultant in z of two polynomials whose z-coefficients are
/// BiPolys in the remaining two variables.
BiPoly sylvester_resultant(const std::vector<BiPoly>& a_coeffs, const std::vector<BiPoly>& b_coeffs);

/// Extends `seed` (a branch of P(t, z) = 0 known through seed.order()) to the
/// unique root series of order `order`, coefficient by coefficient.
///
/// With v the valuation of dP/dz along the branch, coefficient n is fixed by
/// the t^(n+v) coefficient of P(t, f); this is well defined once v <= seed
/// order. Throws AmbiguousBranch if the seed is too short to pin v and
/// NoSeriesBranch if the seed (or any lifted prefix) fails the equation.
Series series_root(const BiPoly& p, std::size_t order, const Series& seed);

}  // namespace hilbert

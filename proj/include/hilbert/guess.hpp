#pragma once

#include <cstddef>
#include <optional>

#include "hilbert/bipoly.hpp"
#include "hilbert/rational_fn.hpp"
#include "hilbert/series.hpp"

namespace hilbert {

/// Extra coefficients demanded beyond the unknown count, so a kernel found on
/// the data is not an accident of too few equations.
inline constexpr std::size_t kGuessGuard = 8;

/// Smallest-denominator rational function num/den with deg num, deg den <=
/// max_den_deg that reproduces every stored coefficient of f, or nullopt.
/// Needs f.order() >= 2 * max_den_deg + kGuessGuard.
std::optional<RationalFn> find_linear_recurrence(const Series& f, std::size_t max_den_deg);

/// P(t, z) with deg_z P <= dz, deg_t P <= dt and P(t, f(t)) = 0 to the full
/// order of f. The search runs over z-degree, then t-degree, from below, so
/// the result is of minimal degree; it is returned normalized. Needs
/// f.order() >= (dz + 1)(dt + 1) + kGuessGuard.
std::optional<BiPoly> guess_algebraic_equation(const Series& f, std::size_t dz, std::size_t dt);

/// Index of the first nonzero coefficient of P(t, f(t)); nullopt means the
/// composite vanishes to the order of f.
std::optional<std::size_t> annihilator_residual(const BiPoly& p, const Series& f);

}  // namespace hilbert

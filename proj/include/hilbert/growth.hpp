#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hilbert/rat.hpp"
#include "hilbert/rational_fn.hpp"
#include "hilbert/series.hpp"

namespace hilbert::growth {

/// Fixed thresholds of the finite-range growth heuristics.
///
/// The classifier looks at the running maximum M_n of the coefficients on the
/// top half of the stored range, at the ratio excess x_n = M_n / M_{n-1} - 1,
/// and at the least-squares slope of log x_n against log n. Polynomial
/// growth gives x_n ~ D/n (slope -1), the partition-type products give
/// x_n ~ C/sqrt(n) (slope -1/2), exponential growth gives a constant excess
/// (slope 0).
struct GrowthConfig {
  std::size_t min_order = 32;
  std::size_t min_points = 4;
  /// An exponential rate must exceed 1 + ratio_cutoff.
  double ratio_cutoff = 1e-3;
  /// Slopes above this are exponential.
  double exponential_slope = -0.25;
  /// Slopes below this are polynomial.
  double polynomial_slope = -0.75;
};

enum class GrowthClass { Polynomial, Exponential, Intermediate, Inconclusive };

std::string_view to_string(GrowthClass c);

struct GrowthReport {
  GrowthClass growth_class = GrowthClass::Inconclusive;
  /// Degree estimate for Polynomial, rate estimate for Exponential, unset otherwise.
  std::optional<double> estimate;
  /// Fitted slope of log(ratio excess) against log n (NaN when not fitted).
  double slope = 0;
  std::string evidence;
};

/// Multiplicity of t = 1 as a pole of the reduced function.
std::size_t gk_from_rational(const RationalFn& rf);
/// Reduces num/den first.
std::size_t gk_from_rational(const UniPoly& num, const UniPoly& den);

/// Needs order >= config.min_order (InsufficientOrder) and nonnegative
/// coefficients (Validation).
GrowthReport classify_growth(const Series& f, const GrowthConfig& config = {});

enum class FatouClass { Rational, TranscendentalByFatou, ExponentialInconclusive };

std::string_view to_string(FatouClass c);

struct FatouReport {
  FatouClass fatou_class;
  std::optional<RationalFn> rational;
  GrowthReport growth;
  std::string note;
};

/// Rational if a recurrence with denominator degree <= max_den_deg is found;
/// otherwise transcendental for polynomially bounded or intermediate growth,
/// which is only as strong as the non-rationality evidence (no recurrence up
/// to that length); otherwise inconclusive, since Fatou says nothing about
/// exponential growth.
FatouReport fatou_classify(const Series& f, std::size_t max_den_deg, const GrowthConfig& config = {});

enum class PartitionKind { P, Rho };

PartitionKind parse_partition_kind(std::string_view name);

struct HardyRamanujan {
  Int exact;
  double estimate;
  double ratio;
};

/// Exact p_n (or rho_n) against the classical leading asymptotic
///   p_n ~ exp(pi sqrt(2n/3)) / (4 n sqrt 3),
///   rho_n ~ exp(pi sqrt(n/3)) / (4 (3 n^3)^(1/4)).
HardyRamanujan hardy_ramanujan_compare(PartitionKind kind, std::size_t n);

}  // namespace hilbert::growth

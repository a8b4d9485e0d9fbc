#include "hilbert/growth.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/guess.hpp"

namespace hilbert::growth {

std::string_view to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::Polynomial: return "Polynomial";
    case GrowthClass::Exponential: return "Exponential";
    case GrowthClass::Intermediate: return "Intermediate";
    case GrowthClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(FatouClass c) {
  switch (c) {
    case FatouClass::Rational: return "Rational";
    case FatouClass::TranscendentalByFatou: return "TranscendentalByFatou";
    case FatouClass::ExponentialInconclusive: return "ExponentialInconclusive";
  }
  return "ExponentialInconclusive";
}

std::size_t gk_from_rational(const RationalFn& rf) {
  const UniPoly t_minus_one{-1, 1};
  UniPoly den = rf.den();
  std::size_t mult = 0;
  while (!den.is_zero() && den.eval(1) == 0) {
    den = exact_quotient(den, t_minus_one);
    ++mult;
  }
  return mult;
}

std::size_t gk_from_rational(const UniPoly& num, const UniPoly& den) { return gk_from_rational(RationalFn(num, den)); }

namespace {

double log_rat(const Rat& x) {
  long exp_num = 0;
  long exp_den = 0;
  const double mn = mpz_get_d_2exp(&exp_num, x.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&exp_den, x.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(exp_num - exp_den) * std::numbers::ln2;
}

}  // namespace

GrowthReport classify_growth(const Series& f, const GrowthConfig& config) {
  const std::size_t n_max = f.order();
  if (n_max < config.min_order) {
    throw Error(Errc::InsufficientOrder, "growth classification needs order >= " + std::to_string(config.min_order));
  }
  std::vector<Rat> envelope(n_max + 1);
  Rat running = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (f[n] < 0) throw Error(Errc::Validation, "growth classification needs nonnegative coefficients");
    if (f[n] > running) running = f[n];
    envelope[n] = running;
  }

  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t flat = 0;
  std::size_t first = std::max<std::size_t>(n_max / 2, 1);
  for (std::size_t n = first; n <= n_max; ++n) {
    if (envelope[n - 1] == 0) continue;
    const Rat excess = envelope[n] / envelope[n - 1] - 1;
    if (excess == 0) {
      ++flat;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(log_rat(excess));
  }

  GrowthReport report;
  report.slope = std::numeric_limits<double>::quiet_NaN();
  std::ostringstream ev;
  ev << "window [" << first << ", " << n_max << "], " << xs.size() << " increasing and " << flat << " flat steps";

  if (xs.empty() && envelope[n_max] > 0) {
    report.growth_class = GrowthClass::Polynomial;
    report.estimate = 0.0;
    ev << "; coefficients bounded on the window";
    report.evidence = ev.str();
    return report;
  }
  if (xs.size() < config.min_points) {
    ev << "; too few increasing steps to fit";
    report.evidence = ev.str();
    return report;
  }

  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  report.slope = sxy / sxx;

  const double span = static_cast<double>(n_max - first);
  const double rate = std::exp((log_rat(envelope[n_max]) - log_rat(envelope[first])) / span);
  const Rat last_ratio = envelope[n_max] / envelope[n_max - 1];
  ev << "; slope of log(ratio - 1) vs log n = " << report.slope << "; mean ratio " << rate;

  if (report.slope > config.exponential_slope) {
    if (rate > 1 + config.ratio_cutoff) {
      report.growth_class = GrowthClass::Exponential;
      report.estimate = flat == 0 ? last_ratio.get_d() : rate;
    } else {
      ev << "; ratio too close to 1 for exponential growth";
    }
  } else if (report.slope < config.polynomial_slope) {
    report.growth_class = GrowthClass::Polynomial;
    if (flat == 0) {
      // n (a_n / a_{n-1} - 1) -> degree.
      report.estimate = Rat(Rat(static_cast<long>(n_max)) * (last_ratio - 1)).get_d();
    } else {
      report.estimate = (log_rat(envelope[n_max]) - log_rat(envelope[first])) /
                        std::log(static_cast<double>(n_max) / static_cast<double>(first));
    }
  } else {
    report.growth_class = GrowthClass::Intermediate;
  }
  if (report.estimate) ev << "; estimate " << *report.estimate;
  report.evidence = ev.str();
  return report;
}

FatouReport fatou_classify(const Series& f, std::size_t max_den_deg, const GrowthConfig& config) {
  if (!f.all_nonnegative_integers()) throw Error(Errc::Validation, "Fatou classification needs natural-number coefficients");
  if (auto rf = find_linear_recurrence(f, max_den_deg)) {
    return {FatouClass::Rational, rf, {}, "recovered " + rf->to_string()};
  }
  GrowthReport growth = classify_growth(f, config);
  const std::string bound = "no rational function with denominator degree <= " + std::to_string(max_den_deg) +
                            " fits order " + std::to_string(f.order());
  if (growth.growth_class == GrowthClass::Polynomial || growth.growth_class == GrowthClass::Intermediate) {
    return {FatouClass::TranscendentalByFatou, std::nullopt, growth,
            bound + "; growth is " + std::string(to_string(growth.growth_class)) +
                ", so the series is transcendental unless a longer recurrence exists"};
  }
  return {FatouClass::ExponentialInconclusive, std::nullopt, growth,
          bound + "; growth is " + std::string(to_string(growth.growth_class)) + ", outside the reach of Fatou's theorem"};
}

PartitionKind parse_partition_kind(std::string_view name) {
  if (name == "p") return PartitionKind::P;
  if (name == "rho") return PartitionKind::Rho;
  throw Error(Errc::UnknownKind, "partition kind '" + std::string(name) + "'");
}

HardyRamanujan hardy_ramanujan_compare(PartitionKind kind, std::size_t n) {
  if (n == 0) throw Error(Errc::BadParameter, "n must be >= 1");
  const auto named = kind == PartitionKind::P ? NamedSeries::EulerPartitions : NamedSeries::DistinctParts;
  const Int exact = named_series(named, n)[n].get_num();
  const double x = static_cast<double>(n);
  const double pi = std::numbers::pi;
  double log_estimate = 0;
  if (kind == PartitionKind::P) {
    log_estimate = pi * std::sqrt(2.0 * x / 3.0) - std::log(4.0 * x * std::sqrt(3.0));
  } else {
    log_estimate = pi * std::sqrt(x / 3.0) - std::log(4.0 * std::pow(3.0 * x * x * x, 0.25));
  }
  const double ratio = std::exp(log_rat(Rat(exact)) - log_estimate);
  return {exact, std::exp(log_estimate), ratio};
}

}  // namespace hilbert::growth

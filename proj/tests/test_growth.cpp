#include <doctest.h>

#include <cmath>
#include <functional>

#include "hilbert/error.hpp"
#include "hilbert/growth.hpp"
#include "hilbert/guess.hpp"
#include "support.hpp"

using namespace hilbert;
using namespace hilbert::growth;
using hilbert::testing::Gen;

namespace {

Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hilbert::Error");
  return Errc::Validation;
}

Series expand(const UniPoly& num, const UniPoly& den, std::size_t order) {
  return expand_rational(RationalFn(num, den), order);
}

}  // namespace

TEST_CASE("gk_from_rational") {
  const UniPoly one_minus_t{1, -1};
  const UniPoly den = one_minus_t.pow(2) * UniPoly{1, 0, 0, -1};
  CHECK(gk_from_rational(RationalFn(UniPoly{1}, den)) == 3);
  CHECK(gk_from_rational(RationalFn(UniPoly{1}, UniPoly{1, -2})) == 0);
  CHECK(gk_from_rational(one_minus_t, one_minus_t.pow(2)) == 1);
  CHECK(gk_from_rational(RationalFn(UniPoly{1, 1, 1})) == 0);
}

TEST_CASE("gk_from_rational ignores common factors") {
  Gen gen(131);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = gen.index(0, 4);
    UniPoly den = UniPoly{1, -1}.pow(static_cast<unsigned>(k)) * UniPoly{1, 0, 1};
    const UniPoly extra = gen.coin() ? UniPoly{1, -1}.pow(static_cast<unsigned>(gen.index(1, 3))) : gen.unit_poly(3);
    if (extra.eval(0) == 0) continue;
    CHECK(gk_from_rational(UniPoly{1}, den) == k);
    CHECK(gk_from_rational(extra, den * extra) == k);
  }
}

TEST_CASE("classify_growth examples") {
  const GrowthReport partitions = classify_growth(named_series(NamedSeries::EulerPartitions, 200));
  CHECK(partitions.growth_class == GrowthClass::Intermediate);
  CHECK(partitions.slope > -0.75);
  CHECK(partitions.slope < -0.25);
  CHECK_FALSE(partitions.evidence.empty());

  const GrowthReport two = classify_growth(expand(UniPoly{1}, UniPoly{1, -2}, 64));
  CHECK(two.growth_class == GrowthClass::Exponential);
  REQUIRE(two.estimate);
  CHECK(*two.estimate == doctest::Approx(2.0).epsilon(1e-9));

  const GrowthReport cubic = classify_growth(expand(UniPoly{1}, UniPoly{1, -1}.pow(3), 64));
  CHECK(cubic.growth_class == GrowthClass::Polynomial);
  REQUIRE(cubic.estimate);
  CHECK(std::fabs(*cubic.estimate - 2.0) < 0.25);

  const GrowthReport catalan_report = classify_growth(catalan(64));
  CHECK(catalan_report.growth_class == GrowthClass::Exponential);

  const GrowthReport bounded = classify_growth(lacunary(LacunaryKind::Powers, 2, 300));
  CHECK(bounded.growth_class == GrowthClass::Polynomial);
  CHECK(bounded.estimate == std::optional<double>(0.0));

  const GrowthReport zero = classify_growth(Series(40));
  CHECK(zero.growth_class == GrowthClass::Inconclusive);

  CHECK(error_code([] { classify_growth(Series::one(31)); }) == Errc::InsufficientOrder);
  CHECK(error_code([] { classify_growth(-Series::one(40)); }) == Errc::Validation);
}

TEST_CASE("polynomial degree estimates for (1 - t)^-k") {
  for (unsigned k = 1; k <= 6; ++k) {
    const GrowthReport r = classify_growth(expand(UniPoly{1}, UniPoly{1, -1}.pow(k), 64));
    CHECK(r.growth_class == GrowthClass::Polynomial);
    REQUIRE(r.estimate);
    CHECK(std::fabs(*r.estimate - (k - 1.0)) <= 0.25);
  }
}

TEST_CASE("intermediate growth of the named products") {
  for (auto kind : {NamedSeries::EulerPartitions, NamedSeries::DistinctParts, NamedSeries::Smith, NamedSeries::ShearerP,
                    NamedSeries::ShearerRho}) {
    CHECK(classify_growth(named_series(kind, 300)).growth_class == GrowthClass::Intermediate);
  }
}

TEST_CASE("exponential rates") {
  for (long base = 2; base <= 5; ++base) {
    const GrowthReport r = classify_growth(expand(UniPoly{1, -1}, UniPoly{1, -base}, 64));
    CHECK(r.growth_class == GrowthClass::Exponential);
    REQUIRE(r.estimate);
    CHECK(*r.estimate == doctest::Approx(static_cast<double>(base)).epsilon(1e-6));
  }
  // Fibonacci: golden ratio.
  const GrowthReport fib = classify_growth(expand(UniPoly{1}, UniPoly{1, -1, -1}, 64));
  CHECK(fib.growth_class == GrowthClass::Exponential);
  CHECK(*fib.estimate == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-6));
}

TEST_CASE("classification is deterministic") {
  const Series p = named_series(NamedSeries::EulerPartitions, 120);
  const GrowthReport a = classify_growth(p);
  const GrowthReport b = classify_growth(p);
  CHECK(a.growth_class == b.growth_class);
  CHECK(a.slope == b.slope);
  CHECK(a.evidence == b.evidence);
}

TEST_CASE("fatou_classify") {
  const RationalFn rf(UniPoly{1, -1}, UniPoly{1, -2});
  const FatouReport rational = fatou_classify(expand_rational(rf, 64), 10);
  CHECK(rational.fatou_class == FatouClass::Rational);
  REQUIRE(rational.rational);
  CHECK(*rational.rational == rf);

  const FatouReport lac = fatou_classify(lacunary(LacunaryKind::Powers, 2, 300), 20);
  CHECK(lac.fatou_class == FatouClass::TranscendentalByFatou);
  CHECK(lac.note.find("unless") != std::string::npos);

  const FatouReport part = fatou_classify(named_series(NamedSeries::EulerPartitions, 200), 20);
  CHECK(part.fatou_class == FatouClass::TranscendentalByFatou);
  CHECK(part.growth.growth_class == GrowthClass::Intermediate);

  CHECK(fatou_classify(catalan(64), 20).fatou_class == FatouClass::ExponentialInconclusive);
  CHECK(error_code([] { fatou_classify(catalan(20), 10); }) == Errc::InsufficientOrder);
  CHECK(error_code([&] { fatou_classify(expand_rational(rf, 64) * make_rat(1, 2), 10); }) == Errc::Validation);
}

TEST_CASE("fatou_classify never calls a recurrence transcendental") {
  Gen gen(141);
  for (int trial = 0; trial < 30; ++trial) {
    // Nonnegative rational series: products of 1/(1 - t^k).
    UniPoly den{1};
    for (int f = 0; f < 3; ++f) den = den * (UniPoly{1} - UniPoly::monomial(1, gen.index(1, 3)));
    const Series s = expand(UniPoly{1}, den, 64);
    const FatouReport r = fatou_classify(s, 10);
    CHECK(r.fatou_class == FatouClass::Rational);
    CHECK(find_linear_recurrence(s, 10).has_value());
  }
}

TEST_CASE("hardy_ramanujan_compare") {
  const HardyRamanujan p100 = hardy_ramanujan_compare(PartitionKind::P, 100);
  CHECK(p100.exact == 190569292);
  CHECK(p100.ratio >= 0.95);
  CHECK(p100.ratio <= 1.05);
  CHECK(hardy_ramanujan_compare(PartitionKind::P, 1).exact == 1);
  CHECK(hardy_ramanujan_compare(PartitionKind::Rho, 10).exact == 10);
  const double r400 = hardy_ramanujan_compare(PartitionKind::P, 400).ratio;
  const double r1600 = hardy_ramanujan_compare(PartitionKind::P, 1600).ratio;
  CHECK(std::fabs(r400 - 1) < std::fabs(p100.ratio - 1));
  CHECK(std::fabs(r1600 - 1) < std::fabs(r400 - 1));
  const double rho100 = hardy_ramanujan_compare(PartitionKind::Rho, 100).ratio;
  const double rho1600 = hardy_ramanujan_compare(PartitionKind::Rho, 1600).ratio;
  CHECK(std::fabs(rho1600 - 1) < std::fabs(rho100 - 1));
  CHECK(rho100 == doctest::Approx(1.0).epsilon(0.1));
  CHECK(error_code([] { hardy_ramanujan_compare(PartitionKind::P, 0); }) == Errc::BadParameter);
  CHECK(error_code([] { parse_partition_kind("q"); }) == Errc::UnknownKind);
}

#include <doctest.h>

#include <cmath>
#include <functional>

#include "hilbert/error.hpp"
#include "hilbert/magma.hpp"
#include "support.hpp"

using namespace hilbert;
using namespace hilbert::magma;
using hilbert::testing::Gen;
using hilbert::testing::ints;

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

Series one_generator(const OmegaSignature& sig, std::size_t order) {
  return magma_series(sig, GeneratorWeights::single(order), order);
}

}  // namespace

TEST_CASE("signatures validate their operation counts") {
  CHECK(error_code([] { OmegaSignature::from_arities({{1, 1}}); }) == Errc::Validation);
  CHECK(error_code([] { OmegaSignature::from_arities({{2, -1}}); }) == Errc::Validation);
  CHECK(error_code([] { OmegaSignature::from_arities({{2, 0}}); }) == Errc::Validation);
  CHECK(error_code([] { OmegaSignature::from_closed_form(RationalFn(UniPoly{0, 1}, UniPoly{1, -1})); }) == Errc::Validation);
  CHECK(error_code([] { OmegaSignature::from_closed_form(RationalFn(UniPoly{0, 0, 1}, UniPoly{1, 1})); }) == Errc::Validation);
  CHECK(error_code([] { OmegaSignature::from_closed_form(RationalFn(UniPoly{0, 0, 1}, UniPoly{2, -1})); }) == Errc::Validation);
  CHECK(error_code([] { GeneratorWeights(ints({1, 1})); }) == Errc::Validation);
  CHECK(error_code([] { GeneratorWeights(ints({0, -1})); }) == Errc::Validation);

  const auto sc = OmegaSignature::super_catalan();
  CHECK(sc.operation_series(5) == ints({0, 0, 1, 1, 1, 1}));
  CHECK(sc.arities_up_to(4).size() == 3);
  CHECK(OmegaSignature::binary().arities_up_to(9).size() == 1);
}

TEST_CASE("magma_series") {
  CHECK(one_generator(OmegaSignature::binary(), 8) == ints({0, 1, 1, 2, 5, 14, 42, 132, 429}));
  CHECK(one_generator(OmegaSignature::super_catalan(), 6) == ints({0, 1, 1, 3, 11, 45, 197}));
  CHECK(magma_series(OmegaSignature::binary(), GeneratorWeights(Series(6)), 6) == Series(6));
}

TEST_CASE("brute_force_count") {
  const auto binary = OmegaSignature::binary();
  CHECK(brute_force_count(binary, 5) == 14);
  CHECK(brute_force_count(OmegaSignature::from_arities({{2, 1}, {3, 1}}), 3) == 3);
  CHECK(brute_force_count(binary, 1) == 1);
  CHECK(brute_force_count(OmegaSignature::from_arities({{5, 2}}), 1) == 1);
  CHECK(error_code([&] { brute_force_count(binary, 25, Int(1000)); }) == Errc::ResourceLimit);
}

TEST_CASE("tree enumeration agrees with the series equation") {
  const auto binary = OmegaSignature::binary();
  const Series fb = one_generator(binary, 12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(brute_force_count(binary, n) == fb[n].get_num());

  Gen gen(81);
  for (int trial = 0; trial < 12; ++trial) {
    std::map<std::size_t, Int> arities;
    for (std::size_t n = 2; n <= 5; ++n) {
      if (gen.coin()) arities[n] = gen.integer(1, 3);
    }
    if (arities.empty()) arities[3] = 1;
    const auto sig = OmegaSignature::from_arities(arities);
    const Series f = one_generator(sig, 10);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(brute_force_count(sig, n) == f[n].get_num());
    CHECK(f.all_nonnegative_integers());
  }

  // A closed-form signature is truncated to its arities below n.
  const auto sc = OmegaSignature::super_catalan();
  const Series fs = one_generator(sc, 9);
  for (std::size_t n = 1; n <= 9; ++n) CHECK(brute_force_count(sc, n) == fs[n].get_num());
}

TEST_CASE("section_nonempty") {
  CHECK(section_nonempty(OmegaSignature::binary(), 3));
  CHECK_FALSE(section_nonempty(OmegaSignature::from_arities({{3, 1}}), 2));
  CHECK(section_nonempty(OmegaSignature::from_arities({{3, 1}}), 3));
  CHECK(section_nonempty(OmegaSignature::from_arities({{4, 2}}), 1));
  CHECK_FALSE(section_nonempty(OmegaSignature::from_arities({{3, 1}, {5, 1}}), 4));
  CHECK(section_nonempty(OmegaSignature::super_catalan(), 6));
  CHECK(error_code([] { section_nonempty(OmegaSignature::binary(), 0); }) == Errc::BadParameter);
}

TEST_CASE("section_nonempty matches the computed section") {
  // A nonempty submagma has elements of degree s * k for some small k.
  for (const auto& arities : std::vector<std::map<std::size_t, Int>>{{{3, 1}}, {{4, 1}}, {{3, 1}, {5, 2}}, {{2, 1}}, {{4, 1}, {7, 1}}}) {
    const auto sig = OmegaSignature::from_arities(arities);
    const Series f = one_generator(sig, 48);
    for (std::size_t s = 2; s <= 6; ++s) {
      bool seen = false;
      for (std::size_t n = s; n <= 48; n += s) seen = seen || f[n] != 0;
      CHECK(seen == section_nonempty(sig, s));
    }
  }
}

TEST_CASE("submagma_generators") {
  const auto binary = OmegaSignature::binary();
  CHECK(submagma_generators(binary, 2, 8).generators == ints({0, 0, 1, 0, 4, 0, 32, 0, 320}));
  CHECK(submagma_generators(binary, 3, 9).generators == ints({0, 0, 0, 2, 0, 0, 38, 0, 0, 1262}));
  const Series sc = submagma_generators(OmegaSignature::super_catalan(), 2, 16).generators;
  const long expected[] = {1, 10, 174, 3730, 89158, 2278938, 60962718, 1685358882};
  for (std::size_t i = 0; i < 8; ++i) CHECK(sc[2 * (i + 1)] == expected[i]);
  CHECK(error_code([] { submagma_generators(OmegaSignature::from_arities({{3, 1}}), 2, 8); }) == Errc::EmptySection);

  const auto r = submagma_generators(binary, 1, 10);
  CHECK(r.section == one_generator(binary, 10));
  CHECK(r.generators == Series::variable(10));
}

TEST_CASE("submagma identities") {
  std::vector<OmegaSignature> sigs = {OmegaSignature::binary(), OmegaSignature::super_catalan(),
                                      OmegaSignature::from_arities({{2, 1}, {3, 2}}), OmegaSignature::from_arities({{3, 1}})};
  for (const auto& sig : sigs) {
    for (std::size_t s = 1; s <= 4; ++s) {
      if (!section_nonempty(sig, s)) continue;
      const std::size_t order = 24;
      const auto r = submagma_generators(sig, s, order);
      // p(g_S) - g_S + a = 0.
      CHECK(compose(sig.operation_series(order), r.section) - r.section + r.generators == Series(order));
      CHECK(r.generators.all_nonnegative_integers());
      for (std::size_t n = 0; n <= order; ++n) {
        if (n % s != 0) CHECK(r.generators[n] == 0);
      }
      // The submagma is free on a: generating from a reproduces the section.
      CHECK(section(magma_series(sig, GeneratorWeights(r.generators), order), s) == r.section);
    }
  }
}

TEST_CASE("even binary generators are 4^(n-1) c_n") {
  const Series a = submagma_generators(OmegaSignature::binary(), 2, 60).generators;
  for (std::size_t n = 1; 2 * n <= 60; ++n) {
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), 4, n - 1);
    CHECK(a[2 * n] == Rat(power * catalan_number(n)));
  }
}

TEST_CASE("branch_parity_ratio") {
  const auto ratios = branch_parity_ratio(100);
  REQUIRE(ratios.size() == 50);
  CHECK(ratios[0] == std::pair<std::size_t, Rat>{2, 1});
  CHECK(ratios[2] == std::pair<std::size_t, Rat>{6, make_rat(16, 21)});
  CHECK(std::fabs(ratios.back().second.get_d() - 0.707105) < 0.005);
  // The ratio decreases toward sqrt(2)/2.
  for (std::size_t i = 2; i < ratios.size(); ++i) CHECK(ratios[i].second < ratios[i - 1].second);
  CHECK(error_code([] { branch_parity_ratio(7); }) == Errc::BadParameter);
  CHECK(error_code([] { branch_parity_ratio(0); }) == Errc::BadParameter);
}

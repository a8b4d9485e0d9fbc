#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <tuple>

#include "hilbert/error.hpp"
#include "hilbert/growth.hpp"
#include "hilbert/monomial.hpp"
#include "support.hpp"

using namespace hilbert;
using namespace hilbert::monomial;
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

using LabeledEdge = std::tuple<Word, Word, unsigned>;

std::set<LabeledEdge> labeled_edges(const UfnGraph& g) {
  std::set<LabeledEdge> out;
  for (const auto& e : g.edges) out.emplace(g.vertices[e.from], g.vertices[e.to], e.letter);
  return out;
}

std::size_t count_normal_words(const MonomialPresentation& pres, std::size_t len) {
  std::size_t count = 0;
  Word w(len, 1);
  while (true) {
    if (pres.is_normal(w)) ++count;
    std::size_t i = 0;
    while (i < w.size() && w[i] == pres.alphabet_size()) w[i++] = 1;
    if (i == w.size()) break;
    ++w[i];
  }
  return count;
}

Rat partial_sum(const Series& s, std::size_t n) {
  Rat acc = 0;
  for (std::size_t i = 0; i <= n; ++i) acc += s[i];
  return acc;
}

}  // namespace

TEST_CASE("presentations normalize U to an antichain") {
  const MonomialPresentation p(2, {{1, 2, 1}, {2, 1}, {2, 1}, {1, 1, 2, 1, 1}});
  CHECK(p.forbidden() == std::vector<Word>{{2, 1}});
  CHECK(p.is_normal({1, 1, 2, 2}));
  CHECK_FALSE(p.is_normal({1, 2, 1}));
  CHECK(p.suffix_ok({2, 1, 2}));
  CHECK_FALSE(p.suffix_ok({1, 2, 1}));
  CHECK(MonomialPresentation(2, {}, {1, 3}).weight({1, 2, 2}) == 7);
  CHECK(error_code([] { MonomialPresentation(2, {{3}}); }) == Errc::Validation);
  CHECK(error_code([] { MonomialPresentation(2, {{}}); }) == Errc::Validation);
  CHECK(error_code([] { MonomialPresentation(0, {}); }) == Errc::Validation);
  CHECK(error_code([] { MonomialPresentation(2, {}, {1}); }) == Errc::Validation);
  CHECK(error_code([] { MonomialPresentation(2, {}, {1, 0}); }) == Errc::Validation);
}

TEST_CASE("normal_count") {
  CHECK(normal_count(MonomialPresentation(2, {{2, 2}}), 5) == ints({1, 2, 3, 5, 8, 13}));
  CHECK(normal_count(MonomialPresentation(2, {}), 3) == ints({1, 2, 4, 8}));
  CHECK(normal_count(MonomialPresentation(1, {{1, 1, 1}}), 5) == ints({1, 1, 1, 0, 0, 0}));
  // Weighted free algebra on generators of degree 1 and 2: 1/(1 - t - t^2).
  CHECK(normal_count(MonomialPresentation(2, {}, {1, 2}), 6) == ints({1, 1, 2, 3, 5, 8, 13}));
  CHECK(error_code([] { normal_count(MonomialPresentation(3, {{1, 2, 3, 1, 2}}), 12, 10); }) == Errc::ResourceLimit);
}

TEST_CASE("build_graph") {
  const UfnGraph fib = build_graph(MonomialPresentation(2, {{2, 2}}));
  CHECK(fib.k == 1);
  CHECK(fib.vertices == std::vector<Word>{{1}, {2}});
  CHECK(labeled_edges(fib) == std::set<LabeledEdge>{{{1}, {1}, 1}, {{1}, {2}, 2}, {{2}, {1}, 1}});

  const UfnGraph dead = build_graph(MonomialPresentation(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(dead.vertices.size() == 2);
  CHECK(dead.edges.empty());

  const UfnGraph cube = build_graph(MonomialPresentation(1, {{1, 1, 1}}));
  CHECK(cube.k == 2);
  CHECK(cube.vertices == std::vector<Word>{{1, 1}});
  CHECK(cube.edges.empty());

  const UfnGraph free2 = build_graph(MonomialPresentation(2, {}));
  CHECK(free2.k == 0);
  CHECK(free2.vertices.size() == 1);
  CHECK(free2.edges.size() == 2);

  const std::string dot = fib.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("v0 -> v1 [label=\"x2\"]") != std::string::npos);
}

TEST_CASE("hilbert_rational") {
  CHECK(hilbert_rational(MonomialPresentation(2, {{2, 2}})) == RationalFn(UniPoly{1, 1}, UniPoly{1, -1, -1}));
  CHECK(hilbert_rational(MonomialPresentation(2, {})) == RationalFn(UniPoly{1}, UniPoly{1, -2}));
  CHECK(hilbert_rational(MonomialPresentation(1, {{1, 1, 1}})) == RationalFn(UniPoly{1, 1, 1}));
  CHECK(hilbert_rational(MonomialPresentation(2, {{2, 1}})) == RationalFn(UniPoly{1}, UniPoly{1, -2, 1}));
  CHECK(hilbert_rational(MonomialPresentation(2, {}, {1, 2})) == RationalFn(UniPoly{1}, UniPoly{1, -1, -1}));
}

TEST_CASE("transfer matrix agrees with normal-word counting on random presentations") {
  Gen gen(91);
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialPresentation pres = gen.presentation(3, 4, 4, trial % 3 == 0);
    const std::size_t order = 20;
    CHECK(expand_rational(hilbert_rational(pres), order) == normal_count(pres, order));
    const UfnGraph g = build_graph(pres);
    CHECK(g.edges.size() == count_normal_words(pres, g.k + 1));
    CHECK(g.vertices.size() == count_normal_words(pres, g.k));
    for (const auto& e : g.edges) {
      Word w = g.vertices[e.from];
      w.push_back(e.letter);
      CHECK(pres.is_normal(w));
      CHECK(Word(w.begin() + 1, w.end()) == g.vertices[e.to]);
    }
  }
}

TEST_CASE("growth_classify") {
  CHECK(growth_classify(build_graph(MonomialPresentation(2, {{2, 2}}))).exponential);
  const GraphGrowth yx = growth_classify(build_graph(MonomialPresentation(2, {{2, 1}})));
  CHECK_FALSE(yx.exponential);
  CHECK(yx.gk_dim == 2);
  const GraphGrowth finite = growth_classify(build_graph(MonomialPresentation(1, {{1, 1, 1}})));
  CHECK_FALSE(finite.exponential);
  CHECK(finite.gk_dim == 0);
  // x^i y^j z^k.
  CHECK(growth_classify(build_graph(MonomialPresentation(3, {{2, 1}, {3, 1}, {3, 2}}))).gk_dim == 3);
  // Only alternating words survive: a single cycle x -> y -> x.
  CHECK(growth_classify(build_graph(MonomialPresentation(2, {{1, 1}, {2, 2}}))).gk_dim == 1);
}

TEST_CASE("graph growth agrees with the coefficient data") {
  Gen gen(101);
  std::size_t polynomial = 0;
  std::size_t exponential = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const MonomialPresentation pres = gen.presentation(3, 3, 6);
    const GraphGrowth g = growth_classify(build_graph(pres));
    const Series a = normal_count(pres, 60);
    if (g.exponential) {
      ++exponential;
      bool grows = false;
      for (std::size_t n = 16; n <= 30; ++n) {
        grows = grows || (a[n - 1] > 0 && a[n] > a[n - 1] * make_rat(1001, 1000));
      }
      CHECK(grows);
    } else {
      ++polynomial;
      // The pole order at t = 1 of the Hilbert series is the GK dimension.
      CHECK(growth::gk_from_rational(hilbert_rational(pres)) == g.gk_dim);
      // Partial sums grow like n^gk: doubling n multiplies them by about 2^gk.
      if (g.gk_dim > 0) {
        const double ratio = Rat(partial_sum(a, 60) / partial_sum(a, 30)).get_d();
        CHECK(std::log2(ratio) <= static_cast<double>(g.gk_dim) + 0.5);
        CHECK(std::log2(ratio) >= static_cast<double>(g.gk_dim) - 1.0);
      } else {
        CHECK(a[60] == 0);
      }
    }
  }
  CHECK(polynomial > 10);
  CHECK(exponential > 10);
}

TEST_CASE("borho_kraft_series") {
  CHECK(borho_kraft_series({0}, 4)[4] == 8);
  for (std::size_t n = 2; n <= 20; ++n) CHECK(borho_kraft_series({0}, 20)[n] == Rat(static_cast<long>(2 * n)));
  CHECK(borho_kraft_series({}, 15) == expand_rational(RationalFn(UniPoly{1}, UniPoly{1, -1}) +
                                                           RationalFn(UniPoly{0, 1}, UniPoly{1, -2, 1}), 15));
  CHECK(borho_kraft_series({1, 2}, 5)[5] == 11);
}

TEST_CASE("borho_kraft_series counts the listed basis words") {
  const std::set<std::size_t> s_set{0, 1, 3};
  const std::size_t order = 12;
  std::set<std::string> basis;
  auto xs = [](std::size_t k) { return std::string(k, 'x'); };
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; j <= order; ++j) {
      basis.insert(xs(i));
      basis.insert(xs(i) + "y" + xs(j));
      for (std::size_t s : s_set) basis.insert(xs(i) + "y" + xs(s) + "y" + xs(j));
    }
  }
  Series expected(order);
  for (const auto& w : basis) {
    if (w.size() <= order) expected[w.size()] += 1;
  }
  CHECK(borho_kraft_series(s_set, order) == expected);
}

TEST_CASE("borho_kraft_series equals its closed form for random S") {
  Gen gen(111);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = gen.natural_set(10);
    CHECK(borho_kraft_series(s, 25) == expand_rational(borho_kraft_rational(s), 25));
  }
}

TEST_CASE("finitely presented truncations of the Borho-Kraft algebra") {
  // Killing y x^k y for k outside S (k <= cut) and every word with three y's
  // built from S leaves the same normal words through degree cut + 2.
  const std::set<std::size_t> s_set{0, 2};
  const std::size_t cut = 8;
  std::vector<Word> forbidden;
  for (std::size_t k = 0; k <= cut; ++k) {
    if (s_set.count(k)) continue;
    Word w{2};
    w.insert(w.end(), k, 1);
    w.push_back(2);
    forbidden.push_back(w);
  }
  for (std::size_t a : s_set) {
    for (std::size_t b : s_set) {
      Word w{2};
      w.insert(w.end(), a, 1);
      w.push_back(2);
      w.insert(w.end(), b, 1);
      w.push_back(2);
      forbidden.push_back(w);
    }
  }
  const MonomialPresentation pres(2, forbidden);
  CHECK(expand_rational(hilbert_rational(pres), cut + 2) == borho_kraft_series(s_set, cut + 2));
  CHECK(normal_count(pres, cut + 2) == borho_kraft_series(s_set, cut + 2));
}

TEST_CASE("prescribed_check") {
  const std::size_t order = 20;
  Series ones(order);
  std::set<std::size_t> all;
  for (std::size_t n = 0; n <= order; ++n) {
    ones[n] = 1;
    all.insert(n);
  }
  CHECK(prescribed_check(ones, 1, 2, order) == borho_kraft_series(all, order));

  const UniPoly one_minus_2t{1, -2};
  CHECK(prescribed_check(Series(order), 2, 0, order) ==
        expand_rational(RationalFn(UniPoly{1}, one_minus_2t) + RationalFn(UniPoly{0, 1}, one_minus_2t.pow(2)), order));

  const UniPoly one_minus_t{1, -1};
  const RationalFn target = RationalFn(UniPoly{1}, one_minus_t) + RationalFn(UniPoly{0, 1}, one_minus_t.pow(2)) +
                            RationalFn(UniPoly{0, 0, 0, 1}, one_minus_t);
  CHECK(prescribed_check(Series::variable(order), 1, 1, order) == expand_rational(target, order));
  CHECK(prescribed_check(Series::variable(3), 1, 1, order).order() == 5);

  CHECK(error_code([] { prescribed_check(ints({0, 3}), 2, 1, 5); }) == Errc::CoefficientBoundViolated);
  CHECK(error_code([] { prescribed_check(ints({0, 1, 5}), 2, 1, 5); }) == Errc::CoefficientBoundViolated);
  CHECK(error_code([] { prescribed_check(ints({0, 1}), 2, 3, 5); }) == Errc::BadParameter);
  CHECK(error_code([] { prescribed_check(ints({0, 1}), 0, 1, 5); }) == Errc::BadParameter);
}

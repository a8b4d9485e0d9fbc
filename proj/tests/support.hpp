#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hilbert/monomial.hpp"
#include "hilbert/poly.hpp"
#include "hilbert/series.hpp"

namespace hilbert::testing {

/// Small deterministic generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rat rational(long bound = 9) {
    return make_rat(Int(integer(-bound, bound)), Int(integer(1, bound)));
  }

  Series series(std::size_t order, bool unit = false) {
    std::vector<Rat> c(order + 1);
    for (auto& x : c) x = rational();
    if (unit && c[0] == 0) c[0] = 1;
    return Series(std::move(c));
  }

  UniPoly poly(std::size_t max_degree, long bound = 5) {
    std::vector<Rat> c(index(0, max_degree) + 1);
    for (auto& x : c) x = Rat(integer(-bound, bound));
    return UniPoly(std::move(c));
  }

  /// Polynomial with constant term 1.
  UniPoly unit_poly(std::size_t max_degree, long bound = 3) {
    std::vector<Rat> c(index(1, max_degree) + 1);
    c[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = Rat(integer(-bound, bound));
    return UniPoly(std::move(c));
  }

  monomial::MonomialPresentation presentation(unsigned max_d, std::size_t max_len, std::size_t max_words,
                                              bool weighted = false) {
    const auto d = static_cast<unsigned>(index(1, max_d));
    std::vector<monomial::Word> words(index(1, max_words));
    for (auto& w : words) {
      w.resize(index(1, max_len));
      for (auto& letter : w) letter = static_cast<unsigned>(index(1, d));
    }
    std::vector<unsigned> weights;
    if (weighted) {
      for (unsigned i = 0; i < d; ++i) weights.push_back(static_cast<unsigned>(index(1, 3)));
    }
    return monomial::MonomialPresentation(d, std::move(words), std::move(weights));
  }

  std::set<std::size_t> natural_set(std::size_t max_element, double density = 0.3) {
    std::set<std::size_t> s;
    for (std::size_t x = 0; x <= max_element; ++x) {
      if (coin(density)) s.insert(x);
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline Series ints(std::initializer_list<long> values) { return Series::from_ints(values); }

}  // namespace hilbert::testing

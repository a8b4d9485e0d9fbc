#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "hilbert/rat.hpp"
#include "hilbert/rational_fn.hpp"
#include "hilbert/series.hpp"

namespace hilbert::monomial {

/// Letters are generator indices 1..d.
using Word = std::vector<unsigned>;

/// K<x_1..x_d> modulo a finite set U of forbidden words. On construction U is
/// deduplicated and reduced to an antichain under the factor order (words
/// containing another forbidden word as a factor are dropped).
class MonomialPresentation {
 public:
  /// `weights` defaults to all ones; each weight must be >= 1.
  MonomialPresentation(unsigned d, std::vector<Word> forbidden, std::vector<unsigned> weights = {});

  unsigned alphabet_size() const { return d_; }
  const std::vector<Word>& forbidden() const { return forbidden_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  std::size_t max_forbidden_length() const;

  /// True when w has no forbidden factor.
  bool is_normal(const Word& w) const;
  /// True when no forbidden word is a suffix of w.
  bool suffix_ok(const Word& w) const;
  std::size_t weight(const Word& w) const;

 private:
  unsigned d_;
  std::vector<Word> forbidden_;
  std::vector<unsigned> weights_;
};

/// Ufnarovskij graph: vertices are the normal words of length k (k + 1 is
/// the longest forbidden length, k = 0 for U empty) and an edge v1 -> v2
/// labelled x_i exists when v1 x_i = x_j v2 is normal.
struct UfnGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    unsigned letter;
  };
  std::size_t k = 0;
  std::vector<Word> vertices;
  std::vector<Edge> edges;

  std::string to_dot() const;
};

/// Counts normal words by weighted degree through a DP over suffix states
/// (the last k letters). Independent of the graph machinery; throws
/// ResourceLimit if the state space exceeds `state_limit`.
Series normal_count(const MonomialPresentation& pres, std::size_t order, std::size_t state_limit = 1'000'000);

UfnGraph build_graph(const MonomialPresentation& pres);

/// Hilbert series as a reduced rational function: the normal words shorter
/// than k plus the path series of the graph, the latter obtained as
/// c^T (I - A(t))^{-1} 1 from two Bareiss determinants over Q[t].
RationalFn hilbert_rational(const MonomialPresentation& pres);

struct GraphGrowth {
  bool exponential = false;
  /// Meaningful only for polynomial growth: the largest number of cycles on
  /// one directed path (0 for a finite-dimensional algebra).
  std::size_t gk_dim = 0;
};

/// Exponential iff two distinct cycles share a vertex (some strongly
/// connected component carries more edges than vertices).
GraphGrowth growth_classify(const UfnGraph& graph);

/// Counts {x^i, x^i y x^j, x^i y x^s y x^j : s in S} by total degree.
Series borho_kraft_series(const std::set<std::size_t>& s_set, std::size_t order);

/// 1/(1-t) + t/(1-t)^2 + a(t) t^2/(1-t)^2 with a(t) = sum_{s in S} t^s.
RationalFn borho_kraft_rational(const std::set<std::size_t>& s_set);

/// The profile 1/(1-dt) + t/(1-dt)^2 + t^2 a(t)/(1-dt)^p realized by a
/// (d+1)-generated monomial algebra whenever a_n <= d^n. Order is
/// min(order, a.order() + 2). Throws CoefficientBoundViolated or BadParameter.
Series prescribed_check(const Series& a, unsigned d, unsigned p, std::size_t order);

}  // namespace hilbert::monomial

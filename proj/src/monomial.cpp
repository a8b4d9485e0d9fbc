#include "hilbert/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hilbert/error.hpp"
#include "hilbert/linalg.hpp"

namespace hilbert::monomial {

namespace {

bool contains_factor(const Word& w, const Word& u) {
  if (u.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

std::string word_label(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (unsigned x : w) {
    if (!s.empty()) s += ".";
    s += "x" + std::to_string(x);
  }
  return s;
}

// All words of length `len` over 1..d in lexicographic order.
std::vector<Word> all_words(unsigned d, std::size_t len) {
  double estimate = 1;
  for (std::size_t i = 0; i < len; ++i) estimate *= d;
  if (estimate > 5e6) throw Error(Errc::ResourceLimit, "too many words of length " + std::to_string(len));
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * d);
    for (const auto& w : out) {
      for (unsigned x = 1; x <= d; ++x) {
        Word e = w;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

MonomialPresentation::MonomialPresentation(unsigned d, std::vector<Word> forbidden, std::vector<unsigned> weights)
    : d_(d), weights_(std::move(weights)) {
  if (d_ == 0) throw Error(Errc::Validation, "alphabet must have at least one letter");
  if (weights_.empty()) weights_.assign(d_, 1);
  if (weights_.size() != d_) throw Error(Errc::Validation, "need one weight per generator");
  for (unsigned w : weights_) {
    if (w == 0) throw Error(Errc::Validation, "generator weights must be >= 1");
  }
  for (const auto& w : forbidden) {
    if (w.empty()) throw Error(Errc::Validation, "forbidden words must be nonempty");
    for (unsigned x : w) {
      if (x < 1 || x > d_) throw Error(Errc::Validation, "letter " + std::to_string(x) + " outside 1.." + std::to_string(d_));
    }
  }
  std::sort(forbidden.begin(), forbidden.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  for (const auto& w : forbidden) {
    bool redundant = std::any_of(forbidden_.begin(), forbidden_.end(), [&](const Word& u) { return contains_factor(w, u); });
    if (!redundant) forbidden_.push_back(w);
  }
}

std::size_t MonomialPresentation::max_forbidden_length() const {
  std::size_t m = 0;
  for (const auto& w : forbidden_) m = std::max(m, w.size());
  return m;
}

bool MonomialPresentation::is_normal(const Word& w) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(), [&](const Word& u) { return contains_factor(w, u); });
}

bool MonomialPresentation::suffix_ok(const Word& w) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(), [&](const Word& u) {
    return u.size() <= w.size() && std::equal(u.rbegin(), u.rend(), w.rbegin());
  });
}

std::size_t MonomialPresentation::weight(const Word& w) const {
  std::size_t s = 0;
  for (unsigned x : w) s += weights_[x - 1];
  return s;
}

std::string UfnGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph ufnarovskij {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) out << "  v" << i << " [label=\"" << word_label(vertices[i]) << "\"];\n";
  for (const auto& e : edges) out << "  v" << e.from << " -> v" << e.to << " [label=\"x" << e.letter << "\"];\n";
  out << "}\n";
  return out.str();
}

Series normal_count(const MonomialPresentation& pres, std::size_t order, std::size_t state_limit) {
  const std::size_t keep = pres.max_forbidden_length() == 0 ? 0 : pres.max_forbidden_length() - 1;
  // layers[n]: suffix state -> number of normal words of weighted degree n ending in it.
  std::vector<std::map<Word, Int>> layers(order + 1);
  layers[0][Word{}] = 1;
  std::vector<Rat> counts(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (const auto& [state, count] : layers[n]) {
      counts[n] += Rat(count);
      for (unsigned x = 1; x <= pres.alphabet_size(); ++x) {
        const std::size_t next_degree = n + pres.weights()[x - 1];
        if (next_degree > order) continue;
        Word extended = state;
        extended.push_back(x);
        if (!pres.suffix_ok(extended)) continue;
        if (extended.size() > keep) extended.erase(extended.begin(), extended.end() - static_cast<std::ptrdiff_t>(keep));
        layers[next_degree][extended] += count;
        if (layers[next_degree].size() > state_limit) throw Error(Errc::ResourceLimit, "normal word DP state space too large");
      }
    }
    layers[n].clear();
  }
  return Series(std::move(counts));
}

UfnGraph build_graph(const MonomialPresentation& pres) {
  UfnGraph g;
  const std::size_t max_len = pres.max_forbidden_length();
  g.k = max_len == 0 ? 0 : max_len - 1;
  for (auto& w : all_words(pres.alphabet_size(), g.k)) {
    if (pres.is_normal(w)) g.vertices.push_back(std::move(w));
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (unsigned x = 1; x <= pres.alphabet_size(); ++x) {
      Word w = g.vertices[i];
      w.push_back(x);
      if (!pres.is_normal(w)) continue;
      Word tail(w.begin() + 1, w.end());
      g.edges.push_back({i, index.at(tail), x});
    }
  }
  return g;
}

RationalFn hilbert_rational(const MonomialPresentation& pres) {
  const UfnGraph g = build_graph(pres);
  UniPoly low;
  for (std::size_t len = 0; len < g.k; ++len) {
    for (const auto& w : all_words(pres.alphabet_size(), len)) {
      if (pres.is_normal(w)) low += UniPoly::monomial(1, pres.weight(w));
    }
  }
  const std::size_t v = g.vertices.size();
  if (v == 0) return RationalFn(low);

  // M = I - A(t); bordered = [[M, 1], [c^T, 0]] with c_v = t^{weight(v)}.
  Matrix<UniPoly> m(v, std::vector<UniPoly>(v));
  for (std::size_t i = 0; i < v; ++i) m[i][i] = UniPoly::constant(1);
  for (const auto& e : g.edges) m[e.from][e.to] -= UniPoly::monomial(1, pres.weights()[e.letter - 1]);
  Matrix<UniPoly> bordered = m;
  for (std::size_t i = 0; i < v; ++i) bordered[i].push_back(UniPoly::constant(1));
  std::vector<UniPoly> last;
  for (const auto& w : g.vertices) last.push_back(UniPoly::monomial(1, pres.weight(w)));
  last.emplace_back();
  bordered.push_back(std::move(last));

  const UniPoly one = UniPoly::constant(1);
  const UniPoly det_m = bareiss_determinant(m, one);
  const UniPoly det_b = bareiss_determinant(std::move(bordered), one);
  return RationalFn(low) + RationalFn(-det_b, det_m);
}

GraphGrowth growth_classify(const UfnGraph& graph) {
  const std::size_t n = graph.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : graph.edges) adj[e.from].push_back(e.to);

  // Tarjan's strongly connected components.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int counter = 0;
  int comps = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    index[u] = low[u] = counter++;
    stack.push_back(u);
    on_stack[u] = true;
    for (std::size_t w : adj[u]) {
      if (index[w] < 0) {
        visit(w);
        low[u] = std::min(low[u], low[w]);
      } else if (on_stack[w]) {
        low[u] = std::min(low[u], index[w]);
      }
    }
    if (low[u] == index[u]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comps;
      } while (w != u);
      ++comps;
    }
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (index[u] < 0) visit(u);
  }

  std::vector<std::size_t> size(static_cast<std::size_t>(comps), 0), internal(static_cast<std::size_t>(comps), 0);
  for (std::size_t u = 0; u < n; ++u) ++size[static_cast<std::size_t>(comp[u])];
  std::vector<std::set<std::size_t>> dag(static_cast<std::size_t>(comps));
  for (const auto& e : graph.edges) {
    auto a = static_cast<std::size_t>(comp[e.from]);
    auto b = static_cast<std::size_t>(comp[e.to]);
    if (a == b) {
      ++internal[a];
    } else {
      dag[a].insert(b);
    }
  }
  GraphGrowth result;
  for (std::size_t c = 0; c < size.size(); ++c) {
    if (internal[c] > size[c]) {
      result.exponential = true;
      return result;
    }
  }
  // Tarjan numbers components in reverse topological order: successors first.
  std::vector<std::size_t> best(size.size(), 0);
  for (std::size_t c = 0; c < size.size(); ++c) {
    std::size_t tail = 0;
    for (std::size_t d : dag[c]) tail = std::max(tail, best[d]);
    best[c] = tail + (internal[c] > 0 ? 1 : 0);
    result.gk_dim = std::max(result.gk_dim, best[c]);
  }
  return result;
}

Series borho_kraft_series(const std::set<std::size_t>& s_set, std::size_t order) {
  std::vector<Rat> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    c[i] += 1;  // x^i
    for (std::size_t j = 0; i + j + 1 <= order; ++j) {
      c[i + j + 1] += 1;  // x^i y x^j
      for (std::size_t s : s_set) {
        if (i + j + s + 2 <= order) c[i + j + s + 2] += 1;  // x^i y x^s y x^j
      }
    }
  }
  return Series(std::move(c));
}

RationalFn borho_kraft_rational(const std::set<std::size_t>& s_set) {
  UniPoly a;
  for (std::size_t s : s_set) a += UniPoly::monomial(1, s);
  const UniPoly one_minus_t{1, -1};
  const UniPoly sq = one_minus_t * one_minus_t;
  return RationalFn(UniPoly{1}, one_minus_t) + RationalFn(UniPoly{0, 1}, sq) + RationalFn(a * UniPoly{0, 0, 1}, sq);
}

Series prescribed_check(const Series& a, unsigned d, unsigned p, std::size_t order) {
  if (d == 0) throw Error(Errc::BadParameter, "d must be a positive integer");
  if (p > 2) throw Error(Errc::BadParameter, "p must be 0, 1 or 2");
  const std::size_t n = std::min(order, a.order() + 2);
  Int bound = 1;
  for (std::size_t i = 0; i <= std::min(n, a.order()); ++i) {
    if (a[i] < 0 || !is_integer(a[i]) || a[i] > Rat(bound)) {
      throw Error(Errc::CoefficientBoundViolated,
                  "a_" + std::to_string(i) + " = " + to_string(a[i]) + " is not a natural number <= d^" + std::to_string(i));
    }
    bound *= d;
  }
  const UniPoly one_minus_dt{1, -static_cast<long>(d)};
  Series h = expand_rational(RationalFn(UniPoly{1}, one_minus_dt), n) +
             expand_rational(RationalFn(UniPoly{0, 1}, one_minus_dt.pow(2)), n);
  const Series tail = expand_rational(RationalFn(UniPoly{1}, one_minus_dt.pow(p)), n);
  const Series shifted_a = a.truncated(n).shifted_up(2).truncated(n);
  return h + shifted_a * tail;
}

}  // namespace hilbert::monomial

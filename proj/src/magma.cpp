#include "hilbert/magma.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert::magma {

OmegaSignature OmegaSignature::from_arities(std::map<std::size_t, Int> arity_counts) {
  bool any = false;
  OmegaSignature sig;
  for (auto& [n, count] : arity_counts) {
    if (n < 2) throw Error(Errc::Validation, "operation arity " + std::to_string(n) + " must be >= 2");
    if (count < 0) throw Error(Errc::Validation, "negative operation count");
    if (count == 0) continue;
    any = true;
    sig.arity_counts_.emplace(n, count);
  }
  if (!any) throw Error(Errc::Validation, "signature has no operations");
  return sig;
}

OmegaSignature OmegaSignature::from_closed_form(RationalFn p, std::size_t check_order) {
  const Series s = expand_rational(p, check_order);
  if (s[0] != 0 || (check_order >= 1 && s[1] != 0)) {
    throw Error(Errc::Validation, "operation series " + p.to_string() + " must have valuation >= 2");
  }
  if (!s.all_nonnegative_integers()) {
    throw Error(Errc::Validation, "operation series " + p.to_string() + " has a non-natural coefficient");
  }
  if (!s.valuation()) throw Error(Errc::Validation, "operation series is zero");
  OmegaSignature sig;
  sig.closed_form_ = std::move(p);
  return sig;
}

OmegaSignature OmegaSignature::binary() { return from_arities({{2, 1}}); }

OmegaSignature OmegaSignature::super_catalan() {
  return from_closed_form(RationalFn(UniPoly{0, 0, 1}, UniPoly{1, -1}));
}

Series OmegaSignature::operation_series(std::size_t order) const {
  if (closed_form_) return expand_rational(*closed_form_, order);
  Series s(order);
  for (const auto& [n, count] : arity_counts_) {
    if (n <= order) s[n] = Rat(count);
  }
  return s;
}

std::map<std::size_t, Int> OmegaSignature::arities_up_to(std::size_t max_arity) const {
  std::map<std::size_t, Int> out;
  const Series s = operation_series(max_arity);
  for (std::size_t n = 2; n <= max_arity; ++n) {
    if (s[n] != 0) out.emplace(n, s[n].get_num());
  }
  return out;
}

GeneratorWeights::GeneratorWeights(Series a) : a_(std::move(a)) {
  if (a_[0] != 0) throw Error(Errc::Validation, "generator series must vanish at t=0");
  if (!a_.all_nonnegative_integers()) throw Error(Errc::Validation, "generator counts must be natural numbers");
}

GeneratorWeights GeneratorWeights::single(std::size_t order) { return GeneratorWeights(Series::variable(order)); }

Series magma_series(const OmegaSignature& sig, const GeneratorWeights& gens, std::size_t order) {
  const Series p = sig.operation_series(order);
  const Series& a = gens.series();
  // powers[k][n] = [t^n] f^k. Because f(0) = 0 and p has valuation >= 2,
  // [t^n] p(f) only involves f_1..f_{n-1}.
  std::vector<std::vector<Rat>> powers(order + 1, std::vector<Rat>(order + 1));
  std::vector<Rat> f(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    Rat pf = 0;
    for (std::size_t k = 2; k <= n; ++k) {
      Rat acc = 0;
      for (std::size_t i = 1; i + k - 1 <= n; ++i) {
        if (f[i] != 0 && powers[k - 1][n - i] != 0) acc += f[i] * powers[k - 1][n - i];
      }
      powers[k][n] = acc;
      if (p[k] != 0) pf += p[k] * acc;
    }
    f[n] = (n <= a.order() ? a[n] : Rat(0)) + pf;
    powers[1][n] = f[n];
  }
  return Series(std::move(f)).truncated(std::min(order, a.order()));
}

Int brute_force_count(const OmegaSignature& sig, std::size_t n, const Int& limit) {
  if (n == 0) return 0;
  const auto arities = sig.arities_up_to(n);
  std::vector<std::optional<Int>> trees(n + 1);

  auto check = [&limit](const Int& v) {
    if (v > limit) throw Error(Errc::ResourceLimit, "tree count exceeds the configured limit " + limit.get_str());
  };

  std::function<Int(std::size_t)> count_trees;
  // Walks every composition of `leaves` into `parts` positive parts, one
  // subtree at a time, multiplying the numbers of subtree shapes.
  std::function<Int(std::size_t, std::size_t)> forests = [&](std::size_t parts, std::size_t leaves) -> Int {
    if (parts == 0) return leaves == 0 ? Int(1) : Int(0);
    if (leaves < parts) return 0;
    Int total = 0;
    for (std::size_t first = 1; first + (parts - 1) <= leaves; ++first) {
      const Int head = count_trees(first);
      if (head == 0) continue;
      total += head * forests(parts - 1, leaves - first);
      check(total);
    }
    return total;
  };
  count_trees = [&](std::size_t leaves) -> Int {
    if (trees[leaves]) return *trees[leaves];
    Int total = leaves == 1 ? Int(1) : Int(0);
    for (const auto& [arity, ops] : arities) {
      if (arity > leaves) break;
      total += ops * forests(arity, leaves);
      check(total);
    }
    trees[leaves] = total;
    return total;
  };
  return count_trees(n);
}

bool section_nonempty(const OmegaSignature& sig, std::size_t s) {
  if (s == 0) throw Error(Errc::BadParameter, "section step must be >= 1");
  std::size_t d = 0;
  const std::size_t horizon = sig.closed_form() ? 64 : sig.arity_counts().rbegin()->first;
  for (const auto& [n, count] : sig.arities_up_to(horizon)) d = std::gcd(d, n - 1);
  return std::gcd(d, s) == 1;
}

SubmagmaGenerators submagma_generators(const OmegaSignature& sig, std::size_t s, std::size_t order) {
  if (!section_nonempty(sig, s)) {
    throw Error(Errc::EmptySection, "no element has degree divisible by " + std::to_string(s));
  }
  const Series g = section(magma_series(sig, GeneratorWeights::single(order), order), s);
  const Series a = g - compose(sig.operation_series(order), g);
  return {g, a};
}

std::vector<std::pair<std::size_t, Rat>> branch_parity_ratio(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw Error(Errc::BadParameter, "branch_parity_ratio needs an even order >= 2");
  const auto gens = submagma_generators(OmegaSignature::binary(), 2, order);
  const Series c = magma_series(OmegaSignature::binary(), GeneratorWeights::single(order), order);
  std::vector<std::pair<std::size_t, Rat>> out;
  for (std::size_t n = 2; n <= order; n += 2) out.emplace_back(n, gens.generators[n] / c[n]);
  return out;
}

}  // namespace hilbert::magma

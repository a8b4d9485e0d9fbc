#include "hilbert/algebraic.hpp"

#include <string>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/linalg.hpp"

namespace hilbert {

namespace {

BiPoly derivative_z(const BiPoly& p) {
  BiPoly d;
  for (const auto& [e, c] : p.terms()) {
    if (e.z > 0) d += BiPoly::term(c * Rat(static_cast<long>(e.z)), e.t, e.z - 1);
  }
  return d;
}

std::vector<BiPoly> z_coefficients(const BiPoly& p) {
  std::vector<BiPoly> out(static_cast<std::size_t>(p.degree_z() + 1));
  for (const auto& [e, c] : p.terms()) out[e.z] += BiPoly::term(c, e.t, 0);
  return out;
}

}  // namespace

BiPoly shift_transform(const BiPoly& b) {
  return substitute(b, BiPoly::z(), BiPoly::z() - BiPoly::t()).normalized();
}

BiPoly substitute_case2(const BiPoly& q, const UniPoly& p) {
  if (p[0] != 0 || p[1] != 0) {
    throw Error(Errc::BadOperationPolynomial, "operation series " + p.to_string() + " must have valuation >= 2");
  }
  return substitute(q, BiPoly::t(), BiPoly::z() - BiPoly::in_z(p)).normalized();
}

BiPoly sylvester_resultant(const std::vector<BiPoly>& a_coeffs, const std::vector<BiPoly>& b_coeffs) {
  std::vector<BiPoly> a = a_coeffs;
  std::vector<BiPoly> b = b_coeffs;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  while (!b.empty() && b.back().is_zero()) b.pop_back();
  if (a.empty() || b.empty()) throw Error(Errc::ZeroPolynomial, "resultant of a zero polynomial");
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return BiPoly::constant(1);
  Matrix<BiPoly> s(size, std::vector<BiPoly>(size));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[i][i + (m - k)] = a[k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + (n - k)] = b[k];
  }
  return bareiss_determinant(std::move(s), BiPoly::constant(1));
}

BiPoly resultant_case3(const BiPoly& q, const BiPoly& b) {
  if (q.is_zero() || b.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant inputs must be nonzero");
  if (q.degree_z() < 1) throw Error(Errc::BadParameter, "q must have positive degree in z");
  // b(u, u - z) with u held in the t slot while z is eliminated.
  const BiPoly shifted = substitute(b, BiPoly::t(), BiPoly::t() - BiPoly::z());

  std::vector<BiPoly> q_coeffs = z_coefficients(q);
  std::vector<BiPoly> b_coeffs;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(shifted.degree_z()); ++k) {
    b_coeffs.push_back(BiPoly::in_z(shifted.coeff_of_z(k)));
  }
  BiPoly r = sylvester_resultant(q_coeffs, b_coeffs);
  if (r.is_zero()) return r;
  return r.normalized();
}

Series series_root(const BiPoly& p, std::size_t order, const Series& seed) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "series_root of the zero polynomial");
  if (seed[0] != 0) throw Error(Errc::NonzeroConstantTerm, "branch seed must vanish at t=0");
  const std::size_t m = seed.order();
  if (evaluate(p, seed).valuation()) {
    throw Error(Errc::NoSeriesBranch, "seed does not satisfy " + p.to_string() + " through order " + std::to_string(m));
  }
  const Series slope = evaluate(derivative_z(p), seed);
  const auto v = slope.valuation();
  if (!v) {
    throw Error(Errc::AmbiguousBranch,
                "dP/dz vanishes along the seed through order " + std::to_string(m) + "; extend the seed");
  }
  if (order <= m) return seed.truncated(order);

  const Rat inv_lead = Rat(1) / slope[*v];
  std::vector<Rat> g(order + *v + 1);
  for (std::size_t i = 0; i <= m; ++i) g[i] = seed[i];
  for (std::size_t n = m + 1; n <= order; ++n) {
    const std::size_t target = n + *v;
    Series probe(std::vector<Rat>(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(target) + 1));
    g[n] = -evaluate(p, probe)[target] * inv_lead;
  }
  // Coefficients of P(t, g) through order + v depend only on g_0..g_order.
  if (auto bad = evaluate(p, Series(g)).valuation()) {
    throw Error(Errc::NoSeriesBranch, "no series root extends the seed (residual at t^" + std::to_string(*bad) + ")");
  }
  g.resize(order + 1);
  return Series(std::move(g));
}

}  // namespace hilbert

#include "hilbert/bipoly.hpp"

#include <algorithm>
#include <vector>

#include "hilbert/error.hpp"

namespace hilbert {

BiPoly::BiPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, c);
  }
}

BiPoly BiPoly::constant(const Rat& c) { return term(c, 0, 0); }

BiPoly BiPoly::term(const Rat& c, std::size_t t_deg, std::size_t z_deg) {
  BiPoly p;
  p.add_term({t_deg, z_deg}, c);
  return p;
}

BiPoly BiPoly::in_t(const UniPoly& p) {
  BiPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term({i, 0}, p.coeffs()[i]);
  return r;
}

BiPoly BiPoly::in_z(const UniPoly& p) {
  BiPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term({0, i}, p.coeffs()[i]);
  return r;
}

void BiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rat BiPoly::coeff(std::size_t t_deg, std::size_t z_deg) const {
  auto it = terms_.find({t_deg, z_deg});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::degree_z() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.z));
  return d;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.t));
  return d;
}

UniPoly BiPoly::coeff_of_z(std::size_t j) const {
  std::vector<Rat> v;
  for (const auto& [e, c] : terms_) {
    if (e.z != j) continue;
    if (v.size() <= e.t) v.resize(e.t + 1);
    v[e.t] = c;
  }
  return UniPoly(std::move(v));
}

BiPoly::Exponent BiPoly::leading_exponent() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "zero polynomial has no leading term");
  Exponent best = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    if (e.z > best.z || (e.z == best.z && e.t > best.t)) best = e;
  }
  return best;
}

BiPoly BiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Int den_lcm = 1;
  for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, c.get_den());
  Int num_gcd = 0;
  for (const auto& [e, c] : terms_) num_gcd = gcd(num_gcd, Int(c.get_num() * (den_lcm / c.get_den())));
  Rat scale = make_rat(den_lcm, num_gcd);
  if (coeff(leading_exponent().t, leading_exponent().z) < 0) scale = -scale;
  return *this * scale;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.t + eb.t, ea.z + eb.z}, ca * cb);
  }
  return r;
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly result = constant(1);
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

std::string BiPoly::to_string(char t_var, char z_var) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rat>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return x.first.z != y.first.z ? x.first.z > y.first.z : x.first.t > y.first.t;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    Rat mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool bare = e.t == 0 && e.z == 0;
    if (mag != 1 || bare) out += is_integer(mag) || bare ? hilbert::to_string(mag) : "(" + hilbert::to_string(mag) + ")";
    if (e.t > 0) {
      out += t_var;
      if (e.t > 1) out += "^" + std::to_string(e.t);
    }
    if (e.z > 0) {
      out += z_var;
      if (e.z > 1) out += "^" + std::to_string(e.z);
    }
  }
  return out;
}

BiPoly exact_quotient(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "bivariate division by zero");
  const auto lb = b.leading_exponent();
  const Rat lc = b.coeff(lb.t, lb.z);
  BiPoly rem = a;
  BiPoly quo;
  while (!rem.is_zero()) {
    const auto lr = rem.leading_exponent();
    if (lr.t < lb.t || lr.z < lb.z) throw Error(Errc::Validation, "inexact bivariate division");
    BiPoly step = BiPoly::term(rem.coeff(lr.t, lr.z) / lc, lr.t - lb.t, lr.z - lb.z);
    rem -= step * b;
    quo += step;
  }
  return quo;
}

BiPoly substitute(const BiPoly& p, const BiPoly& t_image, const BiPoly& z_image) {
  const int dt = p.degree_t();
  const int dz = p.degree_z();
  if (dt < 0) return {};
  std::vector<BiPoly> t_pow{BiPoly::constant(1)};
  std::vector<BiPoly> z_pow{BiPoly::constant(1)};
  for (int i = 0; i < dt; ++i) t_pow.push_back(t_pow.back() * t_image);
  for (int j = 0; j < dz; ++j) z_pow.push_back(z_pow.back() * z_image);
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r += c * (t_pow[e.t] * z_pow[e.z]);
  return r;
}

Series evaluate(const BiPoly& p, const Series& f) {
  const std::size_t order = f.order();
  const int dz = p.degree_z();
  Series acc(order);
  if (dz < 0) return acc;
  // Horner in z with polynomial-in-t coefficients.
  for (int j = dz; j >= 0; --j) {
    acc = acc * f;
    acc += Series::from_poly(p.coeff_of_z(static_cast<std::size_t>(j)), order);
  }
  return acc;
}

}  // namespace hilbert

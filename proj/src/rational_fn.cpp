#include "hilbert/rational_fn.hpp"

#include "hilbert/error.hpp"

namespace hilbert {

RationalFn::RationalFn(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw Error(Errc::ZeroPolynomial, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = gcd(num, den);
  num = exact_quotient(num, g);
  den = exact_quotient(den, g);
  const Rat d0 = den[0];
  if (d0 == 0) throw Error(Errc::PoleAtOrigin, "denominator " + den.to_string() + " vanishes at t=0");
  const Rat scale = Rat(1) / d0;
  num_ = num * scale;
  den_ = den * scale;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num_.is_zero()) throw Error(Errc::DivisionByNonUnit, "division by the zero function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn operator*(const Rat& c, const RationalFn& a) { return RationalFn(a.num_ * c, a.den_); }

std::string RationalFn::to_string() const {
  const bool unit_den = den_ == UniPoly::constant(1);
  std::string n = num_.to_string();
  if (unit_den) return n;
  auto wrap = [](const UniPoly& p, std::string s) {
    int terms = 0;
    for (const auto& c : p.coeffs()) terms += c != 0;
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_, n) + "/" + wrap(den_, den_.to_string());
}

}  // namespace hilbert

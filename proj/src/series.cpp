#include "hilbert/series.hpp"

#include <algorithm>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

Series Series::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Series(std::move(v));
}

Series Series::from_poly(const UniPoly& p, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) s.coeffs_[i] = p.coeffs()[i];
  return s;
}

Series Series::one(std::size_t order) {
  Series s(order);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

Series Series::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

Series Series::shifted_up(std::size_t k) const {
  std::vector<Rat> v(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return Series(std::move(v));
}

Series Series::shifted_down(std::size_t k) const {
  if (k > order()) throw Error(Errc::InsufficientOrder, "cannot divide a series of order " +
                                                          std::to_string(order()) + " by t^" + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (coeffs_[i] != 0) throw Error(Errc::DivisionByNonUnit, "series not divisible by t^" + std::to_string(k));
  }
  return Series(std::vector<Rat>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Series& Series::operator+=(const Series& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rat> r(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rat& x = a.coeffs_[i];
    if (x == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j] != 0) r[i + j] += x * b.coeffs_[j];
    }
  }
  return Series(std::move(r));
}

Series operator/(const Series& a, const Series& b) {
  if (b.coeffs_[0] == 0) throw Error(Errc::DivisionByNonUnit, "divisor has zero constant term");
  const std::size_t n = std::min(a.order(), b.order());
  const Rat inv = Rat(1) / b.coeffs_[0];
  std::vector<Rat> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat acc = a.coeffs_[k];
    for (std::size_t i = 1; i <= k; ++i) {
      if (b.coeffs_[i] != 0) acc -= b.coeffs_[i] * q[k - i];
    }
    q[k] = acc * inv;
  }
  return Series(std::move(q));
}

bool Series::all_nonnegative_integers() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c >= 0 && is_integer(c); });
}

Series series_arith(const Series& a, const Series& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(Errc::UnknownKind, "arithmetic operation");
}

Series compose(const Series& f, const Series& g) {
  if (g[0] != 0) throw Error(Errc::NonzeroConstantTerm, "inner series of a composition must vanish at 0");
  const std::size_t n = std::min(f.order(), g.order());
  const Series inner = g.truncated(n);
  Series acc(n);
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = acc * inner;
    acc[0] += f[k];
  }
  return acc;
}

Series sqrt_one_plus(const Series& f) {
  if (f[0] != 0) throw Error(Errc::NonzeroConstantTerm, "sqrt_one_plus needs f(0) = 0");
  const std::size_t n = f.order();
  std::vector<Rat> s(n + 1);
  s[0] = 1;
  const Rat half(1, 2);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat acc = f[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc * half;
  }
  return Series(std::move(s));
}

Series expand_rational(const RationalFn& rf, std::size_t order) {
  const UniPoly& den = rf.den();
  if (den[0] == 0) throw Error(Errc::PoleAtOrigin, "denominator vanishes at t=0");
  const Rat inv = Rat(1) / den[0];
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  std::vector<Rat> a(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rat acc = rf.num()[n];
    for (std::size_t i = 1; i <= std::min(n, dd); ++i) {
      if (den.coeffs()[i] != 0) acc -= den.coeffs()[i] * a[n - i];
    }
    a[n] = acc * inv;
  }
  return Series(std::move(a));
}

Series section(const Series& f, std::size_t s) {
  if (s == 0) throw Error(Errc::BadParameter, "section step must be >= 1");
  Series r(f.order());
  for (std::size_t n = 0; n <= f.order(); n += s) r[n] = f[n];
  return r;
}

Series catalan(std::size_t order) {
  Series minus_four_t(order);
  if (order >= 1) minus_four_t[1] = -4;
  Series c = Series::one(order) - sqrt_one_plus(minus_four_t);
  return c * Rat(1, 2);
}

NamedSeries parse_named_series(std::string_view name) {
  if (name == "euler_partitions") return NamedSeries::EulerPartitions;
  if (name == "distinct_parts") return NamedSeries::DistinctParts;
  if (name == "smith") return NamedSeries::Smith;
  if (name == "shearer_p") return NamedSeries::ShearerP;
  if (name == "shearer_rho") return NamedSeries::ShearerRho;
  if (name == "ufnarovskij_UL") return NamedSeries::UfnarovskijUL;
  throw Error(Errc::UnknownKind, "named series '" + std::string(name) + "'");
}

namespace {

// In-place multiplication by 1/(1 - t^m).
void times_geometric(std::vector<Rat>& c, std::size_t m) {
  for (std::size_t k = m; k < c.size(); ++k) c[k] += c[k - m];
}

// In-place multiplication by (1 + t^m).
void times_binomial(std::vector<Rat>& c, std::size_t m) {
  for (std::size_t k = c.size(); k-- > m;) c[k] += c[k - m];
}

}  // namespace

Series named_series(NamedSeries kind, std::size_t order) {
  std::vector<Rat> c(order + 1);
  c[0] = 1;
  const bool distinct = kind == NamedSeries::DistinctParts || kind == NamedSeries::ShearerRho;
  for (std::size_t m = 1; m <= order; ++m) {
    if (distinct) {
      times_binomial(c, m);
    } else {
      times_geometric(c, m);
    }
  }
  switch (kind) {
    case NamedSeries::Smith:
      times_geometric(c, 1);
      break;
    case NamedSeries::ShearerP:
    case NamedSeries::ShearerRho:
      times_geometric(c, 1);
      times_geometric(c, 2);
      break;
    default:
      break;
  }
  return Series(std::move(c));
}

LacunaryKind parse_lacunary_kind(std::string_view name) {
  if (name == "powers") return LacunaryKind::Powers;
  if (name == "factorials") return LacunaryKind::Factorials;
  throw Error(Errc::UnknownKind, "lacunary kind '" + std::string(name) + "'");
}

Series lacunary(LacunaryKind kind, unsigned long d, std::size_t order) {
  Series s(order);
  if (kind == LacunaryKind::Powers) {
    if (d < 2) throw Error(Errc::BadParameter, "lacunary powers need d >= 2");
    for (std::size_t e = 1; e <= order; e *= d) {
      s[e] = 1;
      if (e > order / d) break;
    }
  } else {
    std::size_t f = 1;
    for (std::size_t n = 1; f <= order; ++n) {
      s[f] = 1;
      if (f > order / (n + 1)) break;
      f *= n + 1;
    }
  }
  return s;
}

}  // namespace hilbert

#include "hilbert/invariants.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hilbert/error.hpp"
#include "hilbert/linalg.hpp"
#include "hilbert/poly.hpp"

namespace hilbert::invariants {

SqMatrix::SqMatrix(std::size_t size, std::vector<Rat> entries) : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) throw Error(Errc::Validation, "matrix entry count does not match its size");
}

SqMatrix SqMatrix::identity(std::size_t size) {
  SqMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

SqMatrix SqMatrix::permutation(const std::vector<std::size_t>& perm) {
  SqMatrix m(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

Rat SqMatrix::trace() const {
  Rat s = 0;
  for (std::size_t i = 0; i < size_; ++i) s += (*this)(i, i);
  return s;
}

Rat SqMatrix::determinant() const {
  Matrix<Rat> m(size_, std::vector<Rat>(size_));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) m[i][j] = (*this)(i, j);
  }
  return bareiss_determinant(std::move(m), Rat(1));
}

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  if (a.size_ != b.size_) throw Error(Errc::Validation, "matrix size mismatch");
  SqMatrix c(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    for (std::size_t k = 0; k < a.size_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.size_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

MatrixGroup::MatrixGroup(std::vector<SqMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(Errc::Validation, "a group has at least one element");
  const std::size_t d = elements_.front().size();
  std::set<SqMatrix> members;
  for (const auto& g : elements_) {
    if (g.size() != d) throw Error(Errc::Validation, "group elements have different sizes");
    members.insert(g);
  }
  if (!members.contains(SqMatrix::identity(d))) throw Error(Errc::Validation, "group lacks the identity");
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!members.contains(a * b)) throw Error(Errc::Validation, "element list is not closed under products");
    }
  }
}

MatrixGroup group_closure(const std::vector<SqMatrix>& gens, std::size_t max_order) {
  if (gens.empty()) throw Error(Errc::Validation, "need at least one generator");
  const std::size_t d = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != d) throw Error(Errc::Validation, "generators have different sizes");
    if (g.determinant() == 0) throw Error(Errc::NotInvertible, "generator is singular");
  }
  std::vector<SqMatrix> elements{SqMatrix::identity(d)};
  std::set<SqMatrix> seen{elements.front()};
  std::deque<SqMatrix> work{elements.front()};
  while (!work.empty()) {
    SqMatrix x = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      SqMatrix y = x * g;
      if (seen.contains(y)) continue;
      if (elements.size() == max_order) {
        throw Error(Errc::OrderExceeded, "group order exceeds " + std::to_string(max_order));
      }
      seen.insert(y);
      elements.push_back(y);
      work.push_back(std::move(y));
    }
  }
  return MatrixGroup(std::move(elements));
}

MatrixGroup named_group(std::string_view name) {
  if (name == "S2") return group_closure({SqMatrix::permutation({1, 0})});
  // x1 -> x2 -> x3 -> x1.
  if (name == "C3") return group_closure({SqMatrix::permutation({1, 2, 0})});
  throw Error(Errc::UnknownKind, "named group '" + std::string(name) + "'");
}

namespace {

UniPoly det_one_minus_tg(const SqMatrix& g) {
  const std::size_t d = g.size();
  Matrix<UniPoly> m(d, std::vector<UniPoly>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = UniPoly::monomial(-g(i, j), 1) + UniPoly::constant(i == j ? 1 : 0);
  }
  return bareiss_determinant(std::move(m), UniPoly::constant(1));
}

template <class DenFn>
AveragedSeries average(const MatrixGroup& g, std::size_t order, DenFn den_of) {
  Series sum(order);
  RationalFn total;
  for (const auto& x : g.elements()) {
    RationalFn term(UniPoly{1}, den_of(x));
    sum += expand_rational(term, order);
    total = total + term;
  }
  const Rat inv(1, static_cast<long>(g.order()));
  return {sum * inv, inv * total};
}

}  // namespace

AveragedSeries molien_commutative(const MatrixGroup& g, std::size_t order) {
  return average(g, order, det_one_minus_tg);
}

AveragedSeries dicks_formanek(const MatrixGroup& g, std::size_t order) {
  return average(g, order, [](const SqMatrix& x) { return UniPoly::constant(1) + UniPoly::monomial(-x.trace(), 1); });
}

FreeGenerators free_generator_series(const Series& h) {
  if (h[0] != 1) throw Error(Errc::ConstantTermNotOne, "Hilbert series must start with 1");
  Series a = Series::one(h.order()) - Series::one(h.order()) / h;
  const bool natural = a.all_nonnegative_integers();
  return {std::move(a), natural};
}

ClosedForm parse_closed_form(std::string_view name) {
  if (name == "sl2_assoc") return ClosedForm::Sl2Assoc;
  if (name == "ut2_assoc") return ClosedForm::Ut2Assoc;
  if (name == "sl2_assoc_gens") return ClosedForm::Sl2AssocGens;
  if (name == "ut2_assoc_gens") return ClosedForm::Ut2AssocGens;
  throw Error(Errc::UnknownKind, "closed form '" + std::string(name) + "'");
}

Series closed_form_series(ClosedForm kind, std::size_t order) {
  // r = sqrt(1 - 4t^2), carried two orders further to absorb the divisions by t^2.
  const std::size_t work = order + 2;
  Series minus_four_t2(work);
  if (work >= 2) minus_four_t2[2] = -4;
  const Series r = sqrt_one_plus(minus_four_t2);
  const Series one_minus_r = Series::one(work) - r;  // 2t^2 + 2t^4 + ...

  if (kind == ClosedForm::Sl2Assoc || kind == ClosedForm::Sl2AssocGens) {
    const Series h = (one_minus_r.shifted_down(2) * Rat(1, 2)).truncated(order);
    if (kind == ClosedForm::Sl2Assoc) return h;
    return free_generator_series(h).a;
  }
  // (1 - r) / (t (2t - 1 + r)) with 2t - 1 + r = t (2 - 2t - ...).
  Series lin(work);
  lin[0] = -1;
  if (work >= 1) lin[1] = 2;
  const Series denom = (lin + r).shifted_down(1);
  const Series h = (one_minus_r.shifted_down(2).truncated(order) / denom.truncated(order));
  if (kind == ClosedForm::Ut2Assoc) return h;
  return free_generator_series(h).a;
}

OracleKind parse_oracle_kind(std::string_view name) {
  if (name == "sl2_nonassoc") return OracleKind::Sl2Nonassoc;
  if (name == "ut2_nonassoc") return OracleKind::Ut2Nonassoc;
  if (name == "sl2_assoc") return OracleKind::Sl2Assoc;
  if (name == "ut2_assoc") return OracleKind::Ut2Assoc;
  throw Error(Errc::UnknownKind, "oracle kind '" + std::string(name) + "'");
}

Series weyl_oracle_dims(OracleKind kind, std::size_t order) {
  Series s(order);
  const bool sl2 = kind == OracleKind::Sl2Nonassoc || kind == OracleKind::Sl2Assoc;
  const bool nonassoc = kind == OracleKind::Sl2Nonassoc || kind == OracleKind::Ut2Nonassoc;
  for (std::size_t n = 0; n <= order; ++n) {
    Int tensor_invariants;
    if (sl2) {
      // Cat(m) = C(2m, m) / (m + 1) for n = 2m.
      tensor_invariants = n % 2 ? Int(0) : Int(binomial(n, n / 2) / Int(n / 2 + 1));
    } else {
      tensor_invariants = binomial(n, n / 2);
    }
    s[n] = Rat(nonassoc ? Int(catalan_number(n) * tensor_invariants) : tensor_invariants);
  }
  return s;
}

EllipticKind parse_elliptic_kind(std::string_view name) {
  if (name == "sl2_literal") return EllipticKind::Sl2Literal;
  if (name == "ut2_literal") return EllipticKind::Ut2Literal;
  if (name == "sl2_weylfixed") return EllipticKind::Sl2WeylFixed;
  throw Error(Errc::UnknownKind, "elliptic kind '" + std::string(name) + "'");
}

namespace {

// Integral over one period of sin^m or cos^m: C(m, m/2) / 2^m for even m, else 0.
Rat wallis(std::size_t m) {
  if (m % 2) return 0;
  Int two_m = 1;
  two_m <<= static_cast<mp_bitcnt_t>(m);
  return make_rat(binomial(m, m / 2), two_m);
}

}  // namespace

Series elliptic_integral_series(EllipticKind kind, std::size_t order) {
  Series s(order);
  Int two_n = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    two_n *= 2;
    // [t^n] (1 - sqrt(1 - 8 t w)) = 2 c_n 2^n w^n.
    const Rat scale = Rat(Int(2 * catalan_number(n) * two_n));
    Rat moment;
    switch (kind) {
      case EllipticKind::Sl2Literal:
        moment = wallis(n + 2);
        break;
      case EllipticKind::Ut2Literal:
        // cos^2(pi u) = (1 + cos(2 pi u)) / 2.
        moment = (wallis(n) + wallis(n + 1)) / 2;
        break;
      case EllipticKind::Sl2WeylFixed:
        // sin^2 = 1 - cos^2.
        moment = wallis(n) - wallis(n + 2);
        break;
    }
    s[n] = scale * moment;
  }
  return s;
}

}  // namespace hilbert::invariants

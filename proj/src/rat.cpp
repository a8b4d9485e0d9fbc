#include "hilbert/rat.hpp"

#include "hilbert/error.hpp"

namespace hilbert {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByNonUnit: return "DivisionByNonUnit";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::PoleAtOrigin: return "PoleAtOrigin";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::BadParameter: return "BadParameter";
    case Errc::InsufficientOrder: return "InsufficientOrder";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BadOperationPolynomial: return "BadOperationPolynomial";
    case Errc::NoSeriesBranch: return "NoSeriesBranch";
    case Errc::AmbiguousBranch: return "AmbiguousBranch";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::EmptySection: return "EmptySection";
    case Errc::CoefficientBoundViolated: return "CoefficientBoundViolated";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::OrderExceeded: return "OrderExceeded";
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::Validation: return "ValidationError";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::Validation, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from) throw Error(Errc::Validation, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(Errc::Validation, "malformed rational '" + std::string(whole) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  return make_rat(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int catalan_number(unsigned long n) {
  if (n == 0) return 0;
  return binomial(2 * n - 2, n - 1) / Int(n);
}

}  // namespace hilbert

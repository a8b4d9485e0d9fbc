#include "hilbert/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert::io {

namespace {

[[noreturn]] void invalid(std::string_view what, std::string_view problem) {
  throw Error(Errc::Validation, std::string(what) + ": " + std::string(problem));
}

const json& field(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) invalid(what, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t natural_from_json(const json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) invalid(what, "expected a natural number");
  return j.get<std::size_t>();
}

Int int_from_json(const json& j, std::string_view what) {
  const Rat r = rat_from_json(j);
  if (!is_integer(r)) invalid(what, "expected an integer");
  return r.get_num();
}

}  // namespace

void require_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!j.is_object()) invalid(what, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      invalid(what, "unknown key '" + key + "'");
    }
  }
}

json to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return parse_rat(j.dump());
  invalid("rational", "expected a fraction string or an integer");
}

json to_json(const Series& s) {
  json coeffs = json::array();
  for (const Rat& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

Series series_from_json(const json& j) {
  require_keys(j, {"order", "coeffs"}, "series");
  const std::size_t order = natural_from_json(field(j, "order", "series"), "series order");
  const json& coeffs = field(j, "coeffs", "series");
  if (!coeffs.is_array()) invalid("series", "coeffs must be an array");
  if (coeffs.size() != order + 1) invalid("series", "coeffs must have order + 1 entries");
  std::vector<Rat> values;
  values.reserve(coeffs.size());
  for (const json& c : coeffs) values.push_back(rat_from_json(c));
  return Series(std::move(values));
}

json to_json(const UniPoly& p) {
  json out = json::array();
  for (const Rat& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

UniPoly unipoly_from_json(const json& j) {
  if (!j.is_array()) invalid("polynomial", "expected an array of coefficients");
  std::vector<Rat> coeffs;
  for (const json& c : j) coeffs.push_back(rat_from_json(c));
  return UniPoly(std::move(coeffs));
}

json to_json(const RationalFn& rf) { return {{"num", to_json(rf.num())}, {"den", to_json(rf.den())}}; }

RationalFn rational_from_json(const json& j) {
  require_keys(j, {"num", "den"}, "rational function");
  return RationalFn(unipoly_from_json(field(j, "num", "rational function")),
                    unipoly_from_json(field(j, "den", "rational function")));
}

json to_json(const BiPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e.t, e.z, to_json(c)}));
  return out;
}

BiPoly bipoly_from_json(const json& j) {
  if (!j.is_array()) invalid("bivariate polynomial", "expected an array of [i, j, c] triples");
  BiPoly p;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 3) invalid("bivariate polynomial", "each term must be [i, j, c]");
    p += BiPoly::term(rat_from_json(term[2]), natural_from_json(term[0], "t-degree"),
                      natural_from_json(term[1], "z-degree"));
  }
  return p;
}

json to_json(const magma::OmegaSignature& sig) {
  if (sig.closed_form()) return {{"closed_form", to_json(*sig.closed_form())}};
  json arities = json::object();
  for (const auto& [n, count] : sig.arity_counts()) arities[std::to_string(n)] = to_json(Rat(count));
  return {{"arities", arities}};
}

magma::OmegaSignature signature_from_json(const json& j) {
  require_keys(j, {"arities", "closed_form"}, "signature");
  if (j.contains("arities") == j.contains("closed_form")) {
    invalid("signature", "give exactly one of 'arities' and 'closed_form'");
  }
  if (j.contains("closed_form")) return magma::OmegaSignature::from_closed_form(rational_from_json(j["closed_form"]));
  const json& arities = j["arities"];
  if (!arities.is_object()) invalid("signature", "arities must be an object");
  std::map<std::size_t, Int> counts;
  for (const auto& [key, value] : arities.items()) {
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      invalid("signature", "arity '" + key + "' is not a natural number");
    }
    counts[n] = int_from_json(value, "operation count");
  }
  return magma::OmegaSignature::from_arities(std::move(counts));
}

json to_json(const monomial::MonomialPresentation& pres) {
  return {{"d", pres.alphabet_size()}, {"forbidden", pres.forbidden()}, {"weights", pres.weights()}};
}

monomial::MonomialPresentation presentation_from_json(const json& j) {
  require_keys(j, {"d", "forbidden", "weights"}, "presentation");
  const std::size_t d = natural_from_json(field(j, "d", "presentation"), "alphabet size");
  const json& forbidden = field(j, "forbidden", "presentation");
  if (!forbidden.is_array()) invalid("presentation", "forbidden must be an array of words");
  std::vector<monomial::Word> words;
  for (const json& w : forbidden) {
    if (!w.is_array()) invalid("presentation", "each forbidden word must be an array of letters");
    monomial::Word word;
    for (const json& letter : w) word.push_back(static_cast<unsigned>(natural_from_json(letter, "letter")));
    words.push_back(std::move(word));
  }
  std::vector<unsigned> weights;
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) invalid("presentation", "weights must be an array");
    for (const json& w : j["weights"]) weights.push_back(static_cast<unsigned>(natural_from_json(w, "weight")));
  }
  return monomial::MonomialPresentation(static_cast<unsigned>(d), std::move(words), std::move(weights));
}

json to_json(const monomial::UfnGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.from, e.to, e.letter}));
  return {{"k", g.k}, {"vertices", g.vertices}, {"edges", edges}};
}

json to_json(const invariants::SqMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(row);
  }
  return rows;
}

invariants::SqMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) invalid("matrix", "expected a nonempty array of rows");
  const std::size_t n = j.size();
  std::vector<Rat> entries;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != n) invalid("matrix", "matrix must be square");
    for (const json& x : row) entries.push_back(rat_from_json(x));
  }
  return invariants::SqMatrix(n, std::move(entries));
}

json to_json(const invariants::MatrixGroup& g) {
  json elements = json::array();
  for (const auto& m : g.elements()) elements.push_back(to_json(m));
  return {{"size", g.order()}, {"elements", elements}};
}

invariants::MatrixGroup group_from_json(const json& j) {
  require_keys(j, {"size", "elements"}, "group");
  const json& elements = field(j, "elements", "group");
  if (!elements.is_array() || elements.empty()) invalid("group", "elements must be a nonempty array");
  std::vector<invariants::SqMatrix> mats;
  for (const json& m : elements) mats.push_back(matrix_from_json(m));
  if (j.contains("size") && natural_from_json(j["size"], "group size") != mats.size()) {
    invalid("group", "size does not match the number of elements");
  }
  return invariants::MatrixGroup(std::move(mats));
}

json to_json(const growth::GrowthReport& r) {
  json out = {{"class", std::string(growth::to_string(r.growth_class))}, {"evidence", r.evidence}};
  out["estimate"] = r.estimate ? json(*r.estimate) : json(nullptr);
  out["slope"] = std::isfinite(r.slope) ? json(r.slope) : json(nullptr);
  return out;
}

growth::GrowthReport growth_report_from_json(const json& j) {
  require_keys(j, {"class", "estimate", "slope", "evidence"}, "growth report");
  growth::GrowthReport r;
  const std::string cls = field(j, "class", "growth report").get<std::string>();
  bool known = false;
  for (auto c : {growth::GrowthClass::Polynomial, growth::GrowthClass::Exponential, growth::GrowthClass::Intermediate,
                 growth::GrowthClass::Inconclusive}) {
    if (growth::to_string(c) == cls) {
      r.growth_class = c;
      known = true;
    }
  }
  if (!known) invalid("growth report", "unknown class '" + cls + "'");
  if (j.contains("estimate") && !j["estimate"].is_null()) r.estimate = j["estimate"].get<double>();
  r.slope = j.contains("slope") && !j["slope"].is_null() ? j["slope"].get<double>()
                                                           : std::numeric_limits<double>::quiet_NaN();
  if (j.contains("evidence")) r.evidence = j["evidence"].get<std::string>();
  return r;
}

}  // namespace hilbert::io

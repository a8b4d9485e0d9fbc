#include "hilbert/paper_suite.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hilbert/algebraic.hpp"
#include "hilbert/error.hpp"
#include "hilbert/guess.hpp"
#include "paper_golden_data.hpp"

namespace hilbert::paper {

using hilbert::to_string;

namespace {

using io::json;

constexpr int kRows = 14;

/// Thrown inside a row to report a failed comparison.
struct Mismatch {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch{what};
}

std::size_t nat(const json& g, const char* key) { return g.at(key).get<std::size_t>(); }

BiPoly golden_equation(const json& g) { return io::bipoly_from_json(g.at("equation")).normalized(); }

/// Golden {"n": "c"} maps: every listed coefficient must match and every
/// other coefficient up to `order` must vanish.
void expect_sparse(const Series& s, const json& coeffs, std::size_t order, const std::string& label) {
  std::set<std::size_t> listed;
  for (const auto& [key, value] : coeffs.items()) {
    const std::size_t n = std::stoul(key);
    listed.insert(n);
    expect(n <= s.order() && s[n] == io::rat_from_json(value),
           label + ": coefficient of t^" + key + " is " + (n <= s.order() ? to_string(s[n]) : "missing") +
               ", expected " + value.get<std::string>());
  }
  for (std::size_t n = 0; n <= std::min(order, s.order()); ++n) {
    expect(listed.count(n) || s[n] == 0, label + ": unexpected coefficient at t^" + std::to_string(n));
  }
}

// Euler's pentagonal recurrence, independent of the product expansion.
std::vector<Int> pentagonal_partitions(std::size_t n_max) {
  std::vector<Int> p(n_max + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Int acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (static_cast<std::size_t>(g1) > n) break;
      const long g2 = k * (3 * k + 1) / 2;
      const Int term = p[n - g1] + (static_cast<std::size_t>(g2) <= n ? p[n - g2] : Int(0));
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[n] = acc;
  }
  return p;
}

std::string series_head(const Series& s, std::size_t count) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= std::min(count, s.order()); ++n) out << (n ? "," : "") << to_string(s[n]);
  return out.str();
}

struct Criterion {
  int id;
  const char* title;
  std::function<std::size_t(const json&)> required_order;
  std::function<std::string(const json&)> run;
};

std::string row1(const json& g) {
  const std::size_t order = nat(g, "order");
  const Series f = magma::magma_series(magma::OmegaSignature::binary(), magma::GeneratorWeights::single(order), order);
  for (std::size_t n = 1; n <= order; ++n) {
    expect(f[n] == Rat(catalan_number(n)), "coefficient " + std::to_string(n) + " is not the Catalan number");
  }
  const BiPoly eq = golden_equation(g);
  expect(!annihilator_residual(eq, f), eq.to_string() + " leaves a residual");
  return "c_1..c_" + std::to_string(order) + " match (1/n)C(2n-2,n-1); " + eq.to_string() + " residual Infinity";
}

std::string row2(const json& g) {
  const std::size_t order = nat(g, "order");
  const Series a = magma::submagma_generators(magma::OmegaSignature::binary(), 2, order).generators;
  for (std::size_t n = 1; 2 * n <= order; ++n) {
    Int expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 4, n - 1);
    expected *= catalan_number(n);
    expect(a[2 * n] == Rat(expected), "a_" + std::to_string(2 * n) + " != 4^(n-1) c_n");
    expect(a[2 * n - 1] == 0, "odd coefficient " + std::to_string(2 * n - 1) + " is nonzero");
  }
  const auto guessed = guess_algebraic_equation(a, 2, 2);
  const BiPoly expected_eq = golden_equation(g);
  expect(guessed.has_value(), "no annihilator with dz=2, dt=2");
  expect(*guessed == expected_eq, "guessed " + guessed->to_string() + ", expected " + expected_eq.to_string());
  const std::size_t ratio_order = nat(g, "ratio_order");
  const auto ratios = magma::branch_parity_ratio(ratio_order);
  const double r = ratios.back().second.get_d();
  const double limit = g.at("limit").get<double>();
  const double tol = g.at("tolerance").get<double>();
  std::ostringstream ratio_text;
  ratio_text.precision(6);
  ratio_text << std::fixed << r;
  expect(std::fabs(r - limit) <= tol, "a_" + std::to_string(ratio_order) + "/c_" + std::to_string(ratio_order) +
                                          " = " + ratio_text.str() + " is not within tolerance");
  return "a_2n = 4^(n-1)c_n for 2n <= " + std::to_string(order) + "; guessed " + guessed->to_string() + "; a_" +
         std::to_string(ratio_order) + "/c_" + std::to_string(ratio_order) + " = " + ratio_text.str();
}

std::string quartic_row(const json& g, const magma::OmegaSignature& sig, std::size_t s) {
  const std::size_t order = nat(g, "order");
  const std::size_t guess_order = nat(g, "guess_order");
  const Series a = magma::submagma_generators(sig, s, std::max(order, guess_order)).generators;
  expect_sparse(a.truncated(order), g.at("coeffs"), order, "generators");
  const auto guessed = guess_algebraic_equation(a, nat(g, "dz"), nat(g, "dt"));
  const BiPoly expected_eq = golden_equation(g);
  expect(guessed.has_value(), "no annihilator found");
  expect(*guessed == expected_eq, "guessed " + guessed->to_string() + ", expected " + expected_eq.to_string());
  return "coefficients to t^" + std::to_string(order) + " match; annihilator " + guessed->to_string();
}

std::string row3(const json& g) { return quartic_row(g, magma::OmegaSignature::binary(), 3); }

std::string row4(const json& g) { return quartic_row(g, magma::OmegaSignature::super_catalan(), 2); }

std::string row5(const json& g) {
  const std::size_t binary_max = nat(g, "binary_max");
  const auto binary = magma::OmegaSignature::binary();
  const Series fb = magma::magma_series(binary, magma::GeneratorWeights::single(binary_max), binary_max);
  for (std::size_t n = 1; n <= binary_max; ++n) {
    expect(magma::brute_force_count(binary, n) == fb[n].get_num(), "binary mismatch at n=" + std::to_string(n));
  }
  std::map<std::size_t, Int> arities;
  for (const json& n : g.at("mixed_arities")) arities[n.get<std::size_t>()] = 1;
  const auto mixed = magma::OmegaSignature::from_arities(arities);
  const std::size_t mixed_max = nat(g, "mixed_max");
  const Series fm = magma::magma_series(mixed, magma::GeneratorWeights::single(mixed_max), mixed_max);
  for (std::size_t n = 1; n <= mixed_max; ++n) {
    expect(magma::brute_force_count(mixed, n) == fm[n].get_num(), "mixed mismatch at n=" + std::to_string(n));
  }
  return "binary n <= " + std::to_string(binary_max) + " and mixed n <= " + std::to_string(mixed_max) +
         " agree; mixed series " + series_head(fm, 6) + ",...";
}

std::string row6(const json& g) {
  std::mt19937_64 rng(g.at("seed").get<std::uint64_t>());
  const auto max_d = static_cast<unsigned>(nat(g, "max_d"));
  const std::size_t max_len = nat(g, "max_length");
  const std::size_t max_words = nat(g, "max_words");
  const std::size_t order = nat(g, "order");
  const std::size_t count = nat(g, "presentations");
  std::size_t exponential = 0;
  for (std::size_t trial = 0; trial < count; ++trial) {
    const unsigned d = std::uniform_int_distribution<unsigned>(1, max_d)(rng);
    const std::size_t words = std::uniform_int_distribution<std::size_t>(1, max_words)(rng);
    std::vector<monomial::Word> forbidden;
    for (std::size_t w = 0; w < words; ++w) {
      monomial::Word word(std::uniform_int_distribution<std::size_t>(1, max_len)(rng));
      for (auto& letter : word) letter = std::uniform_int_distribution<unsigned>(1, d)(rng);
      forbidden.push_back(std::move(word));
    }
    const monomial::MonomialPresentation pres(d, forbidden);
    const Series brute = monomial::normal_count(pres, order);
    const Series transfer = expand_rational(monomial::hilbert_rational(pres), order);
    expect(brute == transfer, "transfer matrix disagrees with normal-word count on trial " + std::to_string(trial));

    const monomial::UfnGraph graph = monomial::build_graph(pres);
    std::size_t words_k1 = 0;
    monomial::Word w(graph.k + 1, 1);
    while (true) {
      if (pres.is_normal(w)) ++words_k1;
      std::size_t i = 0;
      while (i < w.size() && w[i] == d) w[i++] = 1;
      if (i == w.size()) break;
      ++w[i];
    }
    expect(graph.edges.size() == words_k1, "edge count differs from normal words of length k+1 on trial " +
                                               std::to_string(trial));
    if (monomial::growth_classify(graph).exponential) ++exponential;
  }
  return std::to_string(count) + " presentations agree to order " + std::to_string(order) + " (" +
         std::to_string(exponential) + " exponential)";
}

std::string row7(const json& g) {
  std::mt19937_64 rng(g.at("seed").get<std::uint64_t>());
  const std::size_t max_element = nat(g, "max_element");
  const std::size_t order = nat(g, "order");
  const std::size_t count = nat(g, "sets");
  for (std::size_t trial = 0; trial < count; ++trial) {
    std::set<std::size_t> s;
    for (std::size_t x = 0; x <= max_element; ++x) {
      if (std::bernoulli_distribution(0.3)(rng)) s.insert(x);
    }
    // 1/(1-t) + t/(1-t)^2 + a(t) t^2/(1-t)^2, assembled term by term.
    UniPoly a;
    for (std::size_t x : s) a += UniPoly::monomial(1, x);
    const UniPoly one_minus_t{1, -1};
    const RationalFn expected = RationalFn(UniPoly{1}, one_minus_t) +
                                RationalFn(UniPoly{0, 1}, one_minus_t * one_minus_t) +
                                RationalFn(a * UniPoly::monomial(1, 2), one_minus_t * one_minus_t);
    expect(monomial::borho_kraft_series(s, order) == expand_rational(expected, order),
           "mismatch on trial " + std::to_string(trial));
  }
  return std::to_string(count) + " random sets agree to order " + std::to_string(order);
}

std::string row8(const json& g) {
  std::string detail;
  for (const char* name : {"S2", "C3"}) {
    const auto avg = invariants::molien_commutative(invariants::named_group(name), 8);
    const RationalFn expected = io::rational_from_json(g.at(name));
    expect(avg.rational == expected, std::string(name) + ": got " + avg.rational.to_string());
    expect(avg.series == expand_rational(expected, 8), std::string(name) + ": series disagrees");
    detail += std::string(detail.empty() ? "" : "; ") + name + " -> " + avg.rational.to_string();
  }
  return detail;
}

std::string row9(const json& g) {
  std::string detail;
  for (const char* name : {"S2", "C3"}) {
    const json& e = g.at(name);
    const auto& coeffs = e.at("coeffs");
    const std::size_t order = coeffs.size() - 1;
    const auto avg = invariants::dicks_formanek(invariants::named_group(name), order);
    expect(avg.rational == io::rational_from_json(e.at("rational")), std::string(name) + ": got " + avg.rational.to_string());
    for (std::size_t n = 0; n <= order; ++n) {
      expect(avg.series[n] == io::rat_from_json(coeffs[n]), std::string(name) + ": coefficient " + std::to_string(n));
    }
    const std::size_t gen_order = 16;
    const auto gens = invariants::free_generator_series(invariants::dicks_formanek(invariants::named_group(name), gen_order).series);
    const RationalFn gen_rf = io::rational_from_json(e.at("generators"));
    expect(gens.a == expand_rational(gen_rf, gen_order) && gens.natural_coefficients,
           std::string(name) + ": generator series disagrees");
    detail += std::string(detail.empty() ? "" : "; ") + name + " -> " + avg.rational.to_string() + " = " +
              series_head(avg.series, order) + ",..., a = " + gen_rf.to_string();
  }
  return detail;
}

std::string row10(const json& g) {
  const std::size_t order = nat(g, "order");
  const Series h = invariants::closed_form_series(invariants::ClosedForm::Sl2Assoc, order);
  for (std::size_t n = 1; 2 * (n - 1) <= order; ++n) {
    expect(h[2 * (n - 1)] == Rat(catalan_number(n)), "coefficient of t^" + std::to_string(2 * (n - 1)));
  }
  expect(h == invariants::weyl_oracle_dims(invariants::OracleKind::Sl2Assoc, order), "sl2 oracle disagrees");
  expect(invariants::closed_form_series(invariants::ClosedForm::Ut2Assoc, order) ==
             invariants::weyl_oracle_dims(invariants::OracleKind::Ut2Assoc, order),
         "ut2 oracle disagrees");
  const Series diff = invariants::closed_form_series(invariants::ClosedForm::Ut2AssocGens, order) -
                      invariants::closed_form_series(invariants::ClosedForm::Sl2AssocGens, order);
  expect(diff == Series::variable(order), "a_UT2 - a_SL2 != t");
  return "Catalan at t^2(n-1) and both oracles match to order " + std::to_string(order) + "; a_UT2 - a_SL2 = t";
}

std::string row11(const json& g) {
  using invariants::EllipticKind;
  using invariants::OracleKind;
  const std::size_t order = nat(g, "order");
  const Series ut2 = invariants::elliptic_integral_series(EllipticKind::Ut2Literal, order);
  const Series sl2 = invariants::elliptic_integral_series(EllipticKind::Sl2WeylFixed, order);
  const Series lit = invariants::elliptic_integral_series(EllipticKind::Sl2Literal, order);
  expect(ut2 == invariants::weyl_oracle_dims(OracleKind::Ut2Nonassoc, order), "ut2_literal disagrees with oracle");
  expect(sl2 == invariants::weyl_oracle_dims(OracleKind::Sl2Nonassoc, order), "sl2_weylfixed disagrees with oracle");
  for (const Series* s : {&ut2, &sl2, &lit}) {
    for (const Rat& c : s->coeffs()) expect(is_integer(c), "non-integer coefficient");
  }
  const Rat oracle_t2 = invariants::weyl_oracle_dims(OracleKind::Sl2Nonassoc, order)[2];
  expect(lit[2] == io::rat_from_json(g.at("literal_t2")), "sl2_literal t^2 coefficient is " + to_string(lit[2]));
  expect(oracle_t2 == io::rat_from_json(g.at("oracle_t2")), "oracle t^2 coefficient is " + to_string(oracle_t2));
  return "ut2_literal and sl2_weylfixed match their oracles to order " + std::to_string(order) +
         "; erratum: sl2_literal t^2 = " + to_string(lit[2]) + " vs oracle " + to_string(oracle_t2);
}

std::string row12(const json& g) {
  const std::size_t order = nat(g, "order");
  const Series p = named_series(NamedSeries::EulerPartitions, order);
  const auto oracle = pentagonal_partitions(order);
  for (std::size_t n = 0; n <= order; ++n) expect(p[n] == Rat(oracle[n]), "p_" + std::to_string(n));
  expect(p[100] == io::rat_from_json(g.at("p100")), "p_100 = " + to_string(p[100]));
  const auto near = growth::hardy_ramanujan_compare(growth::PartitionKind::P, 100);
  const auto far = growth::hardy_ramanujan_compare(growth::PartitionKind::P, nat(g, "far_n"));
  expect(near.ratio >= g.at("ratio_low").get<double>() && near.ratio <= g.at("ratio_high").get<double>(),
         "ratio at 100 out of range");
  expect(std::fabs(far.ratio - 1) < std::fabs(near.ratio - 1), "ratio does not approach 1");
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << "p_100 = " << to_string(near.exact) << "; ratio(100) = " << near.ratio << ", ratio("
      << nat(g, "far_n") << ") = " << far.ratio;
  return out.str();
}

std::string row13(const json& g) {
  const std::size_t k = nat(g, "max_den_deg");
  const RationalFn rf = io::rational_from_json(g.at("rational"));
  const auto rational = growth::fatou_classify(expand_rational(rf, nat(g, "rational_order")), k);
  expect(rational.fatou_class == growth::FatouClass::Rational && rational.rational && *rational.rational == rf,
         "rational input classified as " + std::string(growth::to_string(rational.fatou_class)));

  const Series partitions = named_series(NamedSeries::EulerPartitions, nat(g, "partitions_order"));
  const auto growth_report = growth::classify_growth(partitions);
  expect(growth_report.growth_class == growth::GrowthClass::Intermediate,
         "partitions classified as " + std::string(growth::to_string(growth_report.growth_class)));
  const auto fatou_p = growth::fatou_classify(partitions, k);
  expect(fatou_p.fatou_class == growth::FatouClass::TranscendentalByFatou,
         "partitions: " + std::string(growth::to_string(fatou_p.fatou_class)));

  const auto fatou_c = growth::fatou_classify(catalan(nat(g, "catalan_order")), k);
  expect(fatou_c.fatou_class == growth::FatouClass::ExponentialInconclusive,
         "catalan: " + std::string(growth::to_string(fatou_c.fatou_class)));
  return "Rational " + rational.rational->to_string() + "; partitions Intermediate, TranscendentalByFatou; "
         "catalan ExponentialInconclusive";
}

std::string row14(const json& g) {
  const UniPoly den = io::unipoly_from_json(g.at("den"));
  const std::size_t expected = nat(g, "gk");
  const std::size_t gk = growth::gk_from_rational(RationalFn(UniPoly{1}, den));
  expect(gk == expected, "gk = " + std::to_string(gk));
  for (const UniPoly& extra : {UniPoly{1, -1}, UniPoly{1, 1}, UniPoly{1, -1}.pow(3), UniPoly{2, 0, -3}}) {
    expect(growth::gk_from_rational(extra, den * extra) == expected, "unreduced input changes the answer");
  }
  return "GK dimension " + std::to_string(gk) + ", unchanged for unreduced inputs";
}

std::size_t fixed_order(const json& g) { return nat(g, "order"); }

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "Catalan series and equation", fixed_order, row1},
      {2, "even-branch generators", [](const json& g) { return std::max(nat(g, "order"), nat(g, "ratio_order")); }, row2},
      {3, "s=3 quartic", [](const json& g) { return std::max(nat(g, "order"), nat(g, "guess_order")); }, row3},
      {4, "super-Catalan even section", [](const json& g) { return std::max(nat(g, "order"), nat(g, "guess_order")); }, row4},
      {5, "tree oracle equivalence", [](const json& g) { return std::max(nat(g, "binary_max"), nat(g, "mixed_max")); }, row5},
      {6, "Ufnarovskij transfer matrix", fixed_order, row6},
      {7, "Borho-Kraft", fixed_order, row7},
      {8, "Molien", [](const json&) { return std::size_t{8}; }, row8},
      {9, "Dicks-Formanek", [](const json&) { return std::size_t{16}; }, row9},
      {10, "ADF closed form", fixed_order, row10},
      {11, "elliptic integrals", fixed_order, row11},
      {12, "partitions", [](const json& g) { return std::max(nat(g, "order"), nat(g, "far_n")); }, row12},
      {13, "Fatou pipeline",
       [](const json& g) {
         return std::max({nat(g, "rational_order"), nat(g, "partitions_order"), nat(g, "catalan_order")});
       },
       row13},
      {14, "GK dimension from a rational series", [](const json&) { return std::size_t{0}; }, row14},
  };
  return list;
}

void validate_golden(const json& golden) {
  if (!golden.is_object()) throw Error(Errc::Validation, "golden document must be an object");
  for (int id = 1; id <= kRows; ++id) {
    const auto it = golden.find(std::to_string(id));
    if (it == golden.end() || !it->is_object()) {
      throw Error(Errc::Validation, "golden document lacks row " + std::to_string(id));
    }
  }
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "FAIL";
}

const io::json& embedded_golden() {
  static const json golden = json::parse(kEmbeddedGolden);
  return golden;
}

io::json load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Validation, "cannot open golden file " + path);
  json golden;
  try {
    golden = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::Validation, "golden file " + path + " is not valid JSON: " + e.what());
  }
  validate_golden(golden);
  return golden;
}

std::vector<Row> run_suite(const io::json& golden, std::optional<std::size_t> order_cap) {
  validate_golden(golden);
  std::vector<Row> rows;
  for (const Criterion& c : criteria()) {
    Row row;
    row.id = c.id;
    row.title = c.title;
    const json& g = golden.at(std::to_string(c.id));
    try {
      row.required_order = c.required_order(g);
      if (order_cap && row.required_order > *order_cap) {
        row.status = Status::Skipped;
        row.detail = "needs order " + std::to_string(row.required_order);
      } else {
        row.detail = c.run(g);
        row.status = Status::Pass;
      }
    } catch (const Mismatch& m) {
      row.detail = m.what;
    } catch (const std::exception& e) {
      row.detail = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_row(const Row& row) {
  std::ostringstream out;
  out << to_string(row.status) << std::string(8 - to_string(row.status).size(), ' ') << "#" << row.id
      << (row.id < 10 ? "  " : " ") << row.title << ": " << row.detail;
  return out.str();
}

bool any_failed(const std::vector<Row>& rows) {
  for (const Row& r : rows) {
    if (r.status == Status::Fail) return true;
  }
  return false;
}

}  // namespace hilbert::paper

#include "hilbert/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hilbert/algebraic.hpp"
#include "hilbert/error.hpp"
#include "hilbert/guess.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/paper_suite.hpp"

namespace hilbert::cli {

namespace {

using io::json;

/// Embedded fixtures, so the paper commands need no files.
json signature_fixture(const std::string& name) {
  if (name == "binary") return io::to_json(magma::OmegaSignature::binary());
  if (name == "super-catalan") return io::to_json(magma::OmegaSignature::super_catalan());
  throw Error(Errc::UnknownKind, "signature fixture '" + name + "'");
}

class Context {
 public:
  explicit Context(std::istream& in) : in_(in) {}

  /// Inline JSON when the text starts with '[', '{' or '"' or is a number,
  /// "-" for stdin, otherwise a file path.
  json read_json(const std::string& arg, const std::string& what) const {
    std::string text;
    if (arg == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else if (!arg.empty() && (arg[0] == '[' || arg[0] == '{' || arg[0] == '"' || arg[0] == '-' ||
                                std::isdigit(static_cast<unsigned char>(arg[0])))) {
      text = arg;
    } else {
      std::ifstream file(arg);
      if (!file) throw Error(Errc::Validation, "cannot open " + what + " file '" + arg + "'");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw Error(Errc::Validation, what + " is not valid JSON: " + e.what());
    }
  }

  Series series(const std::string& arg, const std::string& what = "series") const {
    return io::series_from_json(read_json(arg, what));
  }

 private:
  std::istream& in_;
};

magma::OmegaSignature parse_arities(const std::string& spec) {
  std::map<std::size_t, Int> counts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const std::string arity = item.substr(0, colon);
      const std::size_t n = std::stoul(arity, &used);
      if (used != arity.size()) throw std::invalid_argument(item);
      counts[n] = colon == std::string::npos ? Int(1) : parse_rat(item.substr(colon + 1)).get_num();
    } catch (const std::logic_error&) {
      throw Error(Errc::Validation, "arity list entry '" + item + "' is not of the form n:count");
    }
  }
  return magma::OmegaSignature::from_arities(std::move(counts));
}

std::set<std::size_t> parse_natural_set(const std::string& spec) {
  std::set<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.insert(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error(Errc::Validation, "'" + item + "' is not a natural number");
    }
  }
  return out;
}

json averaged_json(const invariants::AveragedSeries& avg) {
  return {{"rational", io::to_json(avg.rational)},
          {"num", avg.rational.num().to_string()},
          {"den", avg.rational.den().to_string()},
          {"series", io::to_json(avg.series)}};
}

json rational_json(const RationalFn& rf) {
  json out = io::to_json(rf);
  out["text"] = rf.to_string();
  return out;
}

json bipoly_json(const BiPoly& p) { return {{"equation", io::to_json(p)}, {"text", p.to_string()}}; }

int exit_code_for(Errc code) {
  return code == Errc::ResourceLimit || code == Errc::OrderExceeded ? kExitResource : kExitValidation;
}

void report_error(std::ostream& err, std::string_view name, const std::string& message) {
  err << json{{"error", std::string(name)}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert series toolkit", "hilbert"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::size_t order = 64;
  std::string output_path;
  bool dot = false;
  auto* order_opt = app.add_option("--order", order, "Truncation order (default 64)");
  app.add_option("--output", output_path, "Write the result to this file instead of stdout");
  app.add_flag("--dot", dot, "Emit graphs in DOT format");

  Context ctx(in);
  std::function<json()> action;
  std::function<int()> raw_action;  // commands with their own output format

  // String-valued operands shared by many commands.
  std::string input, a_arg, b_arg, f_arg, g_arg, poly_arg, seed_arg, op_arg, kind_arg, num_arg, den_arg, p_arg;
  std::string arities_arg, signature_arg, gens_arg, pres_arg, group_arg, s_set_arg, golden_arg;
  std::size_t s_param = 1, n_param = 1, d_param = 2, p_param = 0, dz = 2, dt = 1, max_den_deg = 10, max_group = 10000;
  std::string limit_arg = "1000000000000";

  auto leaf = [](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    return sub;
  };

  // series ------------------------------------------------------------------
  auto* series = app.add_subcommand("series", "Power-series arithmetic and recognition");
  series->require_subcommand(1);
  {
    auto* c = leaf(series, "arith", "a (op) b");
    c->add_option("--a", a_arg)->required();
    c->add_option("--b", b_arg)->required();
    c->add_option("--op", op_arg)->required()->check(CLI::IsMember({"add", "sub", "mul", "div"}));
    c->callback([&] {
      action = [&] {
        const ArithOp op = op_arg == "add" ? ArithOp::Add : op_arg == "sub" ? ArithOp::Sub
                           : op_arg == "mul" ? ArithOp::Mul : ArithOp::Div;
        return io::to_json(series_arith(ctx.series(a_arg, "a"), ctx.series(b_arg, "b"), op));
      };
    });
  }
  {
    auto* c = leaf(series, "compose", "f(g(t))");
    c->add_option("--f", f_arg)->required();
    c->add_option("--g", g_arg)->required();
    c->callback([&] { action = [&] { return io::to_json(compose(ctx.series(f_arg, "f"), ctx.series(g_arg, "g"))); }; });
  }
  {
    auto* c = leaf(series, "sqrt-one-plus", "sqrt(1 + f)");
    c->add_option("--input", input)->required();
    c->callback([&] { action = [&] { return io::to_json(sqrt_one_plus(ctx.series(input))); }; });
  }
  {
    auto* c = leaf(series, "expand-rational", "Taylor expansion of num/den");
    c->add_option("--input", input, "RationalFn JSON");
    c->add_option("--num", num_arg, "Numerator coefficients");
    c->add_option("--den", den_arg, "Denominator coefficients");
    c->callback([&] {
      action = [&] {
        RationalFn rf = !input.empty() ? io::rational_from_json(ctx.read_json(input, "rational function"))
                                       : RationalFn(io::unipoly_from_json(ctx.read_json(num_arg.empty() ? "[1]" : num_arg, "num")),
                                                    io::unipoly_from_json(ctx.read_json(den_arg.empty() ? "[1]" : den_arg, "den")));
        return io::to_json(expand_rational(rf, order));
      };
    });
  }
  {
    auto* c = leaf(series, "section", "Keep coefficients at multiples of s");
    c->add_option("--input", input)->required();
    c->add_option("--s", s_param)->required();
    c->callback([&] { action = [&] { return io::to_json(section(ctx.series(input), s_param)); }; });
  }
  {
    auto* c = leaf(series, "named", "Named infinite products");
    c->add_option("--kind", kind_arg)->required();
    c->callback([&] { action = [&] { return io::to_json(named_series(parse_named_series(kind_arg), order)); }; });
  }
  {
    auto* c = leaf(series, "catalan", "The Catalan series c(t)");
    c->callback([&] { action = [&] { return io::to_json(catalan(order)); }; });
  }
  {
    auto* c = leaf(series, "lacunary", "0/1 series on {d^n} or {n!}");
    c->add_option("--kind", kind_arg)->required();
    c->add_option("--d", d_param);
    c->callback([&] { action = [&] { return io::to_json(lacunary(parse_lacunary_kind(kind_arg), d_param, order)); }; });
  }
  {
    auto* c = leaf(series, "find-recurrence", "Recover a rational function from coefficients");
    c->add_option("--input", input)->required();
    c->add_option("--max-den-deg", max_den_deg);
    c->callback([&] {
      action = [&] {
        const auto rf = find_linear_recurrence(ctx.series(input), max_den_deg);
        return json{{"found", rf.has_value()}, {"rational", rf ? rational_json(*rf) : json(nullptr)}};
      };
    });
  }
  {
    auto* c = leaf(series, "guess-algebraic", "Find P(t, z) with P(t, f) = 0");
    c->add_option("--input", input)->required();
    c->add_option("--dz", dz);
    c->add_option("--dt", dt);
    c->callback([&] {
      action = [&] {
        const auto p = guess_algebraic_equation(ctx.series(input), dz, dt);
        if (!p) return json{{"found", false}, {"equation", nullptr}, {"text", nullptr}};
        json r = bipoly_json(*p);
        r["found"] = true;
        return r;
      };
    });
  }
  {
    auto* c = leaf(series, "residual", "First nonzero coefficient of P(t, f)");
    c->add_option("--poly", poly_arg)->required();
    c->add_option("--input", input)->required();
    c->callback([&] {
      action = [&] {
        const auto r = annihilator_residual(io::bipoly_from_json(ctx.read_json(poly_arg, "polynomial")), ctx.series(input));
        return json{{"residual", r ? json(*r) : json("Infinity")}};
      };
    });
  }
  {
    auto* c = leaf(series, "shift-transform", "b(z, z - t)");
    c->add_option("--poly", poly_arg)->required();
    c->callback([&] {
      action = [&] { return bipoly_json(shift_transform(io::bipoly_from_json(ctx.read_json(poly_arg, "polynomial")))); };
    });
  }
  {
    auto* c = leaf(series, "substitute-case2", "q(t, z - p(z))");
    c->add_option("--poly", poly_arg)->required();
    c->add_option("--p", p_arg, "Operation polynomial coefficients")->required();
    c->callback([&] {
      action = [&] {
        return bipoly_json(substitute_case2(io::bipoly_from_json(ctx.read_json(poly_arg, "polynomial")),
                                            io::unipoly_from_json(ctx.read_json(p_arg, "p"))));
      };
    });
  }
  {
    auto* c = leaf(series, "resultant", "Res_z(q(t, z), b(u, u - z))");
    c->add_option("--q", f_arg)->required();
    c->add_option("--b", b_arg)->required();
    c->callback([&] {
      action = [&] {
        return bipoly_json(resultant_case3(io::bipoly_from_json(ctx.read_json(f_arg, "q")),
                                           io::bipoly_from_json(ctx.read_json(b_arg, "b"))));
      };
    });
  }
  {
    auto* c = leaf(series, "root", "Lift a branch of P(t, z) = 0");
    c->add_option("--poly", poly_arg)->required();
    c->add_option("--seed", seed_arg)->required();
    c->callback([&] {
      action = [&] {
        return io::to_json(series_root(io::bipoly_from_json(ctx.read_json(poly_arg, "polynomial")), order,
                                       ctx.series(seed_arg, "seed")));
      };
    });
  }

  // magma -------------------------------------------------------------------
  auto* magma_cmd = app.add_subcommand("magma", "Free Omega-magmas and their submagmas");
  magma_cmd->require_subcommand(1);
  auto signature = [&]() {
    if (!arities_arg.empty() && !signature_arg.empty()) {
      throw Error(Errc::Validation, "give at most one of --arities and --signature");
    }
    if (!arities_arg.empty()) return parse_arities(arities_arg);
    if (signature_arg.empty()) return magma::OmegaSignature::binary();
    const bool is_fixture = signature_arg == "binary" || signature_arg == "super-catalan";
    return io::signature_from_json(is_fixture ? signature_fixture(signature_arg) : ctx.read_json(signature_arg, "signature"));
  };
  auto add_signature = [&](CLI::App* c) {
    c->add_option("--arities", arities_arg, "Operation counts, e.g. 2:1,3:1");
    c->add_option("--signature", signature_arg, "binary, super-catalan, or signature JSON (default binary)");
  };
  {
    auto* c = leaf(magma_cmd, "series", "f = a(t) + p(f)");
    add_signature(c);
    c->add_option("--gens", gens_arg, "Generator series JSON (default a = t)");
    c->callback([&] {
      action = [&] {
        const auto gens = gens_arg.empty() ? magma::GeneratorWeights::single(order)
                                           : magma::GeneratorWeights(ctx.series(gens_arg, "generators"));
        return io::to_json(magma::magma_series(signature(), gens, order));
      };
    });
  }
  {
    auto* c = leaf(magma_cmd, "count", "Planar trees with n leaves, by enumeration");
    add_signature(c);
    c->add_option("--n", n_param)->required();
    c->add_option("--limit", limit_arg);
    c->callback([&] {
      action = [&] {
        return json{{"n", n_param}, {"count", to_string(magma::brute_force_count(signature(), n_param, parse_rat(limit_arg).get_num()))}};
      };
    });
  }
  {
    auto* c = leaf(magma_cmd, "nonempty", "Is the degree-divisible-by-s submagma nonempty");
    add_signature(c);
    c->add_option("--s", s_param)->required();
    c->callback([&] { action = [&] { return json{{"s", s_param}, {"nonempty", magma::section_nonempty(signature(), s_param)}}; }; });
  }
  {
    auto* c = leaf(magma_cmd, "section", "Section g_S and its free generators");
    add_signature(c);
    c->add_option("--s", s_param)->required();
    c->callback([&] {
      action = [&] {
        const auto r = magma::submagma_generators(signature(), s_param, order);
        return json{{"section", io::to_json(r.section)}, {"generators", io::to_json(r.generators)}};
      };
    });
  }
  {
    auto* c = leaf(magma_cmd, "parity-ratio", "a_2n / c_2n for the even binary submagma");
    c->callback([&] {
      action = [&] {
        json rows = json::array();
        for (const auto& [n, r] : magma::branch_parity_ratio(order)) {
          rows.push_back({{"n", n}, {"ratio", to_string(r)}, {"approx", r.get_d()}});
        }
        return rows;
      };
    });
  }

  // monomial ----------------------------------------------------------------
  auto* mono = app.add_subcommand("monomial", "Monomial algebras and the Ufnarovskij graph");
  mono->require_subcommand(1);
  auto presentation = [&] { return io::presentation_from_json(ctx.read_json(pres_arg, "presentation")); };
  auto add_pres = [&](CLI::App* c) { c->add_option("--pres", pres_arg, "Presentation JSON")->required(); };
  {
    auto* c = leaf(mono, "count", "Normal words by degree");
    add_pres(c);
    c->callback([&] { action = [&] { return io::to_json(monomial::normal_count(presentation(), order)); }; });
  }
  {
    auto* c = leaf(mono, "graph", "The Ufnarovskij graph (JSON, or DOT with --dot)");
    add_pres(c);
    c->callback([&] {
      raw_action = [&] {
        const auto g = monomial::build_graph(presentation());
        std::ofstream file;
        std::ostream& sink = output_path.empty() ? out : (file.open(output_path), file);
        if (!sink) throw Error(Errc::Validation, "cannot write " + output_path);
        if (dot) {
          sink << g.to_dot();
        } else {
          sink << io::to_json(g).dump(2) << '\n';
        }
        return kExitOk;
      };
    });
  }
  {
    auto* c = leaf(mono, "rational", "Hilbert series as a rational function");
    add_pres(c);
    c->callback([&] { action = [&] { return rational_json(monomial::hilbert_rational(presentation())); }; });
  }
  {
    auto* c = leaf(mono, "growth", "Growth from the cycle structure of the graph");
    add_pres(c);
    c->callback([&] {
      action = [&] {
        const auto g = monomial::growth_classify(monomial::build_graph(presentation()));
        if (g.exponential) return json{{"class", "Exponential"}, {"gk_dim", nullptr}};
        return json{{"class", "Polynomial"}, {"gk_dim", g.gk_dim}};
      };
    });
  }
  {
    auto* c = leaf(mono, "borho-kraft", "Hilbert series of the Borho-Kraft algebra for a finite S");
    c->add_option("--S", s_set_arg, "Comma-separated elements of S")->required();
    c->callback([&] {
      action = [&] {
        const auto s = parse_natural_set(s_set_arg);
        return json{{"series", io::to_json(monomial::borho_kraft_series(s, order))},
                    {"rational", rational_json(monomial::borho_kraft_rational(s))}};
      };
    });
  }
  {
    auto* c = leaf(mono, "prescribed", "Target profile of the prescribed-series construction");
    c->add_option("--a", a_arg)->required();
    c->add_option("--d", d_param)->required();
    c->add_option("--p", p_param)->required();
    c->callback([&] {
      action = [&] {
        return io::to_json(monomial::prescribed_check(ctx.series(a_arg, "a"), static_cast<unsigned>(d_param),
                                                      static_cast<unsigned>(p_param), order));
      };
    });
  }

  // invariants --------------------------------------------------------------
  auto* inv = app.add_subcommand("invariants", "Hilbert series of invariant algebras");
  inv->require_subcommand(1);
  auto group = [&] {
    if (group_arg == "S2" || group_arg == "C3") return invariants::named_group(group_arg);
    return io::group_from_json(ctx.read_json(group_arg, "group"));
  };
  {
    auto* c = leaf(inv, "closure", "Group generated by matrices");
    c->add_option("--gens", gens_arg, "JSON array of matrices")->required();
    c->add_option("--max-order", max_group);
    c->callback([&] {
      action = [&] {
        const json gens = ctx.read_json(gens_arg, "generators");
        if (!gens.is_array()) throw Error(Errc::Validation, "generators must be an array of matrices");
        std::vector<invariants::SqMatrix> mats;
        for (const json& m : gens) mats.push_back(io::matrix_from_json(m));
        return io::to_json(invariants::group_closure(mats, max_group));
      };
    });
  }
  {
    auto* c = leaf(inv, "group", "Named example group");
    c->add_option("--group", group_arg)->required();
    c->callback([&] { action = [&] { return io::to_json(group()); }; });
  }
  {
    auto* c = leaf(inv, "molien", "Commutative invariants (Molien average)");
    c->add_option("--group", group_arg, "S2, C3, or group JSON")->required();
    c->callback([&] { action = [&] { return averaged_json(invariants::molien_commutative(group(), order)); }; });
  }
  {
    auto* c = leaf(inv, "dicks-formanek", "Invariants of the free algebra (Dicks-Formanek average)");
    c->add_option("--group", group_arg, "S2, C3, or group JSON")->required();
    c->callback([&] { action = [&] { return averaged_json(invariants::dicks_formanek(group(), order)); }; });
  }
  {
    auto* c = leaf(inv, "free-generators", "a = 1 - 1/H");
    c->add_option("--input", input)->required();
    c->callback([&] {
      action = [&] {
        const auto r = invariants::free_generator_series(ctx.series(input));
        return json{{"generators", io::to_json(r.a)}, {"natural_coefficients", r.natural_coefficients}};
      };
    });
  }
  {
    auto* c = leaf(inv, "closed-form", "SL2 / UT2 invariants of the free algebra on two letters");
    c->add_option("--kind", kind_arg)->required();
    c->callback([&] {
      action = [&] { return io::to_json(invariants::closed_form_series(invariants::parse_closed_form(kind_arg), order)); };
    });
  }
  {
    auto* c = leaf(inv, "weyl-oracle", "Invariant dimensions from tensor-power combinatorics");
    c->add_option("--kind", kind_arg)->required();
    c->callback([&] {
      action = [&] { return io::to_json(invariants::weyl_oracle_dims(invariants::parse_oracle_kind(kind_arg), order)); };
    });
  }
  {
    auto* c = leaf(inv, "elliptic", "Exact expansion of the elliptic-integral series");
    c->add_option("--kind", kind_arg)->required();
    c->callback([&] {
      action = [&] {
        return io::to_json(invariants::elliptic_integral_series(invariants::parse_elliptic_kind(kind_arg), order));
      };
    });
  }

  // growth ------------------------------------------------------------------
  auto* gr = app.add_subcommand("growth", "Growth classification");
  gr->require_subcommand(1);
  {
    auto* c = leaf(gr, "gk", "GK dimension of a rational Hilbert series");
    c->add_option("--input", input, "RationalFn JSON");
    c->add_option("--num", num_arg);
    c->add_option("--den", den_arg);
    c->callback([&] {
      action = [&] {
        const std::size_t gk = !input.empty()
                                   ? growth::gk_from_rational(io::rational_from_json(ctx.read_json(input, "rational function")))
                                   : growth::gk_from_rational(io::unipoly_from_json(ctx.read_json(num_arg.empty() ? "[1]" : num_arg, "num")),
                                                              io::unipoly_from_json(ctx.read_json(den_arg.empty() ? "[1]" : den_arg, "den")));
        return json{{"gk_dim", gk}};
      };
    });
  }
  {
    auto* c = leaf(gr, "classify", "Polynomial, exponential or intermediate growth");
    c->add_option("--input", input)->required();
    c->callback([&] { action = [&] { return io::to_json(growth::classify_growth(ctx.series(input))); }; });
  }
  {
    auto* c = leaf(gr, "fatou", "Rational, or transcendental by Fatou's theorem");
    c->add_option("--input", input)->required();
    c->add_option("--max-den-deg", max_den_deg);
    c->callback([&] {
      action = [&] {
        const auto r = growth::fatou_classify(ctx.series(input), max_den_deg);
        return json{{"class", std::string(growth::to_string(r.fatou_class))},
                    {"rational", r.rational ? rational_json(*r.rational) : json(nullptr)},
                    {"growth", r.rational ? json(nullptr) : io::to_json(r.growth)},
                    {"note", r.note}};
      };
    });
  }
  {
    auto* c = leaf(gr, "hardy-ramanujan", "Exact partition count against its asymptotic");
    c->add_option("--kind", kind_arg)->required();
    c->add_option("--n", n_param)->required();
    c->callback([&] {
      action = [&] {
        const auto r = growth::hardy_ramanujan_compare(growth::parse_partition_kind(kind_arg), n_param);
        return json{{"n", n_param}, {"exact", to_string(r.exact)}, {"estimate", r.estimate}, {"ratio", r.ratio}};
      };
    });
  }

  // paper -------------------------------------------------------------------
  auto* paper_cmd = app.add_subcommand("paper", "Reproduce every worked example");
  paper_cmd->add_option("--golden", golden_arg, "Golden values file (default: built in)");
  paper_cmd->callback([&] {
    raw_action = [&] {
      const json golden = golden_arg.empty() ? paper::embedded_golden() : paper::load_golden(golden_arg);
      const std::optional<std::size_t> cap = order_opt->count() ? std::optional(order) : std::nullopt;
      const auto rows = paper::run_suite(golden, cap);
      std::ofstream file;
      std::ostream& sink = output_path.empty() ? out : (file.open(output_path), file);
      if (!sink) throw Error(Errc::Validation, "cannot write " + output_path);
      for (const auto& row : rows) sink << paper::format_row(row) << '\n';
      return paper::any_failed(rows) ? kExitSuiteFailed : kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "ValidationError", e.what());
    return kExitValidation;
  } catch (const Error& e) {
    report_error(err, errc_name(e.code()), e.what());
    return exit_code_for(e.code());
  }

  try {
    if (raw_action) return raw_action();
    const json result = action();
    const std::string text = result.dump(2) + "\n";
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path);
      if (!file) throw Error(Errc::Validation, "cannot write " + output_path);
      file << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    report_error(err, errc_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    report_error(err, "ValidationError", e.what());
    return kExitValidation;
  }
}

}  // namespace hilbert::cli

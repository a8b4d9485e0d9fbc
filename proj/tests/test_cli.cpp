#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hilbert/cli.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/paper_suite.hpp"

using namespace hilbert;
using hilbert::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  const auto r = run(args, stdin_text);
  INFO(r.err);
  REQUIRE(r.code == cli::kExitOk);
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("hilbert_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("magma section for s = 3") {
  const json j = run_json({"magma", "section", "--arities", "2:1", "--s", "3", "--order", "21"});
  const auto gens = io::series_from_json(j["generators"]);
  CHECK(gens.order() == 21);
  CHECK(gens[3] == 2);
  CHECK(gens[6] == 38);
  CHECK(gens[9] == 1262);
  CHECK(gens[21] == Rat(Int("5652760340")));
  CHECK(j["generators"]["coeffs"][12] == "51302");
}

TEST_CASE("Dicks-Formanek for S2") {
  const json j = run_json({"invariants", "dicks-formanek", "--group", "S2", "--order", "3"});
  CHECK(j["num"] == "1-t");
  CHECK(j["den"] == "1-2t");
  CHECK(j["series"]["coeffs"] == json::array({"1", "1", "2", "4"}));
}

TEST_CASE("guessing the Catalan equation from a file and from stdin") {
  const std::string catalan = run_json({"series", "catalan", "--order", "20"}).dump();
  const auto path = temp_file("catalan.json", catalan);
  const json from_file = run_json({"series", "guess-algebraic", "--input", path.string(), "--dz", "2", "--dt", "1"});
  CHECK(from_file["found"] == true);
  CHECK(from_file["text"] == "z^2 - z + t");
  const json from_stdin = run_json({"series", "guess-algebraic", "--input", "-", "--dz", "2", "--dt", "1"}, catalan);
  CHECK(from_stdin == from_file);
  std::filesystem::remove(path);
}

TEST_CASE("default order is 64") {
  CHECK(run_json({"series", "catalan"})["order"] == 64);
  CHECK(run_json({"--order", "5", "series", "catalan"})["order"] == 5);
}

TEST_CASE("outputs are deterministic and re-parse") {
  const std::vector<std::vector<std::string>> commands = {
      {"series", "named", "--kind", "euler_partitions", "--order", "30"},
      {"magma", "series", "--signature", "super-catalan", "--order", "12"},
      {"invariants", "molien", "--group", "C3", "--order", "10"},
      {"monomial", "graph", "--pres", R"({"d": 2, "forbidden": [[1, 1], [2, 1, 2]]})"},
      {"magma", "parity-ratio", "--order", "20"},
  };
  for (const auto& cmd : commands) {
    const auto first = run(cmd);
    const auto second = run(cmd);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
  const json s = run_json(commands[0]);
  CHECK(io::to_json(io::series_from_json(s)).dump(2) + "\n" == run(commands[0]).out);
  const json g = run_json({"invariants", "group", "--group", "C3"});
  CHECK(io::to_json(io::group_from_json(g)) == g);
}

TEST_CASE("every subcommand runs") {
  const std::string pres = R"({"d": 2, "forbidden": [[1, 1]]})";
  const std::string series = R"({"order": 4, "coeffs": [0, 1, 1, 2, 5]})";
  const std::string powers = R"({"order": 12, "coeffs": [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096]})";
  const std::vector<std::vector<std::string>> commands = {
      {"series", "arith", "--a", series, "--b", series, "--op", "mul"},
      {"series", "compose", "--f", series, "--g", series},
      {"series", "sqrt-one-plus", "--input", series},
      {"series", "expand-rational", "--num", "[1]", "--den", "[1, -1]", "--order", "4"},
      {"series", "expand-rational", "--input", R"({"num": [1], "den": [1, -2]})", "--order", "4"},
      {"series", "section", "--input", series, "--s", "2"},
      {"series", "lacunary", "--kind", "powers", "--d", "2", "--order", "20"},
      {"series", "find-recurrence", "--input", powers, "--max-den-deg", "2"},
      {"series", "residual", "--poly", R"([[0, 2, 1], [0, 1, -1], [1, 0, 1]])", "--input", series},
      {"series", "shift-transform", "--poly", R"([[0, 1, 1], [1, 0, -1]])"},
      {"series", "substitute-case2", "--poly", R"([[1, 0, 1]])", "--p", "[0, 0, 1]"},
      {"series", "resultant", "--q", R"([[0, 2, 1], [0, 1, -1], [1, 0, 1]])", "--b", R"([[0, 1, 1], [2, 0, -1]])"},
      {"series", "root", "--poly", R"([[0, 2, 1], [0, 1, -1], [1, 0, 1]])", "--seed", R"({"order": 1, "coeffs": [0, 1]})",
       "--order", "6"},
      {"magma", "count", "--n", "6"},
      {"magma", "nonempty", "--arities", "3:1", "--s", "2"},
      {"magma", "parity-ratio", "--order", "10"},
      {"monomial", "count", "--pres", pres, "--order", "6"},
      {"monomial", "rational", "--pres", pres},
      {"monomial", "growth", "--pres", pres},
      {"monomial", "borho-kraft", "--S", "0,2,5", "--order", "8"},
      {"monomial", "prescribed", "--a", R"({"order": 3, "coeffs": [0, 1, 0, 1]})", "--d", "2", "--p", "1", "--order", "3"},
      {"invariants", "closure", "--gens", R"([[["0", "1"], ["1", "0"]]])"},
      {"invariants", "free-generators", "--input", R"({"order": 3, "coeffs": [1, 1, 2, 4]})"},
      {"invariants", "closed-form", "--kind", "ut2_assoc_gens", "--order", "8"},
      {"invariants", "weyl-oracle", "--kind", "sl2_assoc", "--order", "8"},
      {"invariants", "elliptic", "--kind", "ut2_literal", "--order", "8"},
      {"growth", "gk", "--num", "[1]", "--den", "[1, -2, 1]"},
      {"growth", "fatou", "--input", powers, "--max-den-deg", "2"},
      {"growth", "hardy-ramanujan", "--kind", "rho", "--n", "50"},
  };
  for (const auto& cmd : commands) {
    const auto r = run(cmd);
    INFO(cmd[0] << " " << cmd[1] << ": " << r.err);
    CHECK(r.code == cli::kExitOk);
    CHECK(r.err.empty());
    CHECK(json::accept(r.out));
  }
  CHECK(run_json({"growth", "gk", "--num", "[1]", "--den", "[1, -2, 1]"})["gk_dim"] == 2);
  CHECK(run_json({"magma", "count", "--n", "6"})["count"] == "42");
  const std::string catalan = run({"series", "catalan", "--order", "40"}).out;
  CHECK(run_json({"series", "find-recurrence", "--input", "-"}, catalan)["found"] == false);
  const json fatou = run_json({"growth", "fatou", "--input", "-"}, run({"series", "expand-rational", "--num", "[1, -1]", "--den", "[1, -2]", "--order", "40"}).out);
  CHECK(fatou["class"] == "Rational");
  CHECK(fatou["rational"]["text"].get<std::string>().find("2t") != std::string::npos);
}

TEST_CASE("validation errors exit with 2") {
  const std::vector<std::vector<std::string>> commands = {
      {},
      {"bogus"},
      {"series"},
      {"series", "named", "--kind", "nope"},
      {"series", "catalan", "--unknown-flag"},
      {"--order", "abc", "series", "catalan"},
      {"series", "arith", "--a", "[1]", "--b", "[1]", "--op", "pow"},
      {"series", "section", "--input", R"({"order": 1, "coeffs": [1, 1], "extra": 0})", "--s", "2"},
      {"series", "section", "--input", R"({"order": 1, "coeffs": [1, )", "--s", "2"},
      {"series", "section", "--input", "/nonexistent/file.json", "--s", "2"},
      {"monomial", "count", "--pres", R"({"d": 2, "forbidden": [], "typo": 1})"},
      {"invariants", "molien", "--group", "S7"},
      {"magma", "series", "--arities", "two"},
      {"magma", "series", "--arities", "2:1", "--signature", "binary"},
      {"growth", "hardy-ramanujan", "--kind", "q", "--n", "10"},
      {"growth", "classify", "--input", R"({"order": 3, "coeffs": [1, 1, 1, 1]})"},
  };
  for (const auto& cmd : commands) {
    const auto r = run(cmd);
    INFO(r.err);
    CHECK(r.code == cli::kExitValidation);
    CHECK(r.out.empty());
  }
  const auto r = run({"series", "named", "--kind", "nope"});
  const json e = json::parse(r.err);
  CHECK(e["error"] == "UnknownKind");
  CHECK(e.contains("message"));
}

TEST_CASE("resource limits exit with 3") {
  const auto big = run({"magma", "count", "--n", "30", "--limit", "1000"});
  CHECK(big.code == cli::kExitResource);
  CHECK(json::parse(big.err)["error"] == "ResourceLimit");
  const auto closure = run({"invariants", "closure", "--gens", R"([[["1", "1"], ["0", "1"]]])", "--max-order", "50"});
  CHECK(closure.code == cli::kExitResource);
  CHECK(json::parse(closure.err)["error"] == "OrderExceeded");
}

TEST_CASE("output file and DOT export") {
  const auto path = std::filesystem::temp_directory_path() / "hilbert_cli_out.json";
  const auto r = run({"--output", path.string(), "series", "catalan", "--order", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  const json j = json::parse(file);
  CHECK(j["coeffs"] == json::array({"0", "1", "1", "2", "5"}));
  std::filesystem::remove(path);

  const auto dot = run({"--dot", "monomial", "graph", "--pres", R"({"d": 2, "forbidden": [[1, 1]]})"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("->") != std::string::npos);

  CHECK(run({"--output", "/nonexistent/dir/out.json", "series", "catalan"}).code == cli::kExitValidation);
}

TEST_CASE("help exits cleanly") {
  const auto top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("invariants") != std::string::npos);
  const auto sub = run({"magma", "section", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--arities") != std::string::npos);
}

TEST_CASE("paper suite policies") {
  SUBCASE("low order skips rows instead of failing") {
    const auto r = run({"paper", "--order", "8"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("SKIPPED") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS    #14") != std::string::npos);
  }
  SUBCASE("corrupted golden value fails") {
    json golden = paper::embedded_golden();
    golden["14"]["gk"] = 4;
    const auto path = temp_file("golden_bad.json", golden.dump());
    const auto r = run({"paper", "--order", "8", "--golden", path.string()});
    CHECK(r.code == cli::kExitSuiteFailed);
    CHECK(r.out.find("FAIL    #14") != std::string::npos);
    std::filesystem::remove(path);
  }
  SUBCASE("unreadable golden file") {
    const auto path = temp_file("golden_broken.json", "{ not json");
    CHECK(run({"paper", "--golden", path.string()}).code == cli::kExitValidation);
    std::filesystem::remove(path);
    json golden = paper::embedded_golden();
    golden.erase("7");
    const auto missing = temp_file("golden_missing.json", golden.dump());
    CHECK(run({"paper", "--order", "8", "--golden", missing.string()}).code == cli::kExitValidation);
    std::filesystem::remove(missing);
  }
}

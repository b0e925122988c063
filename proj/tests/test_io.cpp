#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adhm/cli.hpp"
#include "adhm/fixtures.hpp"
#include "adhm/io.hpp"
#include "adhm_support.hpp"

using namespace adhm;
using namespace testsupport;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Parsed into the unordered type: ordered_json inserts keys by linear search,
// which is quadratic on full-length trace reports.
nlohmann::json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = cli(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("adhm_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string error_of(std::string_view text) {
  try {
    parse_datum(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

AdhmDatum rand_gaussian_datum(Rng& rng, std::size_t c, std::size_t r) {
  auto p = [&](std::size_t a, std::size_t b) { return Pencil{rand_gaussian_matrix(rng, a, b), rand_matrix(rng, a, b)}; };
  return {c, r, p(c, c), p(c, c), p(c, r), p(r, c)};
}

}  // namespace

TEST_CASE("datum JSON: hand-written document") {
  const AdhmDatum x = parse_datum(R"({
    "c": 1, "r": 1,
    "B1": [[{"x0": "1/2", "x1": "-3"}]],
    "B2": [[{}]],
    "i": [[{"x1": "2+1i"}]],
    "j": [[{"x0": "0", "x1": "-1/4i"}]]
  })");
  CHECK(x.c() == 1);
  CHECK(x.b1().at_x0(0, 0) == Scalar::ratio(1, 2));
  CHECK(x.b1().at_x1(0, 0) == Scalar(-3));
  CHECK(x.b2() == Pencil::zero(1, 1));
  CHECK(x.i().at_x0(0, 0).is_zero());
  CHECK(x.i().at_x1(0, 0) == Scalar(2, 1));
  CHECK(x.j().at_x1(0, 0) == Scalar(0, Rational(-1, 4)));
  CHECK(datum_to_json(x).dump() ==
        R"({"c":1,"r":1,"B1":[[{"x0":"1/2","x1":"-3"}]],"B2":[[{}]],"i":[[{"x1":"2+1i"}]],"j":[[{"x1":"-1/4i"}]]})");
}

TEST_CASE("datum JSON round trip") {
  for (const auto& f : fixture_catalogue()) {
    CAPTURE(f.id);
    const AdhmDatum x = fixture_datum(f.id);
    CHECK(parse_datum(print_datum(x)) == x);
  }
  Rng rng(23);
  for (int n = 0; n < 150; ++n) {
    const std::size_t c = uniform(rng, 0, 4), r = uniform(rng, 0, 3);
    const AdhmDatum x = n % 2 == 0 ? rand_datum(rng, c, r, 40) : rand_gaussian_datum(rng, c, r);
    const std::string text = print_datum(x);
    CHECK(parse_datum(text) == x);
    CHECK(print_datum(parse_datum(text)) == text);
  }
}

TEST_CASE("JSON syntax errors carry line and column") {
  const std::string e = error_of("{\"c\": 1,\n \"r\": }");
  CHECK(e.find("line 2, column 7") != std::string::npos);
  CHECK(error_of("").find("line 1, column 1") != std::string::npos);
}

TEST_CASE("schema errors name the JSON path") {
  const std::string ok_b = R"("B1": [[{}]], "B2": [[{}]])";
  auto doc = [&](const std::string& body) { return "{" + body + "}"; };
  CHECK(error_of("[]").find("at $:") != std::string::npos);
  CHECK(error_of(doc(R"("r": 0, )" + ok_b + R"(, "i": [[]], "j": [])")).find("$.c") != std::string::npos);
  CHECK(error_of(doc(R"("c": -1, "r": 0)")).find("$.c") != std::string::npos);
  CHECK(error_of(doc(R"("c": 1.5, "r": 0)")).find("$.c") != std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "k": 2)")).find("$.k: unknown key") != std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[{}]], "B2": [[{}]], "i": [[]])")).find("$.j: missing") !=
        std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[{}], [{}]], "B2": [[{}]], "i": [[]], "j": [])")).find("$.B1:") !=
        std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[{}, {}]], "B2": [[{}]], "i": [[]], "j": [])")).find("$.B1[0]:") !=
        std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[3]], "B2": [[{}]], "i": [[]], "j": [])")).find("$.B1[0][0]:") !=
        std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[{"x1": 3}]], "B2": [[{}]], "i": [[]], "j": [])"))
            .find("$.B1[0][0].x1") != std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[{"x1": "1/0"}]], "B2": [[{}]], "i": [[]], "j": [])"))
            .find("$.B1[0][0].x1") != std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 0, "B1": [[{"x2": "1"}]], "B2": [[{}]], "i": [[]], "j": [])"))
            .find("$.B1[0][0].x2: unknown variable") != std::string::npos);
  CHECK(error_of(doc(R"("c": 1, "r": 1, "B1": [[{}]], "B2": [[{}]], "i": [[{}]], "j": [[{}, {}]])"))
            .find("$.j[0]:") != std::string::npos);
}

TEST_CASE("line and charge-1 argument grammar") {
  const LineConfig l = parse_lines("1,0,0,0; 0, 1/2, -1, 2+1i");
  REQUIRE(l.size() == 2);
  CHECK(l[1] == Line{0, Scalar::ratio(1, 2), -1, Scalar(2, 1)});
  CHECK(parse_lines("").empty());
  CHECK_THROWS_AS(parse_lines("1,2,3"), InputError);
  CHECK_THROWS_AS(parse_lines("1,2,3,x"), InputError);

  const Charge1Datum d = parse_charge1("x=1,0;y=2,0;z=0,1;w=0,1");
  CHECK(d.r == 2);
  CHECK(d.y == std::vector<Scalar>{2, 0});
  CHECK(d.w == std::vector<Scalar>{0, 1});
  CHECK_THROWS_AS(parse_charge1("x=1;y=2;z=0"), InputError);
  CHECK_THROWS_AS(parse_charge1("x=1;y=2;z=0;z=1"), InputError);
  CHECK_THROWS_AS(parse_charge1("x=1;y=2;z=0;q=1"), InputError);
  CHECK_THROWS_AS(parse_charge1("x=1,0;y=2;z=0;w=1"), InputError);
}

TEST_CASE("cli: check reports") {
  const auto g = cli_json({"check", "--fixture", "gitvsfj"});
  CHECK(g["adhm"] == true);
  CHECK(g["stable"] == true);
  CHECK(g["costable"] == true);
  CHECK(g["fj_semistable"] == false);
  CHECK(g["unstable_locus"]["kind"] == "whole_line");
  CHECK(g["chern"]["charge"] == 2);

  CHECK(cli_json({"check", "--fixture", "fj-counterexample"})["fj_stable"] == true);

  const std::string c0 = temp_file("c0.json", R"({"c":0,"r":2,"B1":[],"B2":[],"i":[],"j":[[],[]]})");
  const auto z = cli_json({"check", "--input", c0});
  for (const char* k : {"adhm", "stable", "costable", "regular", "fj_stable", "fj_semistable", "fj_costable",
                        "fj_regular"}) {
    CAPTURE(k);
    CHECK(z[k] == true);
  }
  CHECK(z["unstable_locus"]["empty"] == true);
}

TEST_CASE("cli: deform, du, monad, rank0") {
  const auto d = cli_json({"deform", "--fixture", "fj-counterexample"});
  CHECK(d["h0"] == 0);
  CHECK(d["h1"] == 51);
  CHECK(d["h2"] == 3);
  CHECK(d["smooth_point"] == false);
  CHECK(d["surjectivity_criterion"] == false);
  CHECK(d["euler"] == -48);
  CHECK_FALSE(d.contains("d0"));
  const auto dc = cli_json({"deform", "--fixture", "gitvsfj", "--complex"});
  CHECK(dc["d0"].size() == tangent_dim(2, 1));
  CHECK(dc["d1"].size() == 12);

  const auto u = cli_json({"du", "--fixture", "fj-counterexample"});
  CHECK(u["c_prime"] == 0);
  CHECK(u["rank0_charge"] == 3);
  CHECK(u["reassembles"] == true);
  CHECK(datum_from_json(u["rank0_part"]).r() == 0);

  const auto m = cli_json({"monad", "--fixture", "gitvsfj"});
  CHECK(m["alpha"].size() == 5);
  CHECK(m["alpha"][0][0] == nlohmann::json::parse(R"({"x0":"1","x2":"1"})"));
  CHECK(m["beta_alpha_zero"] == true);
  CHECK(m["framing"]["valid"] == true);

  const auto c2 = cli_json({"rank0", "--c2-fixtures"});
  CHECK(c2["all_pass"] == true);
  CHECK(c2["ideals"][2]["mixed_equation_ok"] == 50);

  const auto l = cli_json({"rank0", "--lines", "1,2,3,4", "--traces", "2"});
  CHECK(l["traces"]["traces"]["1"] == "1");
  CHECK(l["traces"]["traces"]["y1"] == "-1");
  CHECK(l["traces"]["traces"]["z2y2"] == "12");
  CHECK(l["relations_hold"] == true);

  const auto ch = cli_json({"rank0", "--charge1", "x=1,0;y=2,0;z=0,1;w=0,1"});
  CHECK(ch["dmu_rank"] == 3);
  CHECK(ch["agree"] == true);
  CHECK(cli_json({"rank0", "--fixture", "charge1-rank2"})["dmu_rank"] == 2);
  CHECK(cli_json({"rank0", "--fixture", "lines-demo"})["traces"]["max_len"] == 8);
}

TEST_CASE("cli: fixture listing") {
  const auto f = cli_json({"fixtures"});
  REQUIRE(f.size() == fixture_catalogue().size());
  std::vector<std::string> ids;
  for (const auto& e : f) ids.push_back(e["id"]);
  CHECK(ids == std::vector<std::string>{"gitvsfj", "fj-counterexample", "charge1-nonsingular", "charge1-rank2",
                                        "c2-components", "lines-demo"});
  const Run text = cli({"fixtures"});
  CHECK(text.code == 0);
  CHECK(text.out.find("lines-demo") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({"check", "--fixture", "gitvsfj"}).code == 0);
  CHECK(cli({"deform", "--fixture", "gitvsfj"}).code == 0);
  CHECK(cli({"--help"}).code == 0);

  const std::string bad_json = temp_file("bad.json", "{\"c\": 1,\n \"r\": }");
  const Run p = cli({"check", "--input", bad_json});
  CHECK(p.code == 2);
  CHECK(p.err.find("line 2, column 7") != std::string::npos);
  const std::string bad_schema = temp_file("schema.json", R"({"c": 1, "r": 0})");
  const Run s = cli({"check", "--input", bad_schema});
  CHECK(s.code == 2);
  CHECK(s.err.find("$.B1") != std::string::npos);

  CHECK(cli({}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "--fixture", "gitvsfj", "--input", bad_json}).code == 2);
  CHECK(cli({"check", "--fixture", "missing"}).code == 2);
  CHECK(cli({"check", "--input", "/nonexistent/datum.json"}).code == 2);
  CHECK(cli({"check", "--fixture", "fj-counterexample", "--max-c", "2"}).code == 2);
  CHECK(cli({"rank0", "--lines", "1,2,3,4;5,6,7,8;0,0,0,0", "--max-c", "2"}).code == 2);
  CHECK(cli({"rank0", "--fixture", "gitvsfj"}).code == 2);  // r != 0
  CHECK(cli({"rank0", "--lines", "1,2,3,4", "--traces", "13"}).code == 2);
  CHECK(cli({"rank0", "--lines", "1,2,3,4", "--c2-fixtures"}).code == 2);
  CHECK(cli({"monad", "--fixture", "gitvsfj", "--frobnicate"}).code == 2);

  // The monad and DU reports require ADHM data; data off the zero set is an
  // input error, not an invariant violation.
  Rng rng(29);
  const std::string off = temp_file("off.json", print_datum(rand_datum(rng, 2, 1, 0)));
  CHECK(cli({"check", "--input", off}).code == 0);
  CHECK(cli({"monad", "--input", off}).code == 2);
  CHECK(cli({"du", "--input", off}).code == 2);
  CHECK(cli({"deform", "--input", off}).code == 2);
}

TEST_CASE("cli: output is deterministic") {
  const std::vector<std::vector<std::string>> runs{
      {"check", "--fixture", "gitvsfj"},         {"check", "--fixture", "fj-counterexample", "--json"},
      {"monad", "--fixture", "gitvsfj", "--json"}, {"deform", "--fixture", "charge1-nonsingular", "--complex"},
      {"du", "--fixture", "gitvsfj", "--json"},    {"rank0", "--fixture", "c2-components", "--json"},
      {"rank0", "--c2-fixtures"},                  {"fixtures", "--json"}};
  for (const auto& args : runs) {
    CAPTURE(args[0]);
    const Run a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

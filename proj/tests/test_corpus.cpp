#include "gbbench/bench.hpp"
#include "gbbench/corpus.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gbbench;
using EV = ExponentVector;

namespace {

std::filesystem::path systems_dir() { return bundled_systems_dir(); }
std::filesystem::path golden_dir() { return bundled_systems_dir().parent_path() / "golden"; }

const ExactPolynomial& first_poly(const SystemSpec& s) { return s.polynomials.front(); }

std::string_view published_degrees(std::string_view row) {
  for (const PublishedRow& r : published_table())
    if (r.name == row) return r.degrees;
  return {};
}

}  // namespace

TEST_CASE("parse_system reads terms exactly") {
  const SystemSpec s = parse_system("vars: x y\npoly: x^2*y + 3\n");
  REQUIRE(s.polynomials.size() == 1);
  const auto& t = first_poly(s).terms();
  CHECK(t.size() == 2);
  CHECK(t.at(EV{2, 1}) == 1);
  CHECK(t.at(EV{0, 0}) == 3);
}

TEST_CASE("grammar: implicit products, parentheses, powers, definitions, continuation") {
  const SystemSpec s = parse_system(
      "# comment\n"
      "name: demo\n"
      "vars: x y\n"
      "def: P = (x + y)\n"
      "poly: 2x y - 3 P^2\n"
      "      + (x - 1)(x + 1)\n"
      "poly: -x/2 + 1/2 y\n",
      ParseOptions{.clear_denominators = true});
  CHECK(s.name == "demo");
  REQUIRE(s.polynomials.size() == 2);
  // 2xy - 3(x^2 + 2xy + y^2) + x^2 - 1 = -2x^2 - 4xy - 3y^2 - 1
  const auto& t = first_poly(s).terms();
  CHECK(t.size() == 4);
  CHECK(t.at(EV{2, 0}) == -2);
  CHECK(t.at(EV{1, 1}) == -4);
  CHECK(t.at(EV{0, 2}) == -3);
  CHECK(t.at(EV{0, 0}) == -1);
  const auto& u = s.polynomials[1].terms();
  CHECK(u.at(EV{1, 0}) == -1);
  CHECK(u.at(EV{0, 1}) == 1);
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      (void)parse_system(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("vars: x y\npoly: x + w\n") == std::pair<std::size_t, std::size_t>{2, 11});
  CHECK(error_at("vars: x\npoly: x ^ y\n") == std::pair<std::size_t, std::size_t>{2, 11});
  CHECK(error_at("vars: x\npoly: (x + 1\n") == std::pair<std::size_t, std::size_t>{2, 13});
  CHECK(error_at("vars: x\npoly: x $ 1\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(error_at("vars: x\npoly: x/2\n").first == 2);
  CHECK(error_at("vars: x\npoly: x/(x+1)\n").first == 2);
  CHECK(error_at("poly: x\n").first == 1);
  CHECK(error_at("vars: x x\n").first == 1);
  CHECK(error_at("vars: x\ncolour: red\n").first == 2);
  CHECK(error_at("vars: x\n  x + 1\n").first == 2);
  CHECK(error_at("name: nothing\n").first != 0);
}

TEST_CASE("clear_denominators") {
  const SystemSpec ints = parse_system("vars: x y\npoly: 4x + 6y\n");
  CHECK(clear_denominators(ints) == ints);
  const ParseOptions clear{.clear_denominators = true};
  CHECK(parse_system("vars: x y\npoly: x/2 + y/3\n", clear) == parse_system("vars: x y\npoly: 3x + 2y\n"));
  CHECK(parse_system("vars: x\npoly: x/2 + 1/2\n", clear) == parse_system("vars: x\npoly: x + 1\n"));
}

TEST_CASE("coefficients reduce modulo p at conversion") {
  const SystemSpec s = parse_system("vars: x\npoly: 32004 x - 32005\n");
  auto r = test::ring(1);
  const Polynomial f = to_polynomials(s, r).front();
  CHECK(f.coeff(0) == 1);
  CHECK(f.coeff(1) == 32001);
  const SystemSpec zero = parse_system("vars: x\npoly: 32003 x\n");
  CHECK(to_polynomials(zero, r).front().is_zero());
}

TEST_CASE("generators") {
  CHECK(cyclic_system(2).polynomials == parse_system("vars: x1 x2\npoly: x1 + x2\npoly: x1 x2 - 1\n").polynomials);
  CHECK(cyclic_system(3).polynomials ==
        parse_system("vars: x1 x2 x3\npoly: x1 + x2 + x3\npoly: x1 x2 + x2 x3 + x3 x1\npoly: x1 x2 x3 - 1\n")
            .polynomials);
  CHECK(total_degrees(cyclic_system(6)) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  CHECK(degree_signature(cyclic_system(6)) == published_degrees("cyclic6"));
  CHECK(katsura_system(2).polynomials ==
        parse_system("vars: u0 u1\npoly: u0 + 2 u1 - 1\npoly: u0^2 + 2 u1^2 - u0\n").polynomials);
  CHECK(degree_signature(katsura_system(7)) == published_degrees("Katsura7"));
  CHECK(katsura_system(7).variables.size() == 7);
  CHECK_THROWS_AS(cyclic_system(1), DomainError);
  CHECK_THROWS_AS(katsura_system(1), DomainError);
  CHECK(resolve_systems("cyclic:4").front() == cyclic_system(4));
  CHECK(resolve_systems("katsura:5").front() == katsura_system(5));
  CHECK_THROWS_AS(resolve_systems("cyclic:x"), DomainError);
  CHECK_THROWS_AS(resolve_systems("/no/such/file.sys"), DomainError);
}

TEST_CASE("bundled systems") {
  const auto all = load_systems(systems_dir());
  REQUIRE(all.size() == 6);
  for (const SystemSpec& s : all) {
    CAPTURE(s.name);
    CHECK_FALSE(s.provenance.empty());
    CHECK(parse_system(render_system(s)) == s);
  }

  const SystemSpec l1 = load_system_file(systems_dir() / "lichtblau1.sys");
  CHECK(l1.variables == std::vector<std::string>{"t", "x", "y", "z", "a", "b", "c", "d", "e"});
  CHECK(l1.polynomials.size() == 4);
  CHECK(first_poly(l1) == parse_system("vars: t x y z a b c d e\npoly: t^4 z b + x^3 y a\n").polynomials[0]);

  const SystemSpec gv = load_system_file(systems_dir() / "giovini_variation.sys");
  CHECK(gv.polynomials.size() == 6);
  CHECK(gv.variables.size() == 9);
  CHECK(render_polynomial(first_poly(gv), gv.variables) == "-a*y^82 + z^23*x^33");
}

TEST_CASE("degree audit against the published table") {
  auto sig = [](const char* file) { return degree_signature(load_system_file(bundled_systems_dir() / file)); };
  CHECK(sig("mathematica_help.sys") == published_degrees("Mathematica help"));
  CHECK(sig("giovini_variation.sys") == published_degrees("variation on Giovini 3.7"));
  // The printed Lichtblau systems carry the degree and variable signatures of
  // the table rows labelled one number higher (cyclically).
  CHECK(sig("lichtblau1.sys") == "11*10*6^2");
  CHECK(sig("lichtblau1.sys") == published_degrees("Lichtblau 2"));
  CHECK(sig("lichtblau2.sys") == published_degrees("Lichtblau 3"));
  CHECK(sig("lichtblau3.sys") == "5^3*4");
  CHECK(published_degrees("Lichtblau 1") == "5^3");
  // One more quartic than the table lists.
  CHECK(sig("trott.sys") == "4^4*3");
  CHECK(published_degrees("Trott geometry") == "4^3*3");
}

TEST_CASE("permute_variables") {
  const SystemSpec s = parse_system("vars: x y z\npoly: x^2 y + z\n");
  const std::vector<std::size_t> perm = {2, 0, 1};
  const SystemSpec p = permute_variables(s, perm);
  CHECK(p.variables == std::vector<std::string>{"z", "x", "y"});
  CHECK(p.polynomials == parse_system("vars: z x y\npoly: x^2 y + z\n").polynomials);
  const std::vector<std::size_t> bad = {0, 0, 1};
  CHECK_THROWS_AS(permute_variables(s, bad), DomainError);
}

TEST_CASE("reduced bases match an independent computer-algebra system") {
  struct Case {
    SystemSpec input;
    const char* golden;
  };
  for (const Case& c : {Case{cyclic_system(3), "cyclic3.sys"}, Case{cyclic_system(4), "cyclic4.sys"},
                        Case{katsura_system(4), "katsura4.sys"}}) {
    CAPTURE(c.golden);
    const SystemSpec golden = load_system_file(golden_dir() / c.golden);
    REQUIRE(golden.variables == c.input.variables);
    const std::size_t n = golden.variables.size();
    for (const auto& order : test::all_orders(n)) {
      auto r = test::ring(n, order);
      const auto input = to_polynomials(c.input, r);
      GroebnerResult res = buchberger(input, SelectionStrategy::induced_order());
      REQUIRE(res.completed());
      const auto mine = reduce_basis(res.basis);
      const auto theirs = reduce_basis(to_polynomials(golden, r));
      CHECK(same_bases(mine, theirs));
    }
  }
}

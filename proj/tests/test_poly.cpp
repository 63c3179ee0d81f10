#include "gbbench/poly.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace gbbench;
using test::poly;
using test::polys;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<std::int64_t> c(1, 32002);
  std::vector<std::pair<std::int64_t, ExponentVector>> t;
  for (int i = 0; i < terms; ++i) {
    ExponentVector v(r->nvars());
    for (auto& x : v) x = e(rng);
    t.emplace_back(c(rng), v);
  }
  return Polynomial::from_terms(r, t);
}

}  // namespace

TEST_CASE("add_poly") {
  for (const auto& order : test::all_orders(2)) {
    auto r = test::ring(2, order);
    const Polynomial f = poly(r, XY, "x^2 + 3 x y - 1");
    CHECK(add_poly(f, Polynomial(r)) == f);
    CHECK(add_poly(poly(r, XY, "x + y"), poly(r, XY, "32002 x + 32002 y")).is_zero());
    CHECK(add_poly(poly(r, XY, "x^2 + 1"), poly(r, XY, "x + 1")) == poly(r, XY, "x^2 + x + 2"));
    CHECK(sub_poly(f, f).is_zero());
  }
}

TEST_CASE("context mismatch is a domain error") {
  auto r2 = test::ring(2), r3 = test::ring(3);
  auto rs = test::ring(2, MonomialOrder::native_subtotal());
  CHECK_THROWS_AS(add_poly(poly(r2, XY, "x"), poly(r3, XYZ, "x")), DomainError);
  CHECK_THROWS_AS(add_poly(poly(r2, XY, "x"), poly(rs, XY, "x")), DomainError);
  CHECK_THROWS_AS(Ring(2, MonomialOrder::matrix_cached(subtotal_weight_matrix(3))), DomainError);
}

TEST_CASE("terms are strictly descending and combined") {
  auto r = test::ring(2);
  const Polynomial f = poly(r, XY, "1 + y + x + x y + y^2 + x^2 + x");
  CHECK(f.is_strictly_descending());
  CHECK(f.size() == 6);
  CHECK(f.to_string(XY) == "x^2 + x*y + y^2 + 2*x + y + 1");
  CHECK(poly(r, XY, "x - x").is_zero());
}

TEST_CASE("mul_term") {
  for (const auto& order : test::all_orders(2)) {
    auto r = test::ring(2, order);
    const Polynomial f = poly(r, XY, "x + y");
    const Polynomial one = poly(r, XY, "1");
    CHECK(mul_term(f, 1, one.leading_monomial()) == f);
    const Polynomial x = poly(r, XY, "x");
    CHECK(mul_term(f, 3, x.leading_monomial()) == poly(r, XY, "3 x^2 + 3 x y"));
  }
}

TEST_CASE("mul_term updates cached weights by addition") {
  auto r = test::ring(3, MonomialOrder::matrix_cached(subtotal_weight_matrix(3)));
  const Polynomial f = poly(r, XYZ, "x z");
  const Polynomial m = poly(r, XYZ, "y^2");
  CHECK(std::vector<Weight>(f.weights(0).begin(), f.weights(0).end()) == std::vector<Weight>{2, 1, 1});
  CHECK(std::vector<Weight>(m.weights(0).begin(), m.weights(0).end()) == std::vector<Weight>{2, 2, 0});
  const auto before = r->counters();
  const Polynomial p = mul_term(f, 1, m.leading_monomial());
  CHECK(r->counters().input_weight_products == before.input_weight_products);
  CHECK(r->counters().derived_weight_products == before.derived_weight_products);
  CHECK(std::vector<Weight>(p.weights(0).begin(), p.weights(0).end()) == std::vector<Weight>{4, 3, 1});
  CHECK(audit_cached_weights(p) == 0);
}

TEST_CASE("div_monomial") {
  using EV = ExponentVector;
  CHECK(*div_monomial(ExponentSpan(EV{2, 1}), ExponentSpan(EV{2, 1})) == EV{0, 0});
  CHECK(*div_monomial(ExponentSpan(EV{2, 1}), ExponentSpan(EV{1, 0})) == EV{1, 1});
  CHECK_FALSE(div_monomial(ExponentSpan(EV{1, 2}), ExponentSpan(EV{2, 0})));
  CHECK_THROWS_AS(div_monomial(ExponentSpan(EV{1, 2}), ExponentSpan(EV{2})), DomainError);

  auto r = test::ring(3, MonomialOrder::matrix_cached(subtotal_weight_matrix(3)));
  const Monomial a = make_monomial(*r, {3, 2, 1}), b = make_monomial(*r, {1, 2, 0});
  auto q = div_monomial(a.view(), b.view());
  REQUIRE(q);
  CHECK(q->exps == ExponentVector{2, 0, 1});
  CHECK(q->weights == make_monomial(*r, {2, 0, 1}).weights);
}

TEST_CASE("s_polynomial") {
  for (const auto& order : test::all_orders(2)) {
    auto r = test::ring(2, order);
    const Polynomial f = poly(r, XY, "x^2 - 1");
    CHECK(s_polynomial(f, f).is_zero());
    CHECK(s_polynomial(f, poly(r, XY, "x y - 1")) == poly(r, XY, "x - y"));
    CHECK(s_polynomial(poly(r, XY, "x + y"), poly(r, XY, "x y - 1")) == poly(r, XY, "y^2 + 1"));
    CHECK_THROWS_AS(s_polynomial(f, Polynomial(r)), DomainError);
  }
}

TEST_CASE("reduce") {
  for (const auto& order : test::all_orders(2)) {
    auto r = test::ring(2, order);
    const auto g1 = polys(r, XY, {"x^2 - y"});
    CHECK(reduce(Polynomial(r), g1).is_zero());
    CHECK(reduce(poly(r, XY, "x^2"), g1) == poly(r, XY, "y"));
    const auto g2 = polys(r, XY, {"x + y", "y^2 + 1"});
    CHECK(reduce(poly(r, XY, "x y - 1"), g2).is_zero());
  }
}

TEST_CASE("reduction properties on random inputs") {
  std::mt19937_64 rng(3);
  for (const auto& order : test::all_orders(3)) {
    auto r = test::ring(3, order);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Polynomial> g;
      for (int k = 0; k < 3; ++k) g.push_back(random_poly(r, rng, 4, 3));
      const Polynomial f = random_poly(r, rng, 8, 4);
      const Polynomial h = reduce(f, g);
      REQUIRE(h.is_strictly_descending());
      CHECK(reduce(h, g) == h);
      if (!h.is_zero())
        CHECK(r->order().compare(h.leading_monomial(), f.leading_monomial()) != Ordering3::greater);
      for (std::size_t t = 0; t < h.size(); ++t)
        for (const Polynomial& gi : g) CHECK_FALSE(divides(gi.exps(0), h.exps(t)));
      CHECK(audit_cached_weights(h) == 0);
    }
  }
}

TEST_CASE("cached weights stay coherent through arithmetic") {
  std::mt19937_64 rng(5);
  for (auto w : {subtotal_weight_matrix(4), degrevlex_weight_matrix(4)}) {
    auto r = test::ring(4, MonomialOrder::matrix_cached(w));
    for (int trial = 0; trial < 50; ++trial) {
      const Polynomial f = random_poly(r, rng, 6, 3), g = random_poly(r, rng, 6, 3);
      CHECK(audit_cached_weights(add_poly(f, g)) == 0);
      CHECK(audit_cached_weights(mul_term(f, 5, g.leading_monomial())) == 0);
      CHECK(audit_cached_weights(s_polynomial(f, g)) == 0);
      CHECK(audit_cached_weights(make_monic(f)) == 0);
    }
  }
}

TEST_CASE("make_monic and scale") {
  auto r = test::ring(2);
  CHECK(make_monic(poly(r, XY, "2 x + 2 y")) == poly(r, XY, "x + y"));
  CHECK(scale(poly(r, XY, "x + y"), 0).is_zero());
  CHECK(leading_term(poly(r, XY, "3 x^2 + y")) == poly(r, XY, "3 x^2"));
  CHECK(drop_leading(poly(r, XY, "3 x^2 + y")) == poly(r, XY, "y"));
}

TEST_CASE("one weight product per distinct input monomial") {
  auto r = test::ring(2, MonomialOrder::matrix_cached(subtotal_weight_matrix(2)));
  const SystemSpec s = parse_system("vars: x y\npoly: x^2 + x y + 1\npoly: x y - x^2 + y\n");
  (void)to_polynomials(s, r);
  CHECK(r->counters().input_weight_products == distinct_monomials(s));
  CHECK(distinct_monomials(s) == 4);
}

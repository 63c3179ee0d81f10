#include "gbbench/modfield.hpp"

#include <doctest.h>

#include <random>

using namespace gbbench;

TEST_CASE("add wraps to canonical representatives") {
  CHECK(add(FieldElement(32002), FieldElement(1)).value() == 0);
  CHECK(add(FieldElement(16001), FieldElement(16002)).value() == 0);
  for (std::int64_t x : {0, 1, 17, 32002}) CHECK(add(FieldElement(0), FieldElement(x)).value() == x);
}

TEST_CASE("mul") {
  for (std::int64_t x : {0, 1, 17, 32002}) CHECK(mul(FieldElement(1), FieldElement(x)).value() == x);
  CHECK(mul(FieldElement(32002), FieldElement(32002)).value() == 1);
  CHECK(mul(FieldElement(2), FieldElement(16002)).value() == 1);
}

TEST_CASE("inv") {
  CHECK(inv(FieldElement(1)).value() == 1);
  CHECK(inv(FieldElement(2)).value() == 16002);
  CHECK(inv(FieldElement(32002)).value() == 32002);
  CHECK_THROWS_AS(inv(FieldElement(0)), DivisionByZero);
  CHECK_THROWS_AS(PrimeField().inv(0), DivisionByZero);
}

TEST_CASE("every nonzero element of Z_32003 has an inverse") {
  const PrimeField f;
  std::uint32_t bad = 0;
  for (Coeff a = 1; a < f.modulus(); ++a)
    if (f.mul(a, f.inv(a)) != 1) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("construction reduces to canonical form") {
  CHECK(FieldElement(-1).value() == 32002);
  CHECK(FieldElement(32003).value() == 0);
  CHECK(FieldElement(-64007).value() == 32002);
  CHECK(FieldElement(10, 7).value() == 3);
  CHECK(FieldElement(10, 7).modulus() == 7);
}

TEST_CASE("modulus mismatch is a domain error") {
  CHECK_THROWS_AS(add(FieldElement(1, 7), FieldElement(1, 11)), DomainError);
  CHECK_THROWS_AS(mul(FieldElement(1, 7), FieldElement(1, 11)), DomainError);
  CHECK_THROWS_AS(sub(FieldElement(1, 7), FieldElement(1, 11)), DomainError);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(PrimeField(32001), DomainError);  // 32001 = 3 * 10667
  CHECK_THROWS_AS(PrimeField(2), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  CHECK_NOTHROW(PrimeField(4294967291u));  // largest prime below 2^32
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32005));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {32003u, 65521u, 4294967291u}) {
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int i = 0; i < 20000; ++i) {
      FieldElement a(static_cast<std::int64_t>(d(rng)), p), b(static_cast<std::int64_t>(d(rng)), p),
          c(static_cast<std::int64_t>(d(rng)), p);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - b) + b == a);
      REQUIRE((a * b).value() < p);
      if (a.value() != 0) REQUIRE(a * inv(a) == FieldElement(1, p));
    }
  }
}

TEST_CASE("raw helpers") {
  const PrimeField f;
  CHECK(f.from_int(-5) == 31998);
  CHECK(f.to_signed(31998) == -5);
  CHECK(f.to_signed(16001) == 16001);
  CHECK(f.neg(0) == 0);
  CHECK(f.sub(0, 1) == 32002);
}

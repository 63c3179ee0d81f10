#include "gbbench/modfield.hpp"

#include <string>

namespace gbbench {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in Z_" + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(PrimeField(modulus).from_int(value)), modulus_(modulus) {}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus())
    throw DomainError("field elements have different moduli (" + std::to_string(a.modulus()) +
                      " vs " + std::to_string(b.modulus()) + ")");
}
}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
  require_same(a, b);
  std::uint64_t s = std::uint64_t{a.value_} + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return {FieldElement::Raw{}, static_cast<std::uint32_t>(s), a.modulus_};
}

FieldElement sub(FieldElement a, FieldElement b) {
  require_same(a, b);
  std::uint64_t s = std::uint64_t{a.value_} + a.modulus_ - b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return {FieldElement::Raw{}, static_cast<std::uint32_t>(s), a.modulus_};
}

FieldElement mul(FieldElement a, FieldElement b) {
  require_same(a, b);
  auto v = static_cast<std::uint32_t>((std::uint64_t{a.value_} * b.value_) % a.modulus_);
  return {FieldElement::Raw{}, v, a.modulus_};
}

FieldElement inv(FieldElement a) {
  return {FieldElement::Raw{}, PrimeField(a.modulus_).inv(a.value_), a.modulus_};
}

}  // namespace gbbench

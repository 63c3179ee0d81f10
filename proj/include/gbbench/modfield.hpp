#ifndef GBBENCH_MODFIELD_HPP
#define GBBENCH_MODFIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace gbbench {

/// Raised for precondition violations across the library (mismatched
/// moduli, dimensions, contexts, malformed input).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
public:
  using DomainError::DomainError;
};

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultModulus = 32003;

/// The prime field Z_p. p must be an odd prime below 2^32 so that the
/// product of two canonical representatives fits in 64 bits.
///
/// The raw-value member functions assume canonical inputs and do no
/// checking; they are what the polynomial code calls on the hot path.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  // Extended Euclid. Throws DivisionByZero on 0.
  Coeff inv(Coeff a) const;

  // Canonical image of an arbitrary signed integer.
  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  // Symmetric representative in (-p/2, p/2], for printing.
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// A checked element of Z_p that carries its modulus.
class FieldElement {
public:
  FieldElement(std::int64_t value, std::uint32_t modulus = kDefaultModulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend FieldElement add(FieldElement a, FieldElement b);
  friend FieldElement sub(FieldElement a, FieldElement b);
  friend FieldElement mul(FieldElement a, FieldElement b);
  friend FieldElement inv(FieldElement a);

  friend FieldElement operator+(FieldElement a, FieldElement b) { return add(a, b); }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return sub(a, b); }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return mul(a, b); }

  bool operator==(const FieldElement&) const = default;

private:
  struct Raw {};
  FieldElement(Raw, std::uint32_t value, std::uint32_t modulus)
      : value_(value), modulus_(modulus) {}

  std::uint32_t value_;
  std::uint32_t modulus_;
};

}  // namespace gbbench

#endif

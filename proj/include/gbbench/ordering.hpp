#ifndef GBBENCH_ORDERING_HPP
#define GBBENCH_ORDERING_HPP

#include "gbbench/modfield.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gbbench {

// Exponents are listed most-main variable first: z1 > z2 > ... > zn.
using Exponent = std::int32_t;
using ExponentVector = std::vector<Exponent>;
using ExponentSpan = std::span<const Exponent>;

using Rational = boost::multiprecision::cpp_rational;

enum class Ordering3 { less, equal, greater };

constexpr Ordering3 reverse(Ordering3 o) {
  return o == Ordering3::less ? Ordering3::greater
         : o == Ordering3::greater ? Ordering3::less
                                   : Ordering3::equal;
}

template <class T>
constexpr Ordering3 compare_values(const T& a, const T& b) {
  return a < b ? Ordering3::less : (b < a ? Ordering3::greater : Ordering3::equal);
}

std::string_view to_string(Ordering3 o);

namespace detail {

// Unchecked comparators for the polynomial hot path; callers guarantee
// a.size() == b.size().

inline Ordering3 degrevlex(const Exponent* a, const Exponent* b, std::size_t n) {
  std::int64_t da = 0, db = 0;
  for (std::size_t k = 0; k < n; ++k) {
    da += a[k];
    db += b[k];
  }
  if (da < db) return Ordering3::less;
  if (da > db) return Ordering3::greater;
  // A larger exponent in the least main variable makes the power product smaller.
  for (std::size_t k = n; k-- > 0;) {
    if (a[k] > b[k]) return Ordering3::less;
    if (a[k] < b[k]) return Ordering3::greater;
  }
  return Ordering3::equal;
}

Ordering3 subtotal_wide(const Exponent* a, const Exponent* b, std::size_t n);

// Prefix subtotals compared from the full total downwards.
inline Ordering3 subtotal(const Exponent* a, const Exponent* b, std::size_t n) {
  constexpr std::size_t kInline = 32;
  if (n > kInline) return subtotal_wide(a, b, n);
  std::int64_t sa[kInline], sb[kInline];
  std::int64_t ta = 0, tb = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ta += a[k];
    tb += b[k];
    sa[k] = ta;
    sb[k] = tb;
  }
  for (std::size_t k = n; k-- > 0;) {
    if (sa[k] > sb[k]) return Ordering3::greater;
    if (sa[k] < sb[k]) return Ordering3::less;
  }
  return Ordering3::equal;
}

inline Ordering3 lex(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > b[k]) return Ordering3::greater;
    if (a[k] < b[k]) return Ordering3::less;
  }
  return Ordering3::equal;
}

template <class T>
inline Ordering3 lex_vectors(const T* a, const T* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > b[k]) return Ordering3::greater;
    if (a[k] < b[k]) return Ordering3::less;
  }
  return Ordering3::equal;
}

// Lexicographic comparison of R*a against R*b for an n-by-n row-major
// integer matrix R, one row at a time.
inline Ordering3 by_integral_rows(const std::int64_t* rows, const Exponent* a, const Exponent* b,
                                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i, rows += n) {
    std::int64_t diff = 0;
    for (std::size_t j = 0; j < n; ++j) diff += rows[j] * (std::int64_t{a[j]} - b[j]);
    if (diff > 0) return Ordering3::greater;
    if (diff < 0) return Ordering3::less;
  }
  return Ordering3::equal;
}

}  // namespace detail

/// Total degree reverse lexicographic comparison, the classical algorithm:
/// total degrees first, then the least main variable with the larger
/// exponent loses.
Ordering3 cmp_degrevlex(ExponentSpan a, ExponentSpan b);

/// Subtotal comparison: compares the prefix sums A_k = a_1 + ... + a_k
/// against B_k for k = n down to 1. Induces the same order as
/// cmp_degrevlex.
Ordering3 cmp_subtotal(ExponentSpan a, ExponentSpan b);

/// Pure lexicographic comparison; the first differing exponent decides.
Ordering3 cmp_lex(ExponentSpan a, ExponentSpan b);

/// Square matrix of exact rationals. Each row is also kept scaled by the
/// positive LCM of its denominators so comparisons can run in int64.
class WeightMatrix {
public:
  explicit WeightMatrix(std::vector<std::vector<Rational>> rows);
  static WeightMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t dim() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  // Row i multiplied by a positive integer so every entry is integral.
  std::span<const std::int64_t> integral_row(std::size_t i) const {
    return {integral_.data() + i * n_, n_};
  }
  const std::vector<std::int64_t>& integral_entries() const { return integral_; }

  bool is_integral() const;

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t n_;
  std::vector<Rational> entries_;
  std::vector<std::int64_t> integral_;
};

using WeightVector = std::vector<Rational>;

WeightMatrix identity_matrix(std::size_t n);

/// Ones on and above the anti-diagonal: entry (i,j) is 1 when i <= n-j+1
/// (1-based). Row k sums all but the k-1 least main exponents.
WeightMatrix subtotal_weight_matrix(std::size_t n);

/// First row all ones; row i >= 2 has a single -1 in column n+2-i (1-based).
WeightMatrix degrevlex_weight_matrix(std::size_t n);

WeightMatrix multiply(const WeightMatrix& a, const WeightMatrix& b);
std::size_t rank(const WeightMatrix& w);
std::optional<WeightMatrix> inverse(const WeightMatrix& w);
bool is_lower_triangular_positive_diagonal(const WeightMatrix& w);

WeightVector weight_vector(const WeightMatrix& w, ExponentSpan a);

/// Lexicographic comparison of W*a against W*b, evaluated row by row and
/// stopping at the first differing component.
Ordering3 cmp_by_matrix(const WeightMatrix& w, ExponentSpan a, ExponentSpan b);

/// True iff W is non-singular and the topmost nonzero entry of every
/// column is positive.
bool is_admissible(const WeightMatrix& w);

/// transform * from = to, with `transform` lower triangular and a strictly
/// positive diagonal. Its existence proves that `from` and `to` order
/// exponent vectors identically.
struct TransformCertificate {
  WeightMatrix transform;
};

/// Returns the certificate L = w2 * w1^-1 when it is lower triangular with
/// positive diagonal. An empty result does not prove inequivalence.
std::optional<TransformCertificate> orders_equivalent_certificate(const WeightMatrix& w1,
                                                                  const WeightMatrix& w2);

using ExponentPair = std::pair<ExponentVector, ExponentVector>;

/// Brute force over every pair of exponent vectors with entries in
/// [0, max_degree]; returns the first pair the two matrices order
/// differently.
std::optional<ExponentPair> orders_equivalent_oracle(const WeightMatrix& w1,
                                                     const WeightMatrix& w2, int max_degree);

/// Text format: first token n, then n*n entries, each an integer or p/q.
WeightMatrix parse_weight_matrix(std::string_view text);
std::string format_weight_matrix(const WeightMatrix& w);

Rational parse_rational(std::string_view token);

}  // namespace gbbench

#endif

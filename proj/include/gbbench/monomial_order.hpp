#ifndef GBBENCH_MONOMIAL_ORDER_HPP
#define GBBENCH_MONOMIAL_ORDER_HPP

#include "gbbench/ordering.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace gbbench {

using Weight = std::int64_t;
using WeightSpan = std::span<const Weight>;

/// A power product as seen by the comparator: its exponents and, when the
/// ring caches weight vectors, the cached W*exps.
struct MonomialView {
  ExponentSpan exps;
  WeightSpan weights;
};

enum class OrderKind {
  native_degrevlex,  // classical total degree / reverse lex scan
  native_subtotal,   // prefix-subtotal scan
  matrix_direct,     // W*a computed row by row at every comparison
  matrix_cached,     // W*a computed once, then maintained by +/- under mul/div
};

std::string_view to_string(OrderKind k);

class MonomialOrder {
public:
  static MonomialOrder native_degrevlex() { return MonomialOrder(OrderKind::native_degrevlex, {}); }
  static MonomialOrder native_subtotal() { return MonomialOrder(OrderKind::native_subtotal, {}); }
  // Both throw DomainError unless `w` is admissible.
  static MonomialOrder matrix_direct(WeightMatrix w);
  static MonomialOrder matrix_cached(WeightMatrix w);

  OrderKind kind() const { return kind_; }
  const std::optional<WeightMatrix>& matrix() const { return matrix_; }
  bool caches_weights() const { return kind_ == OrderKind::matrix_cached; }
  bool uses_matrix() const { return matrix_.has_value(); }

  // Dimension the order is bound to, or 0 for the native orders.
  std::size_t dim() const { return matrix_ ? matrix_->dim() : 0; }

  Ordering3 compare(MonomialView a, MonomialView b) const {
    const std::size_t n = a.exps.size();
    switch (kind_) {
      case OrderKind::native_degrevlex: return detail::degrevlex(a.exps.data(), b.exps.data(), n);
      case OrderKind::native_subtotal: return detail::subtotal(a.exps.data(), b.exps.data(), n);
      case OrderKind::matrix_direct: return compare_direct(a.exps, b.exps);
      case OrderKind::matrix_cached:
        return detail::lex_vectors(a.weights.data(), b.weights.data(), n);
    }
    return Ordering3::equal;
  }

  // out = W' * exps where W' is the row-scaled integral form of the matrix.
  void weigh(ExponentSpan exps, std::span<Weight> out) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.matrix_ == b.matrix_;
  }

private:
  MonomialOrder(OrderKind k, std::optional<WeightMatrix> w) : kind_(k), matrix_(std::move(w)) {}

  Ordering3 compare_direct(ExponentSpan a, ExponentSpan b) const {
    return detail::by_integral_rows(matrix_->integral_entries().data(), a.data(), b.data(),
                                    a.size());
  }

  OrderKind kind_;
  std::optional<WeightMatrix> matrix_;
};

}  // namespace gbbench

#endif

#include "gbbench/monomial_order.hpp"

namespace gbbench {

std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::native_degrevlex: return "native-degrevlex";
    case OrderKind::native_subtotal: return "native-subtotal";
    case OrderKind::matrix_direct: return "matrix-direct";
    case OrderKind::matrix_cached: return "matrix-cached";
  }
  return "?";
}

MonomialOrder MonomialOrder::matrix_direct(WeightMatrix w) {
  if (!is_admissible(w)) throw DomainError("weight matrix is not admissible");
  return MonomialOrder(OrderKind::matrix_direct, std::move(w));
}

MonomialOrder MonomialOrder::matrix_cached(WeightMatrix w) {
  if (!is_admissible(w)) throw DomainError("weight matrix is not admissible");
  return MonomialOrder(OrderKind::matrix_cached, std::move(w));
}

void MonomialOrder::weigh(ExponentSpan exps, std::span<Weight> out) const {
  if (!matrix_) throw DomainError("native orders have no weight matrix");
  const std::size_t n = matrix_->dim();
  if (exps.size() != n || out.size() != n)
    throw DomainError("exponent vector length does not match weight matrix dimension");
  const std::int64_t* row = matrix_->integral_entries().data();
  for (std::size_t i = 0; i < n; ++i, row += n) {
    Weight s = 0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * exps[j];
    out[i] = s;
  }
}

}  // namespace gbbench

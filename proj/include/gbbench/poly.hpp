#ifndef GBBENCH_POLY_HPP
#define GBBENCH_POLY_HPP

#include "gbbench/modfield.hpp"
#include "gbbench/monomial_order.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gbbench {

/// Instrumentation shared by everything built over one ring.
struct RingCounters {
  std::uint64_t comparisons = 0;
  // Matrix-vector products for monomials of input polynomials.
  std::uint64_t input_weight_products = 0;
  // Matrix-vector products for monomials that cannot be reached by +/-
  // from known weights (S-pair lcms).
  std::uint64_t derived_weight_products = 0;
};

/// Polynomial context: number of variables, coefficient field and the
/// active monomial order. One ring per engine run; the counters are not
/// synchronized.
class Ring {
public:
  Ring(std::size_t nvars, MonomialOrder order, PrimeField field = PrimeField());

  static std::shared_ptr<const Ring> create(std::size_t nvars, MonomialOrder order,
                                            PrimeField field = PrimeField()) {
    return std::make_shared<const Ring>(nvars, std::move(order), field);
  }

  std::size_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  bool caches_weights() const { return order_.caches_weights(); }

  Ordering3 compare(MonomialView a, MonomialView b) const {
    ++counters_.comparisons;
    return order_.compare(a, b);
  }

  void weigh_input(ExponentSpan exps, std::span<Weight> out) const {
    ++counters_.input_weight_products;
    order_.weigh(exps, out);
  }
  void weigh_derived(ExponentSpan exps, std::span<Weight> out) const {
    ++counters_.derived_weight_products;
    order_.weigh(exps, out);
  }

  RingCounters& counters() const { return counters_; }
  void reset_counters() const { counters_ = {}; }

  // Same variable count, field and order.
  bool compatible(const Ring& other) const {
    return this == &other ||
           (nvars_ == other.nvars_ && field_ == other.field_ && order_ == other.order_);
  }

private:
  std::size_t nvars_;
  MonomialOrder order_;
  PrimeField field_;
  mutable RingCounters counters_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Owning power product. `weights` is empty unless the ring caches them,
/// in which case it always equals W*exps (the cached-term invariant).
struct Monomial {
  ExponentVector exps;
  std::vector<Weight> weights;

  MonomialView view() const { return {exps, weights}; }
};

Monomial make_monomial(const Ring& ring, ExponentVector exps);
Monomial to_monomial(MonomialView m);

/// a*b; cached weights are added, never recomputed.
Monomial mul_monomial(MonomialView a, MonomialView b);

/// a/b when b divides a; cached weights are subtracted.
std::optional<Monomial> div_monomial(MonomialView a, MonomialView b);
std::optional<ExponentVector> div_monomial(ExponentSpan a, ExponentSpan b);

/// Entrywise max. Under a caching ring its weights need one matrix product.
Monomial lcm_monomial(const Ring& ring, MonomialView a, MonomialView b);

bool divides(ExponentSpan divisor, ExponentSpan target);
std::int64_t total_degree(ExponentSpan e);

/// Memo of input-monomial weights, so each distinct monomial of an input
/// system costs exactly one matrix product.
using WeightMemo = std::map<ExponentVector, std::vector<Weight>>;

/// Sparse polynomial over Z_p. Terms are stored flat and kept strictly
/// descending under the ring's order; zero coefficients are never stored.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring);

  /// Builds from (coefficient, exponents) pairs in any order. Like terms
  /// are combined; weights for a caching ring are computed as input weights.
  static Polynomial from_terms(RingPtr ring,
                               const std::vector<std::pair<std::int64_t, ExponentVector>>& terms,
                               WeightMemo* memo = nullptr);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  ExponentSpan exps(std::size_t i) const { return {exps_.data() + i * n(), n()}; }
  WeightSpan weights(std::size_t i) const {
    return weights_.empty() ? WeightSpan{} : WeightSpan{weights_.data() + i * n(), n()};
  }
  MonomialView monomial(std::size_t i) const { return {exps(i), weights(i)}; }

  Coeff leading_coeff() const { return coeffs_.front(); }
  MonomialView leading_monomial() const { return monomial(0); }

  std::int64_t total_degree() const;

  // Linear scan with the ring comparator (does not touch the counters).
  bool is_strictly_descending() const;

  /// Coefficients and exponents agree, whatever the ring's order.
  bool same_terms(const Polynomial& other) const {
    return coeffs_ == other.coeffs_ && exps_ == other.exps_;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_->compatible(*b.ring_) && a.same_terms(b);
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  friend class TermBuilder;
  std::size_t n() const { return ring_->nvars(); }

  RingPtr ring_;
  std::vector<Coeff> coeffs_;
  std::vector<Exponent> exps_;
  std::vector<Weight> weights_;
};

/// Appends terms that the caller guarantees are strictly descending.
class TermBuilder {
public:
  explicit TermBuilder(RingPtr ring, std::size_t capacity = 0);

  void push(Coeff c, MonomialView m);
  std::size_t size() const { return poly_.size(); }
  Polynomial finish() { return std::move(poly_); }

private:
  Polynomial poly_;
};

Polynomial add_poly(const Polynomial& f, const Polynomial& g);
Polynomial sub_poly(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, Coeff c);
Polynomial make_monic(const Polynomial& f);

/// f * (c * m). Cached weights are updated by vector addition.
Polynomial mul_term(const Polynomial& f, Coeff c, MonomialView m);

/// (lcm/lt f)*f/lc(f) - (lcm/lt g)*g/lc(g). Throws on a zero argument.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
// Same, with the lcm of the leading monomials already at hand.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm);

Polynomial leading_term(const Polynomial& f);
Polynomial drop_leading(const Polynomial& f);

/// A set of reducers tried in a fixed priority order: ascending leading
/// monomial under the ring order, or ascending weight vector of the
/// leading monomial under `priority` when given. Ties go to the earlier
/// insertion. Members are stored monic.
class ReducerSet {
public:
  explicit ReducerSet(RingPtr ring, const WeightMatrix* priority = nullptr);

  std::size_t add(const Polynomial& g);
  std::size_t size() const { return polys_.size(); }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
  const std::vector<Polynomial>& polys() const { return polys_; }

  // First member, in priority order, whose leading monomial divides `m`.
  std::optional<std::size_t> find_divisor(ExponentSpan m) const;

  /// Full normal form of f. `steps` accumulates the number of reduction steps.
  Polynomial reduce(const Polynomial& f, std::uint64_t* steps = nullptr) const;

private:
  Ordering3 compare_priority(std::size_t a, std::size_t b) const;

  RingPtr ring_;
  const WeightMatrix* priority_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<Weight>> keys_;
  std::vector<std::size_t> by_priority_;
};

/// Normal form of f modulo G, with reducers chosen by smallest leading
/// monomial.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> g);

// Bit i set when variable (i mod 64) has a nonzero exponent.
std::uint64_t support_mask(ExponentSpan e);

/// Recomputes every cached weight vector by direct matrix multiplication
/// and returns the number of terms whose cache disagrees.
std::size_t audit_cached_weights(const Polynomial& f);

}  // namespace gbbench

#endif

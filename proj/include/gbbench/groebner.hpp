#ifndef GBBENCH_GROEBNER_HPP
#define GBBENCH_GROEBNER_HPP

#include "gbbench/poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbbench {

enum class SelectionKind {
  induced_order,  // pair with the order-minimal lcm
  weight_vector,  // pair whose lcm has the lexicographically minimal W*lcm
};

/// Chooses the next critical pair and, within reduction, the reducer.
class SelectionStrategy {
public:
  static SelectionStrategy induced_order() { return SelectionStrategy(SelectionKind::induced_order, {}); }
  static SelectionStrategy weight_vector(WeightMatrix w) {
    return SelectionStrategy(SelectionKind::weight_vector, std::move(w));
  }

  SelectionKind kind() const { return kind_; }
  const WeightMatrix* matrix() const { return matrix_ ? &*matrix_ : nullptr; }

private:
  SelectionStrategy(SelectionKind k, std::optional<WeightMatrix> w)
      : kind_(k), matrix_(std::move(w)) {}

  SelectionKind kind_;
  std::optional<WeightMatrix> matrix_;
};

std::string_view to_string(SelectionKind k);

struct CriticalPair {
  std::size_t i = 0;  // i < j, indices into the working basis
  std::size_t j = 0;
  Monomial lcm;
  std::vector<Weight> key;  // W*lcm for the weight-vector strategy, else empty
};

struct EngineStats {
  std::uint64_t comparisons = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_skipped_chain = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t input_weight_products = 0;
  std::uint64_t derived_weight_products = 0;
  std::uint64_t basis_size = 0;  // working basis at exit, before reduce_basis
  double wall_time = 0.0;

  std::uint64_t pairs_skipped_by_criteria() const {
    return pairs_skipped_coprime + pairs_skipped_chain;
  }
  // Every counter except wall_time.
  bool same_counters(const EngineStats& o) const;
};

struct EngineLimits {
  double max_seconds = 120.0;  // <= 0 disables the time limit
  std::uint64_t max_pairs = 0;  // 0 disables the pair limit
};

enum class RunStatus { completed, timeout };

struct GroebnerResult {
  RunStatus status = RunStatus::completed;
  std::vector<Polynomial> basis;  // working basis; partial on timeout
  EngineStats stats;

  bool completed() const { return status == RunStatus::completed; }
};

/// Buchberger's algorithm over the ring of the input polynomials, with the
/// coprime-lcm and chain criteria. The limits are checked once per
/// critical pair; on TIMEOUT the partial basis and stats are returned.
GroebnerResult buchberger(std::span<const Polynomial> input, const SelectionStrategy& strategy,
                          const EngineLimits& limits = {});

/// The unique reduced Groebner basis generated by a Groebner basis:
/// monic, interreduced, sorted by descending leading monomial.
std::vector<Polynomial> reduce_basis(std::span<const Polynomial> basis);

/// Independent check that every member of `input` and every pairwise
/// S-polynomial of `basis` reduce to zero modulo `basis`. Pairs covered by
/// the coprime criterion, or by a chain through strictly smaller lcms, are
/// not reduced.
bool verify_groebner(std::span<const Polynomial> basis, std::span<const Polynomial> input);

/// Variable permutation perm[new_position] = old_index. Variables with
/// larger total exponent across the input become more main; ties keep
/// input order.
std::vector<std::size_t> reorder_variables(std::span<const Polynomial> input);

/// Number of terms across `basis` whose cached weights disagree with a
/// direct matrix product (always 0 for non-caching rings).
std::size_t audit_cached_weights(std::span<const Polynomial> basis);

bool same_bases(std::span<const Polynomial> a, std::span<const Polynomial> b);

}  // namespace gbbench

#endif

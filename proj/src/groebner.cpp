#include "gbbench/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace gbbench {

std::string_view to_string(SelectionKind k) {
  switch (k) {
    case SelectionKind::induced_order: return "induced-order";
    case SelectionKind::weight_vector: return "weight-vector";
  }
  return "?";
}

bool EngineStats::same_counters(const EngineStats& o) const {
  return comparisons == o.comparisons && pairs_processed == o.pairs_processed &&
         pairs_skipped_coprime == o.pairs_skipped_coprime &&
         pairs_skipped_chain == o.pairs_skipped_chain && reduction_steps == o.reduction_steps &&
         zero_reductions == o.zero_reductions &&
         input_weight_products == o.input_weight_products &&
         derived_weight_products == o.derived_weight_products && basis_size == o.basis_size;
}

namespace {

using Clock = std::chrono::steady_clock;

bool coprime(ExponentSpan a, ExponentSpan b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

// Pending-pair bookkeeping for the chain criterion: pending(i, j) is true
// while (i, j) sits in the queue.
class PairTable {
public:
  void grow() { rows_.emplace_back(rows_.size(), 0); }
  bool pending(std::size_t a, std::size_t b) const {
    return a < b ? rows_[b][a] != 0 : rows_[a][b] != 0;
  }
  void set(std::size_t i, std::size_t j, bool v) { rows_[j][i] = v ? 1 : 0; }

private:
  std::vector<std::vector<char>> rows_;
};

class Engine {
  // Heap comparator: true when a is selected after b.
  auto after() const {
    return [this](const CriticalPair& a, const CriticalPair& b) {
      Ordering3 o;
      if (strategy_.matrix()) {
        ++ring_->counters().comparisons;
        o = detail::lex_vectors(a.key.data(), b.key.data(), a.key.size());
      } else {
        o = ring_->compare(a.lcm.view(), b.lcm.view());
      }
      if (o != Ordering3::equal) return o == Ordering3::greater;
      return std::pair(a.i, a.j) > std::pair(b.i, b.j);
    };
  }

public:
  Engine(RingPtr ring, const SelectionStrategy& strategy)
      : ring_(std::move(ring)), strategy_(strategy), basis_(ring_, strategy.matrix()) {}

  void add(const Polynomial& h) {
    const std::size_t j = basis_.add(h);
    table_.grow();
    for (std::size_t i = 0; i < j; ++i) {
      CriticalPair p;
      p.i = i;
      p.j = j;
      p.lcm = lcm_monomial(*ring_, basis_[i].leading_monomial(), basis_[j].leading_monomial());
      if (const WeightMatrix* w = strategy_.matrix()) {
        const std::size_t n = ring_->nvars();
        p.key.resize(n);
        const std::int64_t* row = w->integral_entries().data();
        for (std::size_t r = 0; r < n; ++r, row += n) {
          Weight s = 0;
          for (std::size_t c = 0; c < n; ++c) s += row[c] * p.lcm.exps[c];
          p.key[r] = s;
        }
      }
      queue_.push_back(std::move(p));
      std::push_heap(queue_.begin(), queue_.end(), after());
      table_.set(i, j, true);
    }
  }

  GroebnerResult run(const EngineLimits& limits, Clock::time_point start) {
    GroebnerResult result;
    EngineStats& st = result.stats;
    while (!queue_.empty()) {
      if (limits.max_seconds > 0 &&
          std::chrono::duration<double>(Clock::now() - start).count() > limits.max_seconds) {
        result.status = RunStatus::timeout;
        break;
      }
      if (limits.max_pairs != 0 && st.pairs_processed >= limits.max_pairs) {
        result.status = RunStatus::timeout;
        break;
      }
      std::pop_heap(queue_.begin(), queue_.end(), after());
      CriticalPair p = std::move(queue_.back());
      queue_.pop_back();
      table_.set(p.i, p.j, false);

      const Polynomial& fi = basis_[p.i];
      const Polynomial& fj = basis_[p.j];
      if (coprime(fi.exps(0), fj.exps(0))) {
        ++st.pairs_skipped_coprime;
        continue;
      }
      if (chain_criterion(p)) {
        ++st.pairs_skipped_chain;
        continue;
      }
      ++st.pairs_processed;
      Polynomial h = basis_.reduce(s_polynomial(fi, fj, p.lcm), &st.reduction_steps);
      if (h.is_zero()) {
        ++st.zero_reductions;
      } else {
        add(h);
      }
    }
    result.basis = basis_.polys();
    st.basis_size = basis_.size();
    return result;
  }

private:
  // Some other basis element k has lead(k) | lcm(i,j), and neither (i,k)
  // nor (j,k) is still waiting in the queue.
  bool chain_criterion(const CriticalPair& p) const {
    const std::uint64_t mask = support_mask(p.lcm.exps);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (table_.pending(p.i, k) || table_.pending(p.j, k)) continue;
      ExponentSpan lk = basis_[k].exps(0);
      if (support_mask(lk) & ~mask) continue;
      if (divides(lk, p.lcm.exps)) return true;
    }
    return false;
  }

  RingPtr ring_;
  const SelectionStrategy& strategy_;
  ReducerSet basis_;
  PairTable table_;
  std::vector<CriticalPair> queue_;
};

}  // namespace

GroebnerResult buchberger(std::span<const Polynomial> input, const SelectionStrategy& strategy,
                          const EngineLimits& limits) {
  if (input.empty()) throw DomainError("buchberger needs at least one input polynomial");
  const RingPtr& ring = input.front().ring_ptr();
  for (const Polynomial& f : input)
    if (!f.ring().compatible(*ring)) throw DomainError("input polynomials belong to different rings");
  if (strategy.matrix() && strategy.matrix()->dim() != ring->nvars())
    throw DomainError("selection matrix dimension does not match the ring");

  const auto start = Clock::now();
  const RingCounters before = ring->counters();

  Engine engine(ring, strategy);
  for (const Polynomial& f : input)
    if (!f.is_zero()) engine.add(f);
  GroebnerResult result = engine.run(limits, start);

  const RingCounters& after = ring->counters();
  result.stats.comparisons = after.comparisons - before.comparisons;
  result.stats.input_weight_products = after.input_weight_products;
  result.stats.derived_weight_products = after.derived_weight_products - before.derived_weight_products;
  result.stats.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::vector<Polynomial> reduce_basis(std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& f : basis)
    if (!f.is_zero()) g.push_back(make_monic(f));
  if (g.empty()) return g;
  const Ring& ring = g.front().ring();
  for (const Polynomial& f : g)
    if (!f.ring().compatible(ring)) throw DomainError("basis polynomials belong to different rings");

  std::vector<std::size_t> idx(g.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring.compare(g[a].leading_monomial(), g[b].leading_monomial()) == Ordering3::less;
  });
  // Ascending leads: any divisor of a lead was seen before it.
  std::vector<std::size_t> kept;
  for (std::size_t i : idx) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return divides(g[k].exps(0), g[i].exps(0));
    });
    if (!redundant) kept.push_back(i);
  }

  ReducerSet reducers(g.front().ring_ptr());
  for (std::size_t k : kept) reducers.add(g[k]);
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  // Reverse of ascending: largest leading monomial first.
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    const Polynomial& f = g[*it];
    out.push_back(add_poly(leading_term(f), reducers.reduce(drop_leading(f))));
  }
  return out;
}

bool verify_groebner(std::span<const Polynomial> basis, std::span<const Polynomial> input) {
  std::vector<Polynomial> g;
  for (const Polynomial& f : basis)
    if (!f.is_zero()) g.push_back(f);
  if (g.empty()) {
    return std::all_of(input.begin(), input.end(), [](const Polynomial& f) { return f.is_zero(); });
  }
  ReducerSet reducers(g.front().ring_ptr());
  for (const Polynomial& f : g) reducers.add(f);
  const std::size_t n = g.front().ring().nvars();
  auto lcm = [&](std::size_t a, std::size_t b) {
    ExponentVector e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = std::max(g[a].exps(0)[k], g[b].exps(0)[k]);
    return e;
  };
  // A pair is skipped when its S-polynomial is known to have a standard
  // representation: coprime leads, or some lead(k) | lcm(i,j) with both
  // lcm(i,k) and lcm(j,k) proper divisors of lcm(i,j). Proper divisibility
  // is well-founded, so the skipped pairs rest on pairs that are checked.
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].exps(0), g[j].exps(0))) continue;
      const ExponentVector lij = lcm(i, j);
      bool chained = false;
      for (std::size_t k = 0; k < g.size() && !chained; ++k) {
        if (k == i || k == j || !divides(g[k].exps(0), lij)) continue;
        chained = lcm(i, k) != lij && lcm(j, k) != lij;
      }
      if (chained) continue;
      if (!reducers.reduce(s_polynomial(g[i], g[j])).is_zero()) return false;
    }
  for (const Polynomial& f : input)
    if (!reducers.reduce(f).is_zero()) return false;
  return true;
}

std::vector<std::size_t> reorder_variables(std::span<const Polynomial> input) {
  if (input.empty()) throw DomainError("reorder_variables needs at least one polynomial");
  const std::size_t n = input.front().ring().nvars();
  std::vector<std::int64_t> count(n, 0);
  for (const Polynomial& f : input)
    for (std::size_t t = 0; t < f.size(); ++t) {
      ExponentSpan e = f.exps(t);
      for (std::size_t k = 0; k < n; ++k) count[k] += e[k];
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return count[a] > count[b]; });
  return perm;
}

std::size_t audit_cached_weights(std::span<const Polynomial> basis) {
  std::size_t bad = 0;
  for (const Polynomial& f : basis) bad += audit_cached_weights(f);
  return bad;
}

bool same_bases(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_terms(b[i])) return false;
  return true;
}

}  // namespace gbbench

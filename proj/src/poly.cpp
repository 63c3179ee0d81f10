#include "gbbench/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gbbench {

namespace {

void require_compatible(const Ring& a, const Ring& b) {
  if (!a.compatible(b)) throw DomainError("polynomials belong to different rings");
}

// p[start..] - c * m * g[1..]. The leading term of g is skipped because the
// caller has arranged for it to cancel against the term before p[start].
Polynomial sub_mul_tail(const Polynomial& p, std::size_t start, Coeff c, MonomialView m,
                        const Polynomial& g) {
  const Ring& ring = p.ring();
  const PrimeField& field = ring.field();
  const std::size_t n = ring.nvars();
  const bool cached = ring.caches_weights();
  const Coeff neg_c = field.neg(c);

  TermBuilder out(p.ring_ptr(), (p.size() - start) + g.size());
  ExponentVector te(n);
  std::vector<Weight> tw(cached ? n : 0);
  auto load = [&](std::size_t j) {
    ExponentSpan ge = g.exps(j);
    for (std::size_t k = 0; k < n; ++k) te[k] = m.exps[k] + ge[k];
    if (cached) {
      WeightSpan gw = g.weights(j);
      for (std::size_t k = 0; k < n; ++k) tw[k] = m.weights[k] + gw[k];
    }
  };
  const MonomialView tv{te, tw};

  std::size_t i = start, j = 1;
  if (j < g.size()) load(j);
  while (i < p.size() && j < g.size()) {
    switch (ring.compare(p.monomial(i), tv)) {
      case Ordering3::greater:
        out.push(p.coeff(i), p.monomial(i));
        ++i;
        break;
      case Ordering3::less:
        out.push(field.mul(neg_c, g.coeff(j)), tv);
        if (++j < g.size()) load(j);
        break;
      case Ordering3::equal: {
        Coeff s = field.add(p.coeff(i), field.mul(neg_c, g.coeff(j)));
        if (s != 0) out.push(s, tv);
        ++i;
        if (++j < g.size()) load(j);
        break;
      }
    }
  }
  for (; i < p.size(); ++i) out.push(p.coeff(i), p.monomial(i));
  while (j < g.size()) {
    out.push(field.mul(neg_c, g.coeff(j)), tv);
    if (++j < g.size()) load(j);
  }
  return out.finish();
}

// f + s*g for s in {+1, -1}.
Polynomial merge(const Polynomial& f, const Polynomial& g, bool subtract) {
  require_compatible(f.ring(), g.ring());
  const Ring& ring = f.ring();
  const PrimeField& field = ring.field();
  auto gc = [&](std::size_t j) { return subtract ? field.neg(g.coeff(j)) : g.coeff(j); };
  TermBuilder out(f.ring_ptr(), f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    switch (ring.compare(f.monomial(i), g.monomial(j))) {
      case Ordering3::greater: out.push(f.coeff(i), f.monomial(i)); ++i; break;
      case Ordering3::less: out.push(gc(j), g.monomial(j)); ++j; break;
      case Ordering3::equal: {
        Coeff s = field.add(f.coeff(i), gc(j));
        if (s != 0) out.push(s, f.monomial(i));
        ++i;
        ++j;
        break;
      }
    }
  }
  for (; i < f.size(); ++i) out.push(f.coeff(i), f.monomial(i));
  for (; j < g.size(); ++j) out.push(gc(j), g.monomial(j));
  return out.finish();
}

}  // namespace

Ring::Ring(std::size_t nvars, MonomialOrder order, PrimeField field)
    : nvars_(nvars), order_(std::move(order)), field_(field) {
  if (nvars_ < 1) throw DomainError("a ring needs at least one variable");
  if (order_.uses_matrix() && order_.dim() != nvars_)
    throw DomainError("weight matrix dimension " + std::to_string(order_.dim()) +
                      " does not match " + std::to_string(nvars_) + " variables");
}

Monomial make_monomial(const Ring& ring, ExponentVector exps) {
  if (exps.size() != ring.nvars()) throw DomainError("exponent vector length does not match ring");
  for (Exponent e : exps)
    if (e < 0) throw DomainError("negative exponent");
  Monomial m{std::move(exps), {}};
  if (ring.caches_weights()) {
    m.weights.resize(ring.nvars());
    ring.weigh_derived(m.exps, m.weights);
  }
  return m;
}

Monomial to_monomial(MonomialView m) {
  return {ExponentVector(m.exps.begin(), m.exps.end()),
          std::vector<Weight>(m.weights.begin(), m.weights.end())};
}

Monomial mul_monomial(MonomialView a, MonomialView b) {
  if (a.exps.size() != b.exps.size() || a.weights.size() != b.weights.size())
    throw DomainError("monomials have different shapes");
  Monomial r{ExponentVector(a.exps.size()), std::vector<Weight>(a.weights.size())};
  for (std::size_t k = 0; k < a.exps.size(); ++k) r.exps[k] = a.exps[k] + b.exps[k];
  for (std::size_t k = 0; k < a.weights.size(); ++k) r.weights[k] = a.weights[k] + b.weights[k];
  return r;
}

std::optional<Monomial> div_monomial(MonomialView a, MonomialView b) {
  if (a.exps.size() != b.exps.size() || a.weights.size() != b.weights.size())
    throw DomainError("monomials have different shapes");
  if (!divides(b.exps, a.exps)) return std::nullopt;
  Monomial r{ExponentVector(a.exps.size()), std::vector<Weight>(a.weights.size())};
  for (std::size_t k = 0; k < a.exps.size(); ++k) r.exps[k] = a.exps[k] - b.exps[k];
  for (std::size_t k = 0; k < a.weights.size(); ++k) r.weights[k] = a.weights[k] - b.weights[k];
  return r;
}

std::optional<ExponentVector> div_monomial(ExponentSpan a, ExponentSpan b) {
  auto q = div_monomial(MonomialView{a, {}}, MonomialView{b, {}});
  if (!q) return std::nullopt;
  return std::move(q->exps);
}

Monomial lcm_monomial(const Ring& ring, MonomialView a, MonomialView b) {
  if (a.exps.size() != b.exps.size()) throw DomainError("monomials have different lengths");
  ExponentVector e(a.exps.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(a.exps[k], b.exps[k]);
  return make_monomial(ring, std::move(e));
}

bool divides(ExponentSpan divisor, ExponentSpan target) {
  if (divisor.size() != target.size()) throw DomainError("exponent vectors have different lengths");
  for (std::size_t k = 0; k < divisor.size(); ++k)
    if (divisor[k] > target[k]) return false;
  return true;
}

std::int64_t total_degree(ExponentSpan e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

std::uint64_t support_mask(ExponentSpan e) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) m |= std::uint64_t{1} << (k % 64);
  return m;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial needs a ring");
}

Polynomial Polynomial::from_terms(RingPtr ring,
                                  const std::vector<std::pair<std::int64_t, ExponentVector>>& terms,
                                  WeightMemo* memo) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  const std::size_t n = r.nvars();
  std::map<ExponentVector, Coeff> combined;
  for (const auto& [c, e] : terms) {
    if (e.size() != n)
      throw DomainError("term has " + std::to_string(e.size()) + " exponents, ring has " +
                        std::to_string(n) + " variables");
    for (Exponent x : e)
      if (x < 0) throw DomainError("negative exponent");
    Coeff& slot = combined[e];
    slot = r.field().add(slot, r.field().from_int(c));
  }
  std::vector<Monomial> monos;
  std::vector<Coeff> coeffs;
  for (auto& [e, c] : combined) {
    if (c == 0) continue;
    Monomial m{e, {}};
    if (r.caches_weights()) {
      if (memo) {
        auto it = memo->find(e);
        if (it == memo->end()) {
          std::vector<Weight> w(n);
          r.weigh_input(e, w);
          it = memo->emplace(e, std::move(w)).first;
        }
        m.weights = it->second;
      } else {
        m.weights.resize(n);
        r.weigh_input(m.exps, m.weights);
      }
    }
    monos.push_back(std::move(m));
    coeffs.push_back(c);
  }
  std::vector<std::size_t> idx(monos.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return r.compare(monos[a].view(), monos[b].view()) == Ordering3::greater;
  });
  TermBuilder out(p.ring_, idx.size());
  for (std::size_t i : idx) out.push(coeffs[i], monos[i].view());
  return out.finish();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, gbbench::total_degree(exps(i)));
  return d;
}

bool Polynomial::is_strictly_descending() const {
  for (std::size_t i = 1; i < size(); ++i)
    if (ring_->order().compare(monomial(i - 1), monomial(i)) != Ordering3::greater) return false;
  for (Coeff c : coeffs_)
    if (c == 0 || c >= ring_->field().modulus()) return false;
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < size(); ++i) {
    std::int64_t c = ring_->field().to_signed(coeff(i));
    ExponentSpan e = exps(i);
    bool constant = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    if (i == 0) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    bool first = true;
    if (a != 1 || constant) {
      out << a;
      first = false;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first) out << '*';
      first = false;
      out << (k < names.size() ? names[k] : "x" + std::to_string(k + 1));
      if (e[k] != 1) out << '^' << e[k];
    }
  }
  return out.str();
}

TermBuilder::TermBuilder(RingPtr ring, std::size_t capacity) : poly_(std::move(ring)) {
  const std::size_t n = poly_.ring().nvars();
  poly_.coeffs_.reserve(capacity);
  poly_.exps_.reserve(capacity * n);
  if (poly_.ring().caches_weights()) poly_.weights_.reserve(capacity * n);
}

void TermBuilder::push(Coeff c, MonomialView m) {
  poly_.coeffs_.push_back(c);
  poly_.exps_.insert(poly_.exps_.end(), m.exps.begin(), m.exps.end());
  if (poly_.ring().caches_weights())
    poly_.weights_.insert(poly_.weights_.end(), m.weights.begin(), m.weights.end());
}

Polynomial add_poly(const Polynomial& f, const Polynomial& g) { return merge(f, g, false); }
Polynomial sub_poly(const Polynomial& f, const Polynomial& g) { return merge(f, g, true); }

Polynomial scale(const Polynomial& f, Coeff c) {
  const PrimeField& field = f.ring().field();
  c %= field.modulus();
  TermBuilder out(f.ring_ptr(), c == 0 ? 0 : f.size());
  if (c == 0) return out.finish();
  for (std::size_t i = 0; i < f.size(); ++i) out.push(field.mul(f.coeff(i), c), f.monomial(i));
  return out.finish();
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero() || f.leading_coeff() == 1) return f;
  return scale(f, f.ring().field().inv(f.leading_coeff()));
}

Polynomial mul_term(const Polynomial& f, Coeff c, MonomialView m) {
  const Ring& ring = f.ring();
  const std::size_t n = ring.nvars();
  if (m.exps.size() != n) throw DomainError("multiplier has the wrong number of exponents");
  const bool cached = ring.caches_weights();
  if (cached && m.weights.size() != n)
    throw DomainError("multiplier lacks cached weights for a caching ring");
  const PrimeField& field = ring.field();
  c %= field.modulus();
  TermBuilder out(f.ring_ptr(), c == 0 ? 0 : f.size());
  if (c == 0) return out.finish();
  ExponentVector te(n);
  std::vector<Weight> tw(cached ? n : 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    ExponentSpan e = f.exps(i);
    for (std::size_t k = 0; k < n; ++k) te[k] = e[k] + m.exps[k];
    if (cached) {
      WeightSpan w = f.weights(i);
      for (std::size_t k = 0; k < n; ++k) tw[k] = w[k] + m.weights[k];
    }
    // Multiplication by a monomial preserves the order of the terms.
    out.push(field.mul(f.coeff(i), c), MonomialView{te, tw});
  }
  return out.finish();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  require_compatible(f.ring(), g.ring());
  return s_polynomial(f, g, lcm_monomial(f.ring(), f.leading_monomial(), g.leading_monomial()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  require_compatible(f.ring(), g.ring());
  const PrimeField& field = f.ring().field();
  auto mf = div_monomial(lcm.view(), f.leading_monomial());
  auto mg = div_monomial(lcm.view(), g.leading_monomial());
  if (!mf || !mg) throw DomainError("lcm is not a multiple of both leading monomials");
  Polynomial a = mul_term(f, field.inv(f.leading_coeff()), mf->view());
  Polynomial b = mul_term(g, field.inv(g.leading_coeff()), mg->view());
  return sub_poly(a, b);
}

Polynomial leading_term(const Polynomial& f) {
  TermBuilder out(f.ring_ptr(), 1);
  if (!f.is_zero()) out.push(f.leading_coeff(), f.leading_monomial());
  return out.finish();
}

Polynomial drop_leading(const Polynomial& f) {
  TermBuilder out(f.ring_ptr(), f.size());
  for (std::size_t i = 1; i < f.size(); ++i) out.push(f.coeff(i), f.monomial(i));
  return out.finish();
}

ReducerSet::ReducerSet(RingPtr ring, const WeightMatrix* priority)
    : ring_(std::move(ring)), priority_(priority) {
  if (!ring_) throw DomainError("reducer set needs a ring");
  if (priority_ && priority_->dim() != ring_->nvars())
    throw DomainError("priority matrix dimension does not match the ring");
}

Ordering3 ReducerSet::compare_priority(std::size_t a, std::size_t b) const {
  Ordering3 o;
  if (priority_) {
    ++ring_->counters().comparisons;
    o = detail::lex_vectors(keys_[a].data(), keys_[b].data(), keys_[a].size());
  } else {
    o = ring_->compare(polys_[a].leading_monomial(), polys_[b].leading_monomial());
  }
  return o != Ordering3::equal ? o : compare_values(a, b);
}

std::size_t ReducerSet::add(const Polynomial& g) {
  if (g.is_zero()) throw DomainError("cannot add the zero polynomial as a reducer");
  require_compatible(*ring_, g.ring());
  const std::size_t idx = polys_.size();
  polys_.push_back(make_monic(g));
  masks_.push_back(support_mask(polys_.back().exps(0)));
  if (priority_) {
    std::vector<Weight> key(ring_->nvars());
    ExponentSpan e = polys_.back().exps(0);
    const std::size_t n = key.size();
    const std::int64_t* row = priority_->integral_entries().data();
    for (std::size_t i = 0; i < n; ++i, row += n) {
      Weight s = 0;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * e[j];
      key[i] = s;
    }
    keys_.push_back(std::move(key));
  }
  auto pos = std::lower_bound(by_priority_.begin(), by_priority_.end(), idx,
                              [&](std::size_t a, std::size_t b) {
                                return compare_priority(a, b) == Ordering3::less;
                              });
  by_priority_.insert(pos, idx);
  return idx;
}

std::optional<std::size_t> ReducerSet::find_divisor(ExponentSpan m) const {
  const std::uint64_t mask = support_mask(m);
  for (std::size_t i : by_priority_) {
    if (masks_[i] & ~mask) continue;
    if (divides(polys_[i].exps(0), m)) return i;
  }
  return std::nullopt;
}

Polynomial ReducerSet::reduce(const Polynomial& f, std::uint64_t* steps) const {
  require_compatible(*ring_, f.ring());
  const std::size_t n = ring_->nvars();
  const bool cached = ring_->caches_weights();
  TermBuilder remainder(f.ring_ptr(), f.size());
  Polynomial work = f;
  std::size_t head = 0;
  ExponentVector qe(n);
  std::vector<Weight> qw(cached ? n : 0);
  while (head < work.size()) {
    auto hit = find_divisor(work.exps(head));
    if (!hit) {
      remainder.push(work.coeff(head), work.monomial(head));
      ++head;
      continue;
    }
    const Polynomial& g = polys_[*hit];
    ExponentSpan te = work.exps(head), ge = g.exps(0);
    for (std::size_t k = 0; k < n; ++k) qe[k] = te[k] - ge[k];
    if (cached) {
      WeightSpan tw = work.weights(head), gw = g.weights(0);
      for (std::size_t k = 0; k < n; ++k) qw[k] = tw[k] - gw[k];
    }
    work = sub_mul_tail(work, head + 1, work.coeff(head), MonomialView{qe, qw}, g);
    head = 0;
    if (steps) ++*steps;
  }
  return remainder.finish();
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> g) {
  ReducerSet set(f.ring_ptr());
  for (const Polynomial& p : g)
    if (!p.is_zero()) set.add(p);
  return set.reduce(f);
}

std::size_t audit_cached_weights(const Polynomial& f) {
  if (!f.ring().caches_weights()) return 0;
  const std::size_t n = f.ring().nvars();
  std::vector<Weight> w(n);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.ring().order().weigh(f.exps(i), w);
    WeightSpan c = f.weights(i);
    if (!std::equal(w.begin(), w.end(), c.begin(), c.end())) ++bad;
  }
  return bad;
}

}  // namespace gbbench

#ifndef GBBENCH_TEST_UTIL_HPP
#define GBBENCH_TEST_UTIL_HPP

#include "gbbench/corpus.hpp"

#include <string>
#include <vector>

namespace gbbench::test {

inline RingPtr ring(std::size_t n, MonomialOrder order = MonomialOrder::native_degrevlex(),
                    std::uint32_t p = kDefaultModulus) {
  return Ring::create(n, std::move(order), PrimeField(p));
}

// Parses `text` in the system-file polynomial syntax over `vars`.
inline Polynomial poly(const RingPtr& r, const std::vector<std::string>& vars,
                       const std::string& text) {
  std::string src = "vars:";
  for (const auto& v : vars) src += " " + v;
  src += "\npoly: " + text + "\n";
  return to_polynomials(parse_system(src), r).front();
}

inline std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& vars,
                                     const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(r, vars, t));
  return out;
}

// The six order configurations under test.
inline std::vector<MonomialOrder> all_orders(std::size_t n) {
  return {MonomialOrder::native_degrevlex(),
          MonomialOrder::native_subtotal(),
          MonomialOrder::matrix_direct(degrevlex_weight_matrix(n)),
          MonomialOrder::matrix_direct(subtotal_weight_matrix(n)),
          MonomialOrder::matrix_cached(degrevlex_weight_matrix(n)),
          MonomialOrder::matrix_cached(subtotal_weight_matrix(n))};
}

}  // namespace gbbench::test

#endif

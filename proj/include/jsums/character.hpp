#pragma once

#include <cstdint>

#include "jsums/cyclo.hpp"
#include "jsums/field.hpp"

namespace jsums {

// Multiplicative character chi = T^j where T is the fixed generator of the
// character dual defined by T(g) = zeta_{q-1}. All characters vanish at 0,
// including the trivial one.
struct Character {
  std::uint32_t j = 0;
};

inline Character trivial_char() { return {0}; }
inline Character quadratic_char(const Field& f) { return {f.n() / 2}; }

inline Character chi_mul(const Field& f, Character a, Character b) {
  return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.j) + b.j) % f.n())};
}

inline Character chi_inv(const Field& f, Character a) {
  const std::uint32_t j = a.j % f.n();
  return {j == 0 ? 0 : f.n() - j};
}

Character chi_pow(const Field& f, Character a, long long k);

// (q-1)/gcd(j, q-1)
std::uint32_t chi_order(const Field& f, Character a);

// T^((q-1)/n), of order exactly n; n must divide q-1.
Character char_of_order(const Field& f, std::uint32_t n);

inline int delta_char(const Field& f, Character a) { return a.j % f.n() == 0 ? 1 : 0; }
inline int delta_elem(std::uint32_t x) { return x == 0 ? 1 : 0; }

// chi(x) as an exact cyclotomic value; chi(0) = 0 for every chi.
inline Cyclo eval_char(const Embedding& E, Character chi, std::uint32_t x) {
  if (x == 0) return E.zero();
  return E.root_of_unity(static_cast<std::uint64_t>(chi.j) * E.field().dlog(x));
}

// Sum over the order-n cyclic subgroup of the dual, recovered as an integer:
// counts the n-th roots of x, i.e. 1 at x = 0, n on nonzero n-th powers,
// 0 otherwise. n must divide q-1.
long long orthogonality_sum(const Field& f, std::uint32_t x, std::uint32_t n);

}  // namespace jsums

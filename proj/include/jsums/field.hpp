#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace jsums {

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  // Monic modulus of the extension, e+1 coefficients, constant term first.
  // Empty for prime fields. Chosen as the lexicographically least monic
  // irreducible of degree e (coefficients compared low degree first).
  std::vector<std::uint32_t> modulus;
};

// Fully materialized odd finite field F_q, q = p^e. Elements are encoded as
// integers in [0, q): the polynomial c0 + c1 t + ... + c_{e-1} t^{e-1} maps
// to c0 + c1 p + ... + c_{e-1} p^{e-1}. Multiplication goes through exp/dlog
// tables for the least-encoding generator of the unit group.
class Field {
 public:
  static Field build(std::uint32_t p, std::uint32_t e);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t e() const { return spec_.e; }
  std::uint32_t q() const { return spec_.q; }
  // Order of the unit group, q - 1.
  std::uint32_t n() const { return spec_.q - 1; }
  std::uint32_t generator() const { return g_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  // a^k with 0^0 = 1; negative k inverts (and requires a != 0).
  std::uint32_t pow(std::uint32_t a, long long k) const;
  // Image of the rational integer m under Z -> F_q.
  std::uint32_t from_int(long long m) const;
  // Discrete log base generator(); throws on 0.
  std::uint32_t dlog(std::uint32_t x) const;
  // generator()^k, k reduced mod q-1.
  std::uint32_t gpow(std::uint64_t k) const { return exp_[k % n()]; }
  // Quadratic character as an integer: 0 at 0, +1 on squares, -1 otherwise.
  int qchar(std::uint32_t x) const;
  // Square roots: {} if x is a non-square, {0} for 0, else {r, -r} ascending.
  std::vector<std::uint32_t> sqrt(std::uint32_t x) const;
  // Evaluate a polynomial given by encoded coefficients, constant term first.
  std::uint32_t eval_poly(const std::vector<std::uint32_t>& coeffs, std::uint32_t x) const;

 private:
  Field() = default;
  FieldSpec spec_;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> exp_;   // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> dlog_;  // inverse of exp_; dlog_[0] is a sentinel
};

// Maximum admissible q; env JSUMS_FIELD_CEILING overrides the default 100000.
std::uint64_t field_ceiling();

// All (p, e) with q = p^e odd prime power in [q_min, q_max], ascending by q.
std::vector<std::pair<std::uint32_t, std::uint32_t>> odd_prime_powers(std::uint32_t q_min,
                                                                      std::uint32_t q_max);

}  // namespace jsums

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jsums/character.hpp"

namespace jsums {

// J(A,B) = sum_x A(x) B(1-x).
Cyclo jacobi2(const Embedding& E, Character A, Character B);

// J_a(chi_1,...,chi_k) = sum over k-tuples with c_1+...+c_k = a of
// prod chi_i(c_i). Additive-convolution dynamic programming, O(k q^2).
Cyclo jacobi_a(const Embedding& E, std::uint32_t a, const std::vector<Character>& chis);

// Greene binomial coefficient (A choose B) = B(-1)/q * J(A, inverse(B)).
Cyclo binom(const Embedding& E, Character A, Character B);

// Jacobsthal sums. Both are rational integers; the *_int forms compute with
// integer quadratic-character arithmetic, the Cyclo forms embed them.
//   jacobsthal_phi: sum_x phi(x) phi(x^n + a)
//   jacobsthal_psi: sum_x phi(x^n + a)
long long jacobsthal_phi_int(const Field& f, std::uint32_t n, std::uint32_t a);
long long jacobsthal_psi_int(const Field& f, std::uint32_t n, std::uint32_t a);
Cyclo jacobsthal_phi(const Embedding& E, std::uint32_t n, std::uint32_t a);
Cyclo jacobsthal_psi(const Embedding& E, std::uint32_t n, std::uint32_t a);

// Generalized Jacobsthal sums over x in F_q:
//   gen_psi: prod_i phi(x^{l_i} + a_i)
//   gen_phi: phi(x) * prod_i phi(x^{l_i} + a_i)
// exps and args must have equal length >= 1 and all args must be nonzero.
// x^0 = 1 for every x, including x = 0.
long long gen_psi_int(const Field& f, const std::vector<std::uint32_t>& exps,
                      const std::vector<std::uint32_t>& args);
long long gen_phi_int(const Field& f, const std::vector<std::uint32_t>& exps,
                      const std::vector<std::uint32_t>& args);
Cyclo gen_psi(const Embedding& E, const std::vector<std::uint32_t>& exps,
              const std::vector<std::uint32_t>& args);
Cyclo gen_phi(const Embedding& E, const std::vector<std::uint32_t>& exps,
              const std::vector<std::uint32_t>& args);

// For a table f indexed by element encoding, returns
// (sum_x phi(x) f(x), sum_x f(x^2) - sum_x f(x)); the two agree identically.
std::pair<Cyclo, Cyclo> lemma_l11_transform(const Embedding& E, const std::vector<Cyclo>& table);

// Jacobi-type sum along the line (2x, -x, 1-x), whose coordinates sum to 1:
// sum_x psi(2x) chi(-x) rho(1-x). This is the three-character sum the
// quartic-restriction identities reduce to.
Cyclo line_jacobi3(const Embedding& E, Character psi, Character chi, Character rho);

}  // namespace jsums

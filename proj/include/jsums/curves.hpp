#pragma once

#include <cstdint>
#include <vector>

#include "jsums/hypergeom.hpp"

namespace jsums {

// Points at infinity on y^2 = f(x): 1 if deg f is odd, 2 if even.
int r_of(const std::vector<std::uint32_t>& poly);

// Coefficients (constant first) of prod_i (x^m + a_i), optionally times x.
std::vector<std::uint32_t> shifted_power_product_poly(const Field& f, std::uint32_t m,
                                                      const std::vector<std::uint32_t>& shifts,
                                                      bool times_x);

// #{(x,y) : y^2 = f(x)} + r_of(f), counted via the quadratic character of
// f(x) (one dlog parity test per x).
long long count_direct(const Field& f, const std::vector<std::uint32_t>& poly);

// Same count by brute force over (x, y) pairs; retained as a slow oracle.
long long count_direct_slow(const Field& f, const std::vector<std::uint32_t>& poly);

// Same count through the embedded character sum r + q + sum_x phi(f(x)),
// recovered as an integer.
long long count_charsum(const Embedding& E, const std::vector<std::uint32_t>& poly);

// Closed-form hypergeometric counts for the families
//   y^2 = (x^m + a)(x^m + b)(x^m + c)        (series includes the boundary
//                                             term phi(abc) of the expansion)
//   y^2 = x (x^m + a)(x^m + b)(x^m + c)
// under q = 1 (mod 2m), with a, b, c pairwise distinct and nonzero.
// count = q + r + series for either choice of r:
//   r_parity    - by the degree parity of f (3m resp. 3m+1)
//   r_statement - 1 for m odd, 2 for m even, independent of the family
struct FamilyHypCount {
  long long affine = 0;  // q + recovered series value = #{(x,y) on the curve}
  int r_parity = 0;
  int r_statement = 0;
  long long count_parity() const { return affine + r_parity; }
  long long count_statement() const { return affine + r_statement; }
};

FamilyHypCount count_Em_hyp(const BinomTable& bt, F21PhiTwistCache* cache, std::uint32_t m,
                            std::uint32_t a, std::uint32_t b, std::uint32_t c);
FamilyHypCount count_EmPrime_hyp(const BinomTable& bt, F21PhiTwistCache* cache, std::uint32_t m,
                                 std::uint32_t a, std::uint32_t b, std::uint32_t c);

enum class ShiftKind { SumQuadratic, RatioQuadratic };

// Nonzero roots h of the shift quadratic, ascending by encoding:
//   SumQuadratic:   3h^2 + 2(a+b+c) h + (ab+bc+ca) = 0
//   RatioQuadratic: 3h^2 + 2 (ab+bc+ca)/(bc) h + (ab+ca+a^2)/(bc) = 0
std::vector<std::uint32_t> solve_h(const Field& f, ShiftKind kind, std::uint32_t a,
                                   std::uint32_t b, std::uint32_t c);

struct ShiftData {
  std::uint32_t h = 0;
  std::uint32_t dCoef = 0;  // 3h + a+b+c
  std::uint32_t eCoef = 0;  // h^3 + (a+b+c)h^2 + (ab+bc+ca)h + abc
  std::uint32_t fCoef = 0;  // 3h + (ab+bc+ca)/bc
  std::uint32_t gCoef = 0;  // h^3 + ((ab+bc+ca)/bc)h^2 + ((ab+ca+a^2)/bc)h + a^2/bc
};

ShiftData shift_data(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                     std::uint32_t h);

// Hypergeometric evaluations of the three cubic-family sums, all requiring
// q = 1 (mod 6) and the respective coefficient (dCoef / fCoef) nonzero:
//   psi111_hyp: gen_psi((1,1,1),(a,b,c)) = q phi(-3d) 2F1(T^(n/6), T^(5n/6); eps | -27e/(4d^3))
//   phi111_hyp: gen_phi((1,1,1),(a,b,c)) = -1 + q phi(bc) phi(-3f) 2F1(... | -27g/(4f^3))
//   psi222_hyp: gen_psi((2,2,2),(a,b,c)) = -1 + both hypergeometric terms
//               (h must satisfy both shift quadratics)
Cyclo psi111_hyp(const BinomTable& bt, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 std::uint32_t h);
Cyclo phi111_hyp(const BinomTable& bt, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 std::uint32_t h);
Cyclo psi222_hyp(const BinomTable& bt, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 std::uint32_t h);

// Affine point count of y^2 = x^d + a x^(d-1) + b under q = 1 (mod 2d(d-1)):
//   d even: q + phi(b) + q^(d/2) phi(d-1) * dF_(d-1)(... | alpha)
//   d odd:  q + q^((d-1)/2) phi(-a d) * (d-1)F_(d-2)(... | -alpha)
// with alpha = b d^d / (a^d (d-1)^(d-1)).
Cyclo count_trinomial_hyp(const BinomTable& bt, std::uint32_t d, std::uint32_t a, std::uint32_t b);

}  // namespace jsums

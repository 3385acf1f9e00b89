#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "jsums/char_sums.hpp"

namespace jsums {

// Cache of all Greene binomial coefficients binom(T^i, T^j). Quadratic in
// q-1, so construction is guarded to q <= 1024; every hypergeometric value
// then costs O(q-1) instead of O((q-1) q).
class BinomTable {
 public:
  explicit BinomTable(const Embedding& E);

  const Embedding& ctx() const { return *E_; }

  const Cyclo& get(Character A, Character B) const {
    return tab_[static_cast<std::size_t>(A.j % n_) * n_ + (B.j % n_)];
  }

 private:
  const Embedding* E_;
  std::uint32_t n_;
  std::vector<Cyclo> tab_;
};

// 2F1(A, B; C | x) as the first-kind defining sum:
// eps(x) * (BC(-1)/q) * sum_y B(y) (inv(B)C)(1-y) inv(A)(1-xy).
Cyclo f21_integral(const Embedding& E, Character A, Character B, Character C, std::uint32_t x);

// 2F1(A, B; C | x) as the character-sum expansion:
// (q/(q-1)) * sum_chi binom(A chi, chi) binom(B chi, C chi) chi(x).
Cyclo f21_binomial(const BinomTable& bt, Character A, Character B, Character C, std::uint32_t x);

// General (n+1)Fn with upper characters (A_0, ..., A_n) and lower characters
// (B_1, ..., B_n): (q/(q-1)) * sum_chi binom(A_0 chi, chi) *
// prod_i binom(A_i chi, B_i chi) * chi(x).
Cyclo fpq(const BinomTable& bt, const std::vector<Character>& upper,
          const std::vector<Character>& lower, std::uint32_t x);

// Memo for the family H(u, z) = 2F1(phi, T^u; T^(u + (q-1)/2) | z), where the
// lower character is the quadratic twist of the upper one. The closed-form
// curve counts evaluate this family (q-1) times per curve with heavy reuse
// across parameter sweeps.
class F21PhiTwistCache {
 public:
  explicit F21PhiTwistCache(const BinomTable& bt) : bt_(&bt) {}

  const Cyclo& get(std::uint32_t u, std::uint32_t z);
  const BinomTable& table() const { return *bt_; }

 private:
  const BinomTable* bt_;
  std::unordered_map<std::uint64_t, Cyclo> memo_;
};

}  // namespace jsums

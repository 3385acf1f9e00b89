#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "jsums/field.hpp"

namespace jsums {

class Embedding;

// Element of Z[zeta_{q-1}, 1/q] tracked as residues under aux_count()
// modular embeddings, plus a floating-point mirror carried for diagnostics.
// Equality compares residues in every embedding; the mirror never decides.
struct Cyclo {
  std::array<std::uint64_t, 4> r{};
  std::complex<double> mirror{};
  const Embedding* ctx = nullptr;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
};

// Context of k homomorphisms Z[zeta_n] -> Z/ell_i, for auxiliary primes
// ell_i = 1 (mod n), ell_i != p, ell_i > 4q^2 (the k smallest such), each
// sending zeta_n to w_i = (least primitive root mod ell_i)^((ell_i-1)/n),
// an element of exact multiplicative order n.
class Embedding {
 public:
  explicit Embedding(const Field& f, int k = 2);

  const Field& field() const { return *f_; }
  std::uint32_t n() const { return f_->n(); }
  int aux_count() const { return k_; }
  std::uint64_t aux_prime(int i) const;

  Cyclo zero() const;
  Cyclo one() const { return from_int(1); }
  Cyclo from_int(long long m) const;
  Cyclo from_rational(long long num, long long den) const;
  Cyclo root_of_unity(std::uint64_t t) const;

  // Recover v as the unique rational integer in [lo, hi] matching every
  // embedding. Requires hi - lo < min ell_i; absence (including embedding
  // disagreement, i.e. v is not such an integer) returns nullopt.
  std::optional<long long> as_integer(const Cyclo& v, long long lo, long long hi) const;

 private:
  const Field* f_;
  int k_;
  std::array<std::uint64_t, 4> ell_{};
  std::vector<std::uint64_t> zpow_;  // row i holds zeta^t mod ell_i, t in [0, n)
  std::vector<std::complex<double>> zmirror_;
};

// Strict form of as_integer for quantities that are integers by construction
// (point counts, integer-valued character sums): failure to recover is an
// internal inconsistency, not a mathematical finding.
long long recover_integer(const Embedding& E, const Cyclo& v, long long lo, long long hi);

}  // namespace jsums

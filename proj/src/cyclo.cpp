#include "jsums/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jsums/numutil.hpp"

namespace jsums {
namespace {

void require_same_ctx(const Cyclo& a, const Cyclo& b) {
  if (a.ctx == nullptr || a.ctx != b.ctx) {
    throw std::invalid_argument("Cyclo operands belong to different embedding contexts");
  }
}

std::uint64_t least_primitive_root(std::uint64_t ell) {
  const auto factors = distinct_prime_factors(ell - 1);
  for (std::uint64_t cand = 2; cand < ell; ++cand) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (powmod(cand, (ell - 1) / r, ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw internal_error("no primitive root found");
}

}  // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
  require_same_ctx(*this, o);
  Cyclo out = *this;
  for (int i = 0; i < ctx->aux_count(); ++i) {
    const std::uint64_t ell = ctx->aux_prime(i);
    out.r[i] = (r[i] + o.r[i]) % ell;
  }
  out.mirror = mirror + o.mirror;
  return out;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  require_same_ctx(*this, o);
  Cyclo out = *this;
  for (int i = 0; i < ctx->aux_count(); ++i) {
    const std::uint64_t ell = ctx->aux_prime(i);
    out.r[i] = (r[i] + ell - o.r[i]) % ell;
  }
  out.mirror = mirror - o.mirror;
  return out;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  require_same_ctx(*this, o);
  Cyclo out = *this;
  for (int i = 0; i < ctx->aux_count(); ++i) {
    out.r[i] = mulmod(r[i], o.r[i], ctx->aux_prime(i));
  }
  out.mirror = mirror * o.mirror;
  return out;
}

Cyclo Cyclo::operator-() const {
  if (ctx == nullptr) throw std::invalid_argument("Cyclo has no embedding context");
  Cyclo out = *this;
  for (int i = 0; i < ctx->aux_count(); ++i) {
    const std::uint64_t ell = ctx->aux_prime(i);
    out.r[i] = (ell - r[i]) % ell;
  }
  out.mirror = -mirror;
  return out;
}

bool Cyclo::operator==(const Cyclo& o) const {
  require_same_ctx(*this, o);
  for (int i = 0; i < ctx->aux_count(); ++i) {
    if (r[i] != o.r[i]) return false;
  }
  return true;
}

Embedding::Embedding(const Field& f, int k) : f_(&f), k_(k) {
  if (k < 1 || k > 4) throw std::invalid_argument("embedding count must be in [1, 4]");
  const std::uint64_t n = f.n();
  const std::uint64_t q = f.q();
  const std::uint64_t bound = 4 * q * q;

  // k smallest primes ell = 1 (mod n), ell > 4q^2, ell != p.
  int found = 0;
  for (std::uint64_t ell = (bound / n + 1) * n + 1; found < k; ell += n) {
    if (ell <= bound || ell == f.p() || !is_prime(ell)) continue;
    ell_[found++] = ell;
  }

  zpow_.assign(static_cast<std::size_t>(k) * n, 1);
  for (int i = 0; i < k; ++i) {
    const std::uint64_t ell = ell_[i];
    const std::uint64_t w = powmod(least_primitive_root(ell), (ell - 1) / n, ell);
    std::uint64_t* row = zpow_.data() + static_cast<std::size_t>(i) * n;
    for (std::uint64_t t = 1; t < n; ++t) row[t] = mulmod(row[t - 1], w, ell);
    // order must be exactly n
    if (mulmod(row[n - 1], w, ell) != 1) throw internal_error("embedding root has wrong order");
    for (std::uint64_t r : distinct_prime_factors(n)) {
      if (row[n / r] == 1) throw internal_error("embedding root has wrong order");
    }
  }

  zmirror_.resize(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    zmirror_[t] = std::polar(1.0, ang);
  }
}

std::uint64_t Embedding::aux_prime(int i) const {
  if (i < 0 || i >= k_) throw std::invalid_argument("aux prime index out of range");
  return ell_[i];
}

Cyclo Embedding::zero() const {
  Cyclo v;
  v.ctx = this;
  return v;
}

Cyclo Embedding::from_int(long long m) const {
  Cyclo v;
  v.ctx = this;
  for (int i = 0; i < k_; ++i) {
    const long long ell = static_cast<long long>(ell_[i]);
    long long r = m % ell;
    if (r < 0) r += ell;
    v.r[i] = static_cast<std::uint64_t>(r);
  }
  v.mirror = {static_cast<double>(m), 0.0};
  return v;
}

Cyclo Embedding::from_rational(long long num, long long den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Cyclo v = from_int(num);
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t ell = ell_[i];
    long long d = den % static_cast<long long>(ell);
    if (d < 0) d += static_cast<long long>(ell);
    if (d == 0) throw std::invalid_argument("denominator vanishes mod aux prime " + std::to_string(ell));
    v.r[i] = mulmod(v.r[i], powmod(static_cast<std::uint64_t>(d), ell - 2, ell), ell);
  }
  v.mirror = {static_cast<double>(num) / static_cast<double>(den), 0.0};
  return v;
}

Cyclo Embedding::root_of_unity(std::uint64_t t) const {
  const std::uint64_t n = this->n();
  t %= n;
  Cyclo v;
  v.ctx = this;
  for (int i = 0; i < k_; ++i) v.r[i] = zpow_[static_cast<std::size_t>(i) * n + t];
  v.mirror = zmirror_[t];
  return v;
}

std::optional<long long> Embedding::as_integer(const Cyclo& v, long long lo, long long hi) const {
  if (v.ctx != this) throw std::invalid_argument("value from a different embedding context");
  if (lo > hi) throw std::invalid_argument("empty recovery range");
  if (static_cast<unsigned long long>(hi - lo) >= ell_[0]) {
    throw std::invalid_argument("recovery range must be narrower than the aux primes");
  }
  const long long ell0 = static_cast<long long>(ell_[0]);
  long long off = (static_cast<long long>(v.r[0]) - lo) % ell0;
  if (off < 0) off += ell0;
  const long long m = lo + off;
  if (m > hi) return std::nullopt;
  for (int i = 1; i < k_; ++i) {
    const long long ell = static_cast<long long>(ell_[i]);
    long long r = m % ell;
    if (r < 0) r += ell;
    if (static_cast<std::uint64_t>(r) != v.r[i]) return std::nullopt;
  }
  return m;
}

long long recover_integer(const Embedding& E, const Cyclo& v, long long lo, long long hi) {
  const auto m = E.as_integer(v, lo, hi);
  if (!m) {
    throw internal_error("integer recovery failed for a value that must be an integer in [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return *m;
}

}  // namespace jsums

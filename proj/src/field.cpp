#include "jsums/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "jsums/numutil.hpp"

namespace jsums {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;  // m monic, trimmed
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        const std::uint64_t v = (a[shift + i] + static_cast<std::uint64_t>(lead) * ((p - m[i]) % p)) % p;
        a[shift + i] = static_cast<std::uint32_t>(v);
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic on the fly
    const std::uint32_t lead_inv = static_cast<std::uint32_t>(powmod(b.back(), p - 2, p));
    Poly bm = b;
    for (auto& c : bm) c = static_cast<std::uint32_t>(mulmod(c, lead_inv, p));
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^d) mod f, computed by iterating the Frobenius power.
Poly frobenius_iterate(const Poly& f, std::uint32_t p, std::uint32_t d) {
  Poly x = {0, 1};
  Poly t = x;
  for (std::uint32_t i = 0; i < d; ++i) {
    // t := t^p mod f
    Poly r = {1};
    Poly base = t;
    std::uint32_t k = p;
    while (k) {
      if (k & 1) r = poly_mulmod(r, base, f, p);
      base = poly_mulmod(base, base, f, p);
      k >>= 1;
    }
    t = std::move(r);
  }
  return t;
}

// Irreducibility over F_p: no irreducible factor of degree <= e/2, tested via
// gcd(x^(p^d) - x, f) = 1 for d = 1 .. e/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  for (std::uint32_t d = 1; 2 * d <= e; ++d) {
    Poly xp = frobenius_iterate(f, p, d);
    // xp - x
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = static_cast<std::uint32_t>((xp[1] + p - 1) % p);
    trim(xp);
    Poly g = poly_gcd(f, xp, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

std::uint32_t encode(const Poly& c, std::uint32_t p, std::uint32_t e) {
  std::uint32_t v = 0;
  std::uint32_t mult = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v += (i < c.size() ? c[i] : 0) * mult;
    mult *= p;
  }
  return v;
}

Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
  Poly c(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

}  // namespace

std::uint64_t field_ceiling() {
  if (const char* env = std::getenv("JSUMS_FIELD_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 3) return v;
    throw std::invalid_argument("JSUMS_FIELD_CEILING must be an integer >= 3");
  }
  return 100000;
}

Field Field::build(std::uint32_t p, std::uint32_t e) {
  if (e < 1) throw std::invalid_argument("field degree must be >= 1");
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > field_ceiling()) {
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds ceiling " + std::to_string(field_ceiling()));
    }
  }
  const std::uint32_t q = static_cast<std::uint32_t>(q64);

  Field f;
  f.spec_.p = p;
  f.spec_.e = e;
  f.spec_.q = q;

  Poly modulus;
  if (e >= 2) {
    // Enumerate monic candidates in lexicographic order of
    // (c0, c1, ..., c_{e-1}) and keep the first irreducible one.
    std::vector<std::uint32_t> low(e, 0);
    for (std::uint64_t idx = 0;; ++idx) {
      if (idx >= q64) throw internal_error("no irreducible modulus found");
      std::uint64_t m = idx;
      for (std::uint32_t i = e; i-- > 0;) {
        low[i] = static_cast<std::uint32_t>(m % p);
        m /= p;
      }
      Poly cand(low.begin(), low.end());
      cand.push_back(1);
      if (cand[0] == 0) continue;  // root at 0
      if (poly_irreducible(cand, p)) {
        modulus = cand;
        break;
      }
    }
    f.spec_.modulus = modulus;
  }

  const std::uint32_t n = q - 1;
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e == 1) return static_cast<std::uint32_t>(mulmod(a, b, p));
    Poly pa = decode(a, p, e);
    Poly pb = decode(b, p, e);
    return encode(poly_mulmod(pa, pb, modulus, p), p, e);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) -> std::uint32_t {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  const auto factors = distinct_prime_factors(n);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (slow_pow(cand, n / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw internal_error("no generator found");
  f.g_ = g;

  f.exp_.assign(n, 1);
  f.dlog_.assign(q, n);  // dlog_[0] keeps the sentinel value n
  for (std::uint32_t k = 1; k < n; ++k) f.exp_[k] = slow_mul(f.exp_[k - 1], g);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (f.dlog_[f.exp_[k]] != n) throw internal_error("generator order too small");
    f.dlog_[f.exp_[k]] = k;
  }
  return f;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = spec_.p;
  if (spec_.e == 1) return (a + b) % p;
  std::uint32_t r = 0, mult = 1;
  while (a != 0 || b != 0) {
    r += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  const std::uint32_t p = spec_.p;
  if (spec_.e == 1) return a == 0 ? 0 : p - a;
  std::uint32_t r = 0, mult = 1;
  while (a != 0) {
    const std::uint32_t d = a % p;
    r += (d == 0 ? 0 : p - d) * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(dlog_[a]) + dlog_[b]) % n()];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  const std::uint32_t d = dlog_[a];
  return exp_[d == 0 ? 0 : n() - d];
}

std::uint32_t Field::pow(std::uint32_t a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;  // x^0 = 1 for every x, including 0
    if (k < 0) throw std::invalid_argument("negative power of zero");
    return 0;
  }
  const long long nn = n();
  long long km = k % nn;
  if (km < 0) km += nn;
  return exp_[mulmod(dlog_[a], static_cast<std::uint64_t>(km), nn)];
}

std::uint32_t Field::from_int(long long m) const {
  const long long p = spec_.p;
  long long r = m % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::dlog(std::uint32_t x) const {
  if (x == 0) throw std::invalid_argument("dlog of zero");
  if (x >= spec_.q) throw std::invalid_argument("element out of range");
  return dlog_[x];
}

int Field::qchar(std::uint32_t x) const {
  if (x == 0) return 0;
  return (dlog_[x] & 1) == 0 ? 1 : -1;
}

std::vector<std::uint32_t> Field::sqrt(std::uint32_t x) const {
  if (x == 0) return {0};
  const std::uint32_t d = dlog_[x];
  if (d & 1) return {};
  const std::uint32_t r = exp_[d / 2];
  const std::uint32_t s = neg(r);
  return {std::min(r, s), std::max(r, s)};
}

std::uint32_t Field::eval_poly(const std::vector<std::uint32_t>& coeffs, std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
  return acc;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> odd_prime_powers(std::uint32_t q_min,
                                                                      std::uint32_t q_max) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t q = std::max(q_min, 3u); q <= q_max; ++q) {
    if (q % 2 == 0) continue;
    const auto fs = distinct_prime_factors(q);
    if (fs.size() != 1) continue;
    const std::uint32_t p = static_cast<std::uint32_t>(fs[0]);
    std::uint32_t e = 0;
    std::uint64_t v = 1;
    while (v < q) {
      v *= p;
      ++e;
    }
    if (v == q) out.emplace_back(p, e);
  }
  return out;
}

}  // namespace jsums

#include "jsums/hypergeom.hpp"

#include <stdexcept>

namespace jsums {

BinomTable::BinomTable(const Embedding& E) : E_(&E), n_(E.n()) {
  const Field& f = E.field();
  if (f.q() > 1024) {
    throw std::invalid_argument("BinomTable is limited to q <= 1024 (quadratic memory)");
  }
  tab_.assign(static_cast<std::size_t>(n_) * n_, E.zero());

  // binom(T^a, T^b) = T^b(-1)/q * J(T^a, T^-b). Accumulate all Jacobi sums
  // in one pass over x using the dlog pair (u, v) = (dlog x, dlog(1-x)).
  const Cyclo inv_q = E.from_rational(1, f.q());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(f.q() - 2);
  for (std::uint32_t x = 2; x < f.q(); ++x) {  // x = 0, 1 contribute nothing
    pairs.emplace_back(f.dlog(x), f.dlog(f.sub(1, x)));
  }
  const std::uint32_t dneg1 = f.dlog(f.neg(1));
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      Cyclo j = E.zero();
      const std::uint32_t binv = (n_ - b) % n_;
      // x = 0 and x = 1 never contribute: every character vanishes at 0,
      // the trivial one included.
      for (const auto& [u, v] : pairs) {
        j += E.root_of_unity(static_cast<std::uint64_t>(a) * u + static_cast<std::uint64_t>(binv) * v);
      }
      tab_[static_cast<std::size_t>(a) * n_ + b] =
          E.root_of_unity(static_cast<std::uint64_t>(b) * dneg1) * inv_q * j;
    }
  }
}

Cyclo f21_integral(const Embedding& E, Character A, Character B, Character C, std::uint32_t x) {
  const Field& f = E.field();
  if (x == 0) return E.zero();
  const Character BC = chi_mul(f, B, C);
  const Character BbarC = chi_mul(f, chi_inv(f, B), C);
  const Character Abar = chi_inv(f, A);
  Cyclo s = E.zero();
  for (std::uint32_t y = 0; y < f.q(); ++y) {
    s += eval_char(E, B, y) * eval_char(E, BbarC, f.sub(1, y)) *
         eval_char(E, Abar, f.sub(1, f.mul(x, y)));
  }
  return eval_char(E, BC, f.neg(1)) * E.from_rational(1, f.q()) * s;
}

Cyclo f21_binomial(const BinomTable& bt, Character A, Character B, Character C, std::uint32_t x) {
  return fpq(bt, {A, B}, {C}, x);
}

Cyclo fpq(const BinomTable& bt, const std::vector<Character>& upper,
          const std::vector<Character>& lower, std::uint32_t x) {
  if (upper.size() < 2 || upper.size() != lower.size() + 1) {
    throw std::invalid_argument("fpq needs n+1 upper and n lower characters, n >= 1");
  }
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  if (x == 0) return E.zero();
  const std::uint32_t n = f.n();
  const std::uint32_t dx = f.dlog(x);
  Cyclo s = E.zero();
  for (std::uint32_t t = 0; t < n; ++t) {
    const Character chi{t};
    Cyclo term = bt.get(chi_mul(f, upper[0], chi), chi);
    for (std::size_t i = 1; i < upper.size(); ++i) {
      term *= bt.get(chi_mul(f, upper[i], chi), chi_mul(f, lower[i - 1], chi));
    }
    s += term * E.root_of_unity(static_cast<std::uint64_t>(t) * dx);
  }
  return E.from_rational(f.q(), n) * s;
}

const Cyclo& F21PhiTwistCache::get(std::uint32_t u, std::uint32_t z) {
  const Embedding& E = bt_->ctx();
  const std::uint32_t n = E.n();
  u %= n;
  const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | z;
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    const Character phi = quadratic_char(E.field());
    Cyclo v = f21_binomial(*bt_, phi, Character{u}, Character{u + n / 2}, z);
    it = memo_.emplace(key, v).first;
  }
  return it->second;
}

}  // namespace jsums

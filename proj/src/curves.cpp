#include "jsums/curves.hpp"

#include <stdexcept>

#include "jsums/numutil.hpp"

namespace jsums {
namespace {

std::size_t poly_degree(const std::vector<std::uint32_t>& poly) {
  std::size_t d = poly.size();
  while (d > 0 && poly[d - 1] == 0) --d;
  if (d == 0) throw std::invalid_argument("zero polynomial");
  return d - 1;
}

void require_family_params(const Field& f, std::uint32_t m, std::uint32_t a, std::uint32_t b,
                           std::uint32_t c) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (f.n() % (2 * m) != 0) throw std::invalid_argument("family needs q = 1 (mod 2m)");
  if (a == 0 || b == 0 || c == 0 || a >= f.q() || b >= f.q() || c >= f.q() || a == b || a == c ||
      b == c) {
    throw std::invalid_argument("a, b, c must be pairwise distinct nonzero elements");
  }
}

// shared evaluation shell for the two closed-form family counts
template <typename TermFn>
Cyclo family_series(const BinomTable& bt, TermFn&& term_for) {
  const Embedding& E = bt.ctx();
  Cyclo s = E.zero();
  const std::uint32_t n = E.n();
  for (std::uint32_t t = 0; t < n; ++t) s += term_for(t);
  return s;
}

}  // namespace

int r_of(const std::vector<std::uint32_t>& poly) { return poly_degree(poly) % 2 == 1 ? 1 : 2; }

std::vector<std::uint32_t> shifted_power_product_poly(const Field& f, std::uint32_t m,
                                                      const std::vector<std::uint32_t>& shifts,
                                                      bool times_x) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  std::vector<std::uint32_t> poly{1};
  for (std::uint32_t s : shifts) {
    // multiply by (x^m + s)
    std::vector<std::uint32_t> next(poly.size() + m, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] = f.add(next[i], f.mul(poly[i], s));
      next[i + m] = f.add(next[i + m], poly[i]);
    }
    poly = std::move(next);
  }
  if (times_x) poly.insert(poly.begin(), 0);
  return poly;
}

long long count_direct(const Field& f, const std::vector<std::uint32_t>& poly) {
  long long total = r_of(poly);
  for (std::uint32_t x = 0; x < f.q(); ++x) total += 1 + f.qchar(f.eval_poly(poly, x));
  return total;
}

long long count_direct_slow(const Field& f, const std::vector<std::uint32_t>& poly) {
  long long total = r_of(poly);
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const std::uint32_t v = f.eval_poly(poly, x);
    for (std::uint32_t y = 0; y < f.q(); ++y) {
      if (f.mul(y, y) == v) ++total;
    }
  }
  return total;
}

long long count_charsum(const Embedding& E, const std::vector<std::uint32_t>& poly) {
  const Field& f = E.field();
  const Character phi = quadratic_char(f);
  Cyclo s = E.from_int(r_of(poly) + static_cast<long long>(f.q()));
  for (std::uint32_t x = 0; x < f.q(); ++x) s += eval_char(E, phi, f.eval_poly(poly, x));
  return recover_integer(E, s, 0, 2ll * f.q() + 2);
}

FamilyHypCount count_Em_hyp(const BinomTable& bt, F21PhiTwistCache* cache, std::uint32_t m,
                            std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  require_family_params(f, m, a, b, c);
  const std::uint32_t n = f.n();
  const std::uint32_t q = f.q();
  const Character phi = quadratic_char(f);

  F21PhiTwistCache local(bt);
  F21PhiTwistCache& H = cache ? *cache : local;
  const std::uint32_t z = f.div(b, c);
  const std::uint32_t da = f.dlog(a);
  const std::uint32_t dnb = f.dlog(f.neg(b));
  const std::uint32_t abc = f.mul(f.mul(a, b), c);

  Cyclo series = E.zero();
  for (std::uint32_t k = 0; k < m; ++k) {
    const std::uint32_t shift = k * (n / m);
    series += family_series(bt, [&](std::uint32_t t) {
      const std::uint32_t u = (t + shift) % n;
      return bt.get(phi, Character{t}) *
             E.root_of_unity(static_cast<std::uint64_t>((n - t) % n) * da) *
             E.root_of_unity(static_cast<std::uint64_t>(u) * dnb) * H.get(u, z);
    });
  }
  const Cyclo prefactor =
      E.from_rational(static_cast<long long>(q) * q, n) * eval_char(E, phi, f.neg(abc));
  const Cyclo total = eval_char(E, phi, abc) + prefactor * series;

  FamilyHypCount out;
  out.affine = f.q() + recover_integer(E, total, -3ll * q - 3, 3ll * q + 3);
  out.r_parity = (3 * m) % 2 == 1 ? 1 : 2;
  out.r_statement = m % 2 == 1 ? 1 : 2;
  return out;
}

FamilyHypCount count_EmPrime_hyp(const BinomTable& bt, F21PhiTwistCache* cache, std::uint32_t m,
                                 std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  require_family_params(f, m, a, b, c);
  const std::uint32_t n = f.n();
  const std::uint32_t q = f.q();
  const Character phi = quadratic_char(f);

  F21PhiTwistCache local(bt);
  F21PhiTwistCache& H = cache ? *cache : local;
  const std::uint32_t z = f.div(b, c);
  const std::uint32_t dnba = f.dlog(f.neg(f.div(b, a)));
  const std::uint32_t dnb = f.dlog(f.neg(b));
  const std::uint32_t abc = f.mul(f.mul(a, b), c);

  Cyclo series = E.zero();
  for (std::uint32_t k = 0; k < m; ++k) {
    const std::uint32_t shift = (2 * k + 1) * (n / (2 * m));
    const Cyclo outer = E.root_of_unity(static_cast<std::uint64_t>(shift) * dnb);
    series += outer * family_series(bt, [&](std::uint32_t t) {
      const std::uint32_t u = (t + shift) % n;
      return bt.get(phi, Character{t}) *
             E.root_of_unity(static_cast<std::uint64_t>(t) * dnba) * H.get(u, z);
    });
  }
  const Cyclo prefactor =
      E.from_rational(static_cast<long long>(q) * q, n) * eval_char(E, phi, f.neg(abc));
  const Cyclo total = prefactor * series;

  FamilyHypCount out;
  out.affine = f.q() + recover_integer(E, total, -3ll * q - 3, 3ll * q + 3);
  out.r_parity = (3 * m + 1) % 2 == 1 ? 1 : 2;
  out.r_statement = m % 2 == 1 ? 1 : 2;
  return out;
}

std::vector<std::uint32_t> solve_h(const Field& f, ShiftKind kind, std::uint32_t a,
                                   std::uint32_t b, std::uint32_t c) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("a, b, c must be nonzero");
  const std::uint32_t sum = f.add(f.add(a, b), c);
  const std::uint32_t sym2 = f.add(f.add(f.mul(a, b), f.mul(b, c)), f.mul(c, a));

  std::uint32_t B, C;
  if (kind == ShiftKind::SumQuadratic) {
    B = f.mul(f.from_int(2), sum);
    C = sym2;
  } else {
    const std::uint32_t bc = f.mul(b, c);
    B = f.mul(f.from_int(2), f.div(sym2, bc));
    C = f.div(f.add(f.add(f.mul(a, b), f.mul(c, a)), f.mul(a, a)), bc);
  }
  const std::uint32_t A = f.from_int(3);

  std::vector<std::uint32_t> roots;
  if (A == 0) {
    // characteristic 3: the equation is linear
    if (B != 0) roots.push_back(f.neg(f.div(C, B)));
  } else {
    const std::uint32_t disc = f.sub(f.mul(B, B), f.mul(f.mul(f.from_int(4), A), C));
    const std::uint32_t inv2A = f.inv(f.mul(f.from_int(2), A));
    for (std::uint32_t s : f.sqrt(disc)) {
      roots.push_back(f.mul(f.sub(s, B), inv2A));
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t h : roots) {
    if (h != 0 && (out.empty() || out.back() != h)) out.push_back(h);
  }
  if (out.size() == 2 && out[0] > out[1]) std::swap(out[0], out[1]);
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

ShiftData shift_data(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                     std::uint32_t h) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("a, b, c must be nonzero");
  ShiftData out;
  out.h = h;
  const std::uint32_t sum = f.add(f.add(a, b), c);
  const std::uint32_t sym2 = f.add(f.add(f.mul(a, b), f.mul(b, c)), f.mul(c, a));
  const std::uint32_t sym3 = f.mul(f.mul(a, b), c);
  const std::uint32_t h2 = f.mul(h, h);
  const std::uint32_t h3 = f.mul(h2, h);
  out.dCoef = f.add(f.mul(f.from_int(3), h), sum);
  out.eCoef = f.add(f.add(h3, f.mul(sum, h2)), f.add(f.mul(sym2, h), sym3));

  const std::uint32_t bc = f.mul(b, c);
  const std::uint32_t sig = f.div(sym2, bc);
  const std::uint32_t tau = f.div(f.add(f.add(f.mul(a, b), f.mul(c, a)), f.mul(a, a)), bc);
  const std::uint32_t ups = f.div(f.mul(a, a), bc);
  out.fCoef = f.add(f.mul(f.from_int(3), h), sig);
  out.gCoef = f.add(f.add(h3, f.mul(sig, h2)), f.add(f.mul(tau, h), ups));
  return out;
}

namespace {

// q phi(-3 dd) 2F1(T^(n/6), T^(5n/6); eps | -27 ee / (4 dd^3)); the shared
// shape of the two cubic-family hypergeometric terms.
Cyclo cubic_term(const BinomTable& bt, std::uint32_t dd, std::uint32_t ee) {
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  if (f.n() % 6 != 0) throw std::invalid_argument("cubic closed forms need q = 1 (mod 6)");
  if (dd == 0) throw std::invalid_argument("vanishing leading shift coefficient");
  const Character ord6 = char_of_order(f, 6);
  const Character up1{ord6.j};
  const Character up2{5 * ord6.j};
  const std::uint32_t arg =
      f.neg(f.div(f.mul(f.from_int(27), ee), f.mul(f.from_int(4), f.pow(dd, 3))));
  const Character phi = quadratic_char(f);
  return E.from_int(f.q()) * eval_char(E, phi, f.neg(f.mul(f.from_int(3), dd))) *
         f21_binomial(bt, up1, up2, trivial_char(), arg);
}

}  // namespace

Cyclo psi111_hyp(const BinomTable& bt, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 std::uint32_t h) {
  const ShiftData sd = shift_data(bt.ctx().field(), a, b, c, h);
  return cubic_term(bt, sd.dCoef, sd.eCoef);
}

Cyclo phi111_hyp(const BinomTable& bt, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 std::uint32_t h) {
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  const ShiftData sd = shift_data(f, a, b, c, h);
  const Character phi = quadratic_char(f);
  return E.from_int(-1) +
         eval_char(E, phi, f.mul(b, c)) * cubic_term(bt, sd.fCoef, sd.gCoef);
}

Cyclo psi222_hyp(const BinomTable& bt, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 std::uint32_t h) {
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  const ShiftData sd = shift_data(f, a, b, c, h);
  const Character phi = quadratic_char(f);
  return E.from_int(-1) + cubic_term(bt, sd.dCoef, sd.eCoef) +
         eval_char(E, phi, f.mul(b, c)) * cubic_term(bt, sd.fCoef, sd.gCoef);
}

Cyclo count_trinomial_hyp(const BinomTable& bt, std::uint32_t d, std::uint32_t a,
                          std::uint32_t b) {
  const Embedding& E = bt.ctx();
  const Field& f = E.field();
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  if (a == 0 || b == 0 || a >= f.q() || b >= f.q()) {
    throw std::invalid_argument("a, b must be nonzero field elements");
  }
  const std::uint32_t n = f.n();
  if (n % (2 * d * (d - 1)) != 0) {
    throw std::invalid_argument("trinomial closed form needs q = 1 (mod 2d(d-1))");
  }
  const Character phi = quadratic_char(f);
  const std::uint32_t dd = f.from_int(d);
  const std::uint32_t dm1 = f.from_int(static_cast<long long>(d) - 1);
  const std::uint32_t alpha =
      f.div(f.mul(b, f.pow(dd, d)), f.mul(f.pow(a, d), f.pow(dm1, static_cast<long long>(d) - 1)));

  std::vector<Character> upper, lower;
  Cyclo scale = E.zero();
  std::uint32_t arg = 0;
  if (d % 2 == 0) {
    const Character chi = char_of_order(f, d);
    const Character psi = char_of_order(f, 2 * (d - 1));
    upper.push_back(phi);
    upper.push_back(trivial_char());
    for (std::uint32_t i = 1; i <= d - 1; ++i) {
      if (i != d / 2) upper.push_back(chi_pow(f, chi, i));
    }
    lower.push_back(phi);
    for (std::uint32_t j = 1; j <= 2 * d - 3; j += 2) {
      if (j != d - 1) lower.push_back(chi_pow(f, psi, j));
    }
    long long qpow = 1;
    for (std::uint32_t i = 0; i < d / 2; ++i) qpow *= f.q();
    scale = E.from_int(qpow) * E.from_int(f.qchar(dm1));
    arg = alpha;
    Cyclo count = E.from_int(f.q()) + E.from_int(f.qchar(b)) + scale * fpq(bt, upper, lower, arg);
    return count;
  }
  const Character eta = char_of_order(f, 2 * d);
  const Character rho = char_of_order(f, d - 1);
  for (std::uint32_t j = 1; j <= 2 * d - 1; j += 2) {
    if (j != d) upper.push_back(chi_pow(f, eta, j));
  }
  for (std::uint32_t i = 1; i <= d - 2; ++i) {
    if (i != (d - 1) / 2) lower.push_back(chi_pow(f, rho, i));
  }
  lower.push_back(trivial_char());
  long long qpow = 1;
  for (std::uint32_t i = 0; i < (d - 1) / 2; ++i) qpow *= f.q();
  scale = E.from_int(qpow) * E.from_int(f.qchar(f.neg(f.mul(a, dd))));
  arg = f.neg(alpha);
  return E.from_int(f.q()) + scale * fpq(bt, upper, lower, arg);
}

}  // namespace jsums

#include "jsums/char_sums.hpp"

#include <stdexcept>

namespace jsums {
namespace {

void validate_sum_spec(const Field& f, const std::vector<std::uint32_t>& exps,
                       const std::vector<std::uint32_t>& args) {
  if (exps.empty() || exps.size() != args.size()) {
    throw std::invalid_argument("exps and args must have equal positive length");
  }
  for (std::uint32_t a : args) {
    if (a == 0 || a >= f.q()) throw std::invalid_argument("arguments must be nonzero field elements");
  }
}

long long gen_sum(const Field& f, const std::vector<std::uint32_t>& exps,
                  const std::vector<std::uint32_t>& args, bool with_phi_x) {
  validate_sum_spec(f, exps, args);
  long long total = 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    int term = with_phi_x ? f.qchar(x) : 1;
    for (std::size_t i = 0; i < exps.size() && term != 0; ++i) {
      term *= f.qchar(f.add(f.pow(x, exps[i]), args[i]));
    }
    total += term;
  }
  return total;
}

}  // namespace

Cyclo jacobi2(const Embedding& E, Character A, Character B) {
  const Field& f = E.field();
  Cyclo s = E.zero();
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    s += eval_char(E, A, x) * eval_char(E, B, f.sub(1, x));
  }
  return s;
}

Cyclo jacobi_a(const Embedding& E, std::uint32_t a, const std::vector<Character>& chis) {
  if (chis.size() < 2) throw std::invalid_argument("jacobi_a needs at least two characters");
  const Field& f = E.field();
  if (a >= f.q()) throw std::invalid_argument("element out of range");
  const std::uint32_t q = f.q();

  // dist[s] = sum over tuples with partial sum s of the character product
  std::vector<Cyclo> dist(q, E.zero());
  for (std::uint32_t x = 0; x < q; ++x) dist[x] = eval_char(E, chis[0], x);
  for (std::size_t i = 1; i < chis.size(); ++i) {
    std::vector<Cyclo> vals(q, E.zero());
    for (std::uint32_t x = 0; x < q; ++x) vals[x] = eval_char(E, chis[i], x);
    std::vector<Cyclo> next(q, E.zero());
    for (std::uint32_t s = 0; s < q; ++s) {
      for (std::uint32_t x = 1; x < q; ++x) {  // chi(0) = 0 contributes nothing
        next[f.add(s, x)] += dist[s] * vals[x];
      }
    }
    dist = std::move(next);
  }
  return dist[a];
}

Cyclo binom(const Embedding& E, Character A, Character B) {
  const Field& f = E.field();
  return E.from_rational(1, f.q()) * eval_char(E, B, f.neg(1)) * jacobi2(E, A, chi_inv(f, B));
}

long long jacobsthal_phi_int(const Field& f, std::uint32_t n, std::uint32_t a) {
  if (n == 0) throw std::invalid_argument("Jacobsthal exponent must be positive");
  return gen_sum(f, {n}, {a}, true);
}

long long jacobsthal_psi_int(const Field& f, std::uint32_t n, std::uint32_t a) {
  if (n == 0) throw std::invalid_argument("Jacobsthal exponent must be positive");
  return gen_sum(f, {n}, {a}, false);
}

Cyclo jacobsthal_phi(const Embedding& E, std::uint32_t n, std::uint32_t a) {
  return E.from_int(jacobsthal_phi_int(E.field(), n, a));
}

Cyclo jacobsthal_psi(const Embedding& E, std::uint32_t n, std::uint32_t a) {
  return E.from_int(jacobsthal_psi_int(E.field(), n, a));
}

long long gen_psi_int(const Field& f, const std::vector<std::uint32_t>& exps,
                      const std::vector<std::uint32_t>& args) {
  return gen_sum(f, exps, args, false);
}

long long gen_phi_int(const Field& f, const std::vector<std::uint32_t>& exps,
                      const std::vector<std::uint32_t>& args) {
  return gen_sum(f, exps, args, true);
}

Cyclo gen_psi(const Embedding& E, const std::vector<std::uint32_t>& exps,
              const std::vector<std::uint32_t>& args) {
  return E.from_int(gen_psi_int(E.field(), exps, args));
}

Cyclo gen_phi(const Embedding& E, const std::vector<std::uint32_t>& exps,
              const std::vector<std::uint32_t>& args) {
  return E.from_int(gen_phi_int(E.field(), exps, args));
}

std::pair<Cyclo, Cyclo> lemma_l11_transform(const Embedding& E, const std::vector<Cyclo>& table) {
  const Field& f = E.field();
  if (table.size() != f.q()) throw std::invalid_argument("table must cover all of F_q");
  Cyclo lhs = E.zero();
  Cyclo rhs = E.zero();
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const int s = f.qchar(x);
    if (s == 1) {
      lhs += table[x];
    } else if (s == -1) {
      lhs -= table[x];
    }
    rhs += table[f.mul(x, x)] - table[x];
  }
  return {lhs, rhs};
}

Cyclo line_jacobi3(const Embedding& E, Character psi, Character chi, Character rho) {
  const Field& f = E.field();
  const std::uint32_t two = f.from_int(2);
  Cyclo s = E.zero();
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    s += eval_char(E, psi, f.mul(two, x)) * eval_char(E, chi, f.neg(x)) *
         eval_char(E, rho, f.sub(1, x));
  }
  return s;
}

}  // namespace jsums

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsums/char_sums.hpp"
#include "jsums/numutil.hpp"

using namespace jsums;

TEST_CASE("two-character Jacobi sums") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);
  const Character eps = trivial_char();
  const Character phi = quadratic_char(f);

  // both characters vanish at 0, so x = 0 and x = 1 contribute nothing
  CHECK(jacobi2(E, eps, eps) == E.from_int(5));  // q - 2
  CHECK(jacobi2(E, phi, phi) == E.one());
  CHECK(jacobi2(E, phi, eps) == E.from_int(-1));
  CHECK(jacobi2(E, Character{1}, eps) == E.from_int(-1));
  CHECK(jacobi2(E, Character{2}, eps) == E.from_int(-1));

  // J(A, inv(A)) = -A(-1) for nontrivial A
  for (const auto& [p, e] : odd_prime_powers(5, 26)) {
    const Field g = Field::build(p, e);
    const Embedding Eg(g, 2);
    for (std::uint32_t j = 1; j < g.n(); ++j) {
      const Character A{j};
      CHECK(jacobi2(Eg, A, chi_inv(g, A)) == -eval_char(Eg, A, g.neg(1)));
    }
  }
}

TEST_CASE("binomial coefficients") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);
  const Character eps = trivial_char();
  const Character phi = quadratic_char(f);

  CHECK(binom(E, phi, phi) == E.from_rational(-1, 7));
  CHECK(binom(E, eps, eps) == E.from_rational(5, 7));
  // definitional cross-check on a generic pair
  const Character A{1}, B{2};
  CHECK(binom(E, A, B) ==
        E.from_rational(1, 7) * eval_char(E, B, f.neg(1)) * jacobi2(E, A, chi_inv(f, B)));
}

TEST_CASE("fixed-sum Jacobi sums") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);
  const Character eps = trivial_char();
  const Character phi = quadratic_char(f);

  CHECK(jacobi_a(E, 0, {eps, eps}) == E.from_int(6));  // q-1 nonzero pairs summing to 0
  CHECK(jacobi_a(E, 2, {phi, phi, phi}) == E.from_int(-7));

  // k = 2 at a = 1 agrees with the classical Jacobi sum for every pair
  for (std::uint32_t i = 0; i < f.n(); ++i) {
    for (std::uint32_t j = 0; j < f.n(); ++j) {
      CHECK(jacobi_a(E, 1, {Character{i}, Character{j}}) ==
            jacobi2(E, Character{i}, Character{j}));
    }
  }

  // triple-loop oracle for k = 3
  Rng rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const Character A{static_cast<std::uint32_t>(rng.bounded(f.n()))};
    const Character B{static_cast<std::uint32_t>(rng.bounded(f.n()))};
    const Character C{static_cast<std::uint32_t>(rng.bounded(f.n()))};
    const auto a = static_cast<std::uint32_t>(rng.bounded(f.q()));
    Cyclo oracle = E.zero();
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      for (std::uint32_t y = 0; y < f.q(); ++y) {
        const std::uint32_t z = f.sub(a, f.add(x, y));
        oracle += eval_char(E, A, x) * eval_char(E, B, y) * eval_char(E, C, z);
      }
    }
    CHECK(jacobi_a(E, a, {A, B, C}) == oracle);
  }

  CHECK_THROWS_AS(jacobi_a(E, 1, {phi}), std::invalid_argument);
}

TEST_CASE("classical Jacobsthal sums") {
  for (const auto& [p, e] : odd_prime_powers(3, 30)) {
    const Field f = Field::build(p, e);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      CHECK(jacobsthal_phi_int(f, 1, a) == -1);
      CHECK(jacobsthal_psi_int(f, 1, a) == 0);
    }
  }

  const Field f7 = Field::build(7, 1);
  CHECK(jacobsthal_phi_int(f7, 1, 1) == -1);
  CHECK(jacobsthal_phi_int(f7, 2, 1) == 0);
  CHECK(jacobsthal_phi_int(f7, 2, 1) ==
        jacobsthal_psi_int(f7, 4, 1) - jacobsthal_psi_int(f7, 2, 1));

  // phi_l = psi_2l - psi_l throughout
  for (const auto& [p, e] : odd_prime_powers(7, 14)) {
    const Field f = Field::build(p, e);
    for (std::uint32_t l = 1; l <= 4; ++l) {
      for (std::uint32_t a = 1; a < f.q(); ++a) {
        CHECK(jacobsthal_phi_int(f, l, a) ==
              jacobsthal_psi_int(f, 2 * l, a) - jacobsthal_psi_int(f, l, a));
      }
    }
  }

  const Embedding E(f7, 2);
  CHECK(jacobsthal_phi(E, 2, 3) == E.from_int(jacobsthal_phi_int(f7, 2, 3)));
  CHECK(jacobsthal_psi(E, 3, 4) == E.from_int(jacobsthal_psi_int(f7, 3, 4)));
}

TEST_CASE("generalized Jacobsthal sums") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);

  CHECK(gen_psi_int(f, {1, 1, 1}, {1, 2, 3}) == 0);
  CHECK(gen_phi_int(f, {1, 1, 1}, {1, 2, 3}) == -1);
  CHECK(gen_psi(E, {1, 1, 1}, {1, 2, 3}) == E.zero());
  CHECK(gen_phi(E, {1, 1, 1}, {1, 2, 3}) == E.from_int(-1));

  // single zero exponent: x^0 = 1 for every x, including x = 0
  for (std::uint32_t a = 1; a < 7; ++a) {
    CHECK(gen_psi_int(f, {0}, {a}) == 7ll * f.qchar(f.add(1, a)));
  }

  // gen_psi((l,l),(a,a)) = q - #{x : x^l = -a}
  for (const auto& [p, e] : odd_prime_powers(7, 14)) {
    const Field g = Field::build(p, e);
    for (std::uint32_t l = 1; l <= 4; ++l) {
      for (std::uint32_t a = 1; a < g.q(); ++a) {
        long long roots = 0;
        for (std::uint32_t x = 0; x < g.q(); ++x) {
          if (g.pow(x, l) == g.neg(a)) ++roots;
        }
        CHECK(gen_psi_int(g, {l, l}, {a, a}) == static_cast<long long>(g.q()) - roots);
      }
    }
  }

  CHECK_THROWS_AS(gen_psi_int(f, {1, 1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(gen_psi_int(f, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(gen_psi_int(f, {1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_phi_int(f, {1}, {9}), std::invalid_argument);
}

TEST_CASE("square-substitution transform") {
  for (const auto& [p, e] : odd_prime_powers(7, 14)) {
    const Field f = Field::build(p, e);
    const Embedding E(f, 2);
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Cyclo> table;
      for (std::uint32_t x = 0; x < f.q(); ++x) {
        table.push_back(E.from_int(static_cast<long long>(rng.bounded(19)) - 9));
      }
      const auto [lhs, rhs] = lemma_l11_transform(E, table);
      CHECK(lhs == rhs);
    }

    // constant tables transform to zero
    std::vector<Cyclo> constant(f.q(), E.from_int(4));
    const auto [cl, cr] = lemma_l11_transform(E, constant);
    CHECK(cl == E.zero());
    CHECK(cr == E.zero());

    // indicator of the generator: phi(g) = -1 on one side,
    // (no square roots of g) - 1 on the other
    std::vector<Cyclo> indicator(f.q(), E.zero());
    indicator[f.generator()] = E.one();
    const auto [il, ir] = lemma_l11_transform(E, indicator);
    CHECK(il == E.from_int(-1));
    CHECK(ir == E.from_int(-1));
  }
}

TEST_CASE("quadratic-restriction expansion through line Jacobi sums") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);
  const Character phi = quadratic_char(f);
  const std::uint32_t n = f.n();
  for (std::uint32_t pj = 0; pj < n; ++pj) {
    for (std::uint32_t cj = 0; cj < n; ++cj) {
      for (std::uint32_t rj = 0; rj < n; ++rj) {
        for (std::uint32_t a = 1; a < f.q(); ++a) {
          const Character psi{pj}, chi{cj}, rho{rj};
          Cyclo lhs = E.zero();
          for (std::uint32_t x = 0; x < f.q(); ++x) {
            const std::uint32_t xx = f.mul(x, x);
            lhs += eval_char(E, psi, f.mul(2, xx)) * eval_char(E, chi, xx) *
                   eval_char(E, rho, f.add(1, f.mul(a, xx)));
          }
          const std::uint32_t ai = f.inv(a);
          const Cyclo rhs =
              eval_char(E, psi, f.neg(1)) *
              (eval_char(E, chi_mul(f, psi, chi), ai) * line_jacobi3(E, psi, chi, rho) +
               eval_char(E, chi_mul(f, chi_mul(f, psi, chi), phi), ai) *
                   line_jacobi3(E, psi, chi_mul(f, chi, phi), rho));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

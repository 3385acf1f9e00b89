#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsums/character.hpp"
#include "jsums/numutil.hpp"

using namespace jsums;

TEST_CASE("quadratic character matches integer qchar") {
  for (const auto& [p, e] : odd_prime_powers(3, 30)) {
    const Field f = Field::build(p, e);
    const Embedding E(f, 2);
    const Character phi = quadratic_char(f);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      CHECK(eval_char(E, phi, x) == E.from_int(f.qchar(x)));
    }
  }
}

TEST_CASE("character values at specific points") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);
  const Character phi = quadratic_char(f);
  CHECK(phi.j == 3);
  CHECK(eval_char(E, phi, 3) == E.from_int(-1));  // 3 generates, so it is a non-square
  CHECK(eval_char(E, phi, 2) == E.one());         // 2 = 3^2
  CHECK(eval_char(E, phi, 0) == E.zero());

  const Character eps = trivial_char();
  for (std::uint32_t x = 1; x < 7; ++x) CHECK(eval_char(E, eps, x) == E.one());
  CHECK(eval_char(E, eps, 0) == E.zero());  // every character vanishes at 0

  const Character t1{1};
  CHECK(eval_char(E, t1, 3) == E.root_of_unity(1));  // T(g) = zeta
}

TEST_CASE("character group structure") {
  const Field f = Field::build(13, 1);
  CHECK(chi_mul(f, Character{5}, Character{9}).j == 2);
  CHECK(chi_inv(f, Character{5}).j == 7);
  CHECK(chi_inv(f, Character{0}).j == 0);
  CHECK(chi_pow(f, Character{5}, -1).j == chi_inv(f, Character{5}).j);
  CHECK(chi_pow(f, Character{5}, 3).j == 3);
  CHECK(chi_order(f, Character{0}) == 1);
  CHECK(chi_order(f, Character{3}) == 4);
  CHECK(chi_order(f, Character{6}) == 2);
  CHECK(chi_order(f, Character{1}) == 12);

  CHECK(char_of_order(f, 4).j == 3);
  CHECK(char_of_order(f, 1).j == 0);
  CHECK(char_of_order(f, 12).j == 1);
  CHECK(chi_order(f, char_of_order(f, 6)) == 6);
  CHECK_THROWS_AS(char_of_order(f, 5), std::invalid_argument);

  const Field f25 = Field::build(5, 2);
  CHECK(char_of_order(f25, 6).j == 4);
  const Field f7 = Field::build(7, 1);
  CHECK_THROWS_AS(char_of_order(f7, 4), std::invalid_argument);
}

TEST_CASE("multiplicativity on a sweep of fields") {
  for (const auto& [p, e] : odd_prime_powers(5, 26)) {
    const Field f = Field::build(p, e);
    const Embedding E(f, 2);
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const Character chi{static_cast<std::uint32_t>(rng.bounded(f.n()))};
      const auto x = static_cast<std::uint32_t>(1 + rng.bounded(f.q() - 1));
      const auto y = static_cast<std::uint32_t>(1 + rng.bounded(f.q() - 1));
      CHECK(eval_char(E, chi, f.mul(x, y)) == eval_char(E, chi, x) * eval_char(E, chi, y));
    }
    // nontrivial characters sum to zero over the field
    Cyclo s = E.zero();
    for (std::uint32_t x = 0; x < f.q(); ++x) s += eval_char(E, Character{1}, x);
    CHECK(s == E.zero());
  }
}

TEST_CASE("orthogonality sums count roots") {
  const Field f = Field::build(13, 1);
  CHECK(orthogonality_sum(f, 0, 4) == 1);
  // fourth powers mod 13 are {1, 3, 9}
  CHECK(orthogonality_sum(f, 1, 4) == 4);
  CHECK(orthogonality_sum(f, 3, 4) == 4);
  CHECK(orthogonality_sum(f, 9, 4) == 4);
  CHECK(orthogonality_sum(f, 2, 4) == 0);
  CHECK_THROWS_AS(orthogonality_sum(f, 1, 5), std::invalid_argument);

  // sum over x of the root count is always q, and the count matches a scan
  for (const auto& [p, e] : odd_prime_powers(5, 28)) {
    const Field g = Field::build(p, e);
    for (std::uint32_t m = 1; m <= g.n(); ++m) {
      if (g.n() % m != 0) continue;
      long long total = 0;
      for (std::uint32_t x = 0; x < g.q(); ++x) {
        const long long cnt = orthogonality_sum(g, x, m);
        long long scan = 0;
        for (std::uint32_t y = 0; y < g.q(); ++y) {
          if (g.pow(y, m) == x) ++scan;
        }
        CHECK(cnt == scan);
        total += cnt;
      }
      CHECK(total == g.q());
    }
  }
}

TEST_CASE("delta helpers") {
  const Field f = Field::build(7, 1);
  CHECK(delta_char(f, Character{0}) == 1);
  CHECK(delta_char(f, Character{6}) == 1);  // exponent reduced mod q-1
  CHECK(delta_char(f, Character{3}) == 0);
  CHECK(delta_elem(0) == 1);
  CHECK(delta_elem(5) == 0);
}

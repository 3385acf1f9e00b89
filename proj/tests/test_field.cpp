#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "jsums/field.hpp"
#include "jsums/numutil.hpp"

using namespace jsums;

TEST_CASE("prime field F7 basics") {
  Field f = Field::build(7, 1);
  CHECK(f.q() == 7);
  CHECK(f.n() == 6);
  CHECK(f.generator() == 3);
  CHECK(f.spec().modulus.empty());
  CHECK(f.inv(3) == 5);
  CHECK(f.dlog(6) == 3);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(4, 5) == 6);
  CHECK(f.div(1, 3) == 5);
  CHECK(f.pow(3, -1) == 5);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 5) == 0);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(22) == 1);
  // squares mod 7 are {1, 2, 4}
  for (std::uint32_t x : {1u, 2u, 4u}) CHECK(f.qchar(x) == 1);
  for (std::uint32_t x : {3u, 5u, 6u}) CHECK(f.qchar(x) == -1);
  CHECK(f.qchar(0) == 0);
}

TEST_CASE("extension field moduli and generators are canonical") {
  Field f9 = Field::build(3, 2);
  CHECK(f9.spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f9.generator() == 4);

  Field f25 = Field::build(5, 2);
  CHECK(f25.spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f25.generator() == 7);

  Field f27 = Field::build(3, 3);
  CHECK(f27.spec().modulus == std::vector<std::uint32_t>{1, 0, 2, 1});
  CHECK(f27.generator() == 3);

  Field f49 = Field::build(7, 2);
  CHECK(f49.spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f49.generator() == 9);
}

TEST_CASE("square roots") {
  Field f13 = Field::build(13, 1);
  CHECK(f13.sqrt(4) == std::vector<std::uint32_t>{2, 11});
  CHECK(f13.sqrt(0) == std::vector<std::uint32_t>{0});
  Field f7 = Field::build(7, 1);
  CHECK(f7.sqrt(3).empty());
  Field f9 = Field::build(3, 2);
  for (std::uint32_t x = 0; x < f9.q(); ++x) {
    for (std::uint32_t r : f9.sqrt(x)) CHECK(f9.mul(r, r) == x);
  }
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(Field::build(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::build(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Field::build(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::build(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::build(100003, 1), std::invalid_argument);  // above default ceiling
  Field f = Field::build(7, 1);
  CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
  CHECK_THROWS_AS(f.dlog(0), std::invalid_argument);
  CHECK_THROWS_AS(f.pow(0, -2), std::invalid_argument);
}

TEST_CASE("field ceiling is overridable by environment") {
  CHECK(field_ceiling() == 100000);
  CHECK_THROWS_AS(Field::build(3, 11), std::invalid_argument);  // 177147 > 100000
  setenv("JSUMS_FIELD_CEILING", "200000", 1);
  CHECK(field_ceiling() == 200000);
  Field f = Field::build(3, 11);
  CHECK(f.q() == 177147);
  CHECK(f.mul(f.generator(), f.inv(f.generator())) == 1);
  unsetenv("JSUMS_FIELD_CEILING");
  CHECK(field_ceiling() == 100000);
}

TEST_CASE("structure sweep over all odd prime powers up to 1000") {
  auto fields = odd_prime_powers(3, 1000);
  CHECK(fields.size() > 170);  // 168 odd primes plus the proper prime powers
  Rng rng(42);
  for (auto [p, e] : fields) {
    Field f = Field::build(p, e);
    INFO("q = ", f.q());

    // exp/dlog are inverse bijections between [0, n) and the units
    std::set<std::uint32_t> seen;
    for (std::uint32_t k = 0; k < f.n(); ++k) {
      const std::uint32_t x = f.gpow(k);
      CHECK(f.dlog(x) == k);
      seen.insert(x);
    }
    CHECK(seen.size() == f.n());
    CHECK(seen.count(0) == 0);

    // exactly (q-1)/2 nonzero squares
    std::size_t squares = 0;
    for (std::uint32_t x = 1; x < f.q(); ++x) {
      if (f.qchar(x) == 1) ++squares;
    }
    CHECK(squares == f.n() / 2);

    // Frobenius: (a+b)^p = a^p + b^p on random pairs
    for (int t = 0; t < 8; ++t) {
      const auto a = static_cast<std::uint32_t>(rng.bounded(f.q()));
      const auto b = static_cast<std::uint32_t>(rng.bounded(f.q()));
      CHECK(f.pow(f.add(a, b), f.p()) == f.add(f.pow(a, f.p()), f.pow(b, f.p())));
    }

    // mul agrees with distributing over the additive decomposition:
    // a * b = sum over base-p digits, checked on random pairs via poly eval
    for (int t = 0; t < 4; ++t) {
      const auto a = static_cast<std::uint32_t>(rng.bounded(f.q() - 1) + 1);
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, f.n()) == 1);
    }
  }
}

TEST_CASE("polynomial evaluation") {
  Field f = Field::build(13, 1);
  // 2 + 3x + x^3 at x = 2: 2 + 6 + 8 = 16 = 3
  CHECK(f.eval_poly({2, 3, 0, 1}, 2) == 3);
  CHECK(f.eval_poly({}, 5) == 0);
  CHECK(f.eval_poly({7}, 0) == 7);
}

TEST_CASE("odd prime power enumeration") {
  auto v = odd_prime_powers(3, 30);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> expect = {
      {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}};
  CHECK(v == expect);
  CHECK(odd_prime_powers(10, 9).empty());
}

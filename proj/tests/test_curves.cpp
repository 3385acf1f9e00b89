#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "jsums/curves.hpp"
#include "jsums/numutil.hpp"

using namespace jsums;

TEST_CASE("polynomial assembly and r") {
  const Field f = Field::build(7, 1);
  // (x^2+1)(x^2+2)(x^2+3) = x^6 + 6x^4 + 11x^2 + 6 over F_7
  const auto poly = shifted_power_product_poly(f, 2, {1, 2, 3}, false);
  CHECK(poly == std::vector<std::uint32_t>{6, 0, 4, 0, 6, 0, 1});
  const auto xpoly = shifted_power_product_poly(f, 2, {1, 2, 3}, true);
  CHECK(xpoly == std::vector<std::uint32_t>{0, 6, 0, 4, 0, 6, 0, 1});
  CHECK(r_of(poly) == 2);
  CHECK(r_of(xpoly) == 1);
  CHECK(r_of({1, 0, 0, 1}) == 1);
}

TEST_CASE("point counts on pinned examples") {
  const Field f = Field::build(7, 1);
  const Embedding E(f, 2);
  CHECK(count_direct(f, {1, 0, 0, 1}) == 12);  // y^2 = x^3 + 1 over F_7
  const auto em1 = shifted_power_product_poly(f, 1, {1, 2, 3}, false);
  CHECK(count_direct(f, em1) == 8);  // y^2 = (x+1)(x+2)(x+3)
  CHECK(count_charsum(E, em1) == 8);
  CHECK(count_direct_slow(f, em1) == 8);
}

TEST_CASE("three counting paths agree on random curves") {
  for (const auto& [p, e] : odd_prime_powers(5, 25)) {
    const Field f = Field::build(p, e);
    const Embedding E(f, 2);
    Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
      const std::uint32_t deg = 3 + static_cast<std::uint32_t>(rng.bounded(4));
      std::vector<std::uint32_t> poly(deg + 1);
      for (std::uint32_t i = 0; i < deg; ++i) {
        poly[i] = static_cast<std::uint32_t>(rng.bounded(f.q()));
      }
      poly[deg] = 1 + static_cast<std::uint32_t>(rng.bounded(f.q() - 1));
      const long long direct = count_direct(f, poly);
      CHECK(direct == count_charsum(E, poly));
      if (f.q() <= 13) CHECK(direct == count_direct_slow(f, poly));
    }
  }
}

TEST_CASE("closed-form counts for the shifted-power families") {
  const Field f7 = Field::build(7, 1);
  const Embedding E7(f7, 2);
  const BinomTable bt7(E7);
  F21PhiTwistCache cache7(bt7);

  const FamilyHypCount em = count_Em_hyp(bt7, &cache7, 1, 1, 2, 3);
  CHECK(em.count_parity() == 8);
  CHECK(em.count_statement() == 8);  // odd degree: both conventions give r = 1
  CHECK(em.r_parity == 1);

  const Field f13 = Field::build(13, 1);
  const Embedding E13(f13, 2);
  const BinomTable bt13(E13);
  F21PhiTwistCache cache13(bt13);
  Rng rng(13);
  for (std::uint32_t m = 1; m <= 3; ++m) {
    int tested = 0;
    while (tested < 8) {
      const auto a = static_cast<std::uint32_t>(1 + rng.bounded(12));
      const auto b = static_cast<std::uint32_t>(1 + rng.bounded(12));
      const auto c = static_cast<std::uint32_t>(1 + rng.bounded(12));
      if (a == b || b == c || a == c) continue;
      ++tested;
      const auto poly = shifted_power_product_poly(f13, m, {a, b, c}, false);
      const auto xpoly = shifted_power_product_poly(f13, m, {a, b, c}, true);
      const long long direct = count_direct(f13, poly);
      const long long xdirect = count_direct(f13, xpoly);

      const FamilyHypCount fc = count_Em_hyp(bt13, &cache13, m, a, b, c);
      CHECK(fc.count_parity() == direct);
      const FamilyHypCount fx = count_EmPrime_hyp(bt13, &cache13, m, a, b, c);
      CHECK(fx.count_parity() == xdirect);

      // decomposition through the generalized Jacobsthal sums
      CHECK(direct == r_of(poly) + 13 + gen_psi_int(f13, {m, m, m}, {a, b, c}));
      CHECK(xdirect == r_of(xpoly) + 13 + gen_phi_int(f13, {m, m, m}, {a, b, c}));
    }
  }

  CHECK_THROWS_AS(count_Em_hyp(bt7, &cache7, 2, 1, 2, 3), std::invalid_argument);  // 4 does not divide 6
  CHECK_THROWS_AS(count_Em_hyp(bt7, &cache7, 1, 1, 1, 3), std::invalid_argument);  // repeated shift
  CHECK_THROWS_AS(count_Em_hyp(bt7, &cache7, 1, 0, 2, 3), std::invalid_argument);  // zero shift
}

TEST_CASE("shift quadratics") {
  const Field f7 = Field::build(7, 1);
  CHECK(solve_h(f7, ShiftKind::SumQuadratic, 1, 2, 3).empty());  // discriminant 5 is a non-square

  // brute-force agreement on every distinct triple over F_13 and F_9
  for (const auto& [p, e] : odd_prime_powers(9, 13)) {
    const Field f = Field::build(p, e);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      for (std::uint32_t b = 1; b < f.q(); ++b) {
        for (std::uint32_t c = 1; c < f.q(); ++c) {
          if (a == b || b == c || a == c) continue;
          for (const ShiftKind kind : {ShiftKind::SumQuadratic, ShiftKind::RatioQuadratic}) {
            const auto roots = solve_h(f, kind, a, b, c);
            std::vector<std::uint32_t> scan;
            const std::uint32_t s1 = f.add(f.add(a, b), c);
            const std::uint32_t s2 = f.add(f.add(f.mul(a, b), f.mul(b, c)), f.mul(c, a));
            for (std::uint32_t h = 1; h < f.q(); ++h) {
              std::uint32_t val;
              if (kind == ShiftKind::SumQuadratic) {
                val = f.add(f.add(f.mul(f.from_int(3), f.mul(h, h)),
                                  f.mul(f.mul(f.from_int(2), s1), h)),
                            s2);
              } else {
                const std::uint32_t bc = f.mul(b, c);
                const std::uint32_t t1 = f.div(s2, bc);
                const std::uint32_t t2 =
                    f.div(f.add(f.add(f.mul(a, b), f.mul(c, a)), f.mul(a, a)), bc);
                val = f.add(f.add(f.mul(f.from_int(3), f.mul(h, h)),
                                  f.mul(f.mul(f.from_int(2), t1), h)),
                            t2);
              }
              if (val == 0) scan.push_back(h);
            }
            CHECK(roots == scan);  // nonzero roots, ascending
          }
        }
      }
    }
  }
}

TEST_CASE("shift data coefficients") {
  const Field f = Field::build(13, 1);
  const std::uint32_t a = 2, b = 5, c = 11, h = 3;
  const ShiftData sd = shift_data(f, a, b, c, h);
  CHECK(sd.h == h);
  const std::uint32_t s1 = f.add(f.add(a, b), c);
  const std::uint32_t s2 = f.add(f.add(f.mul(a, b), f.mul(b, c)), f.mul(c, a));
  const std::uint32_t s3 = f.mul(f.mul(a, b), c);
  CHECK(sd.dCoef == f.add(f.mul(3, h), s1));
  CHECK(sd.eCoef == f.add(f.add(f.mul(f.mul(h, h), h), f.mul(s1, f.mul(h, h))),
                          f.add(f.mul(s2, h), s3)));
  const std::uint32_t bc = f.mul(b, c);
  CHECK(sd.fCoef == f.add(f.mul(3, h), f.div(s2, bc)));
  const std::uint32_t u1 = f.div(s2, bc);
  const std::uint32_t u2 = f.div(f.add(f.add(f.mul(a, b), f.mul(c, a)), f.mul(a, a)), bc);
  const std::uint32_t u3 = f.div(f.mul(a, a), bc);
  CHECK(sd.gCoef == f.add(f.add(f.mul(f.mul(h, h), h), f.mul(u1, f.mul(h, h))),
                          f.add(f.mul(u2, h), u3)));
}

TEST_CASE("cubic-family hypergeometric evaluations") {
  const Field f = Field::build(13, 1);
  const Embedding E(f, 2);
  const BinomTable bt(E);
  int psi_tested = 0, phi_tested = 0, both_tested = 0;
  for (std::uint32_t a = 1; a < 13; ++a) {
    for (std::uint32_t b = 1; b < 13; ++b) {
      for (std::uint32_t c = 1; c < 13; ++c) {
        if (a == b || b == c || a == c) continue;
        const auto hsum = solve_h(f, ShiftKind::SumQuadratic, a, b, c);
        const auto hratio = solve_h(f, ShiftKind::RatioQuadratic, a, b, c);
        for (const std::uint32_t h : hsum) {
          if (shift_data(f, a, b, c, h).dCoef == 0) continue;
          ++psi_tested;
          CHECK(psi111_hyp(bt, a, b, c, h) == E.from_int(gen_psi_int(f, {1, 1, 1}, {a, b, c})));
        }
        for (const std::uint32_t h : hratio) {
          if (shift_data(f, a, b, c, h).fCoef == 0) continue;
          ++phi_tested;
          CHECK(phi111_hyp(bt, a, b, c, h) == E.from_int(gen_phi_int(f, {1, 1, 1}, {a, b, c})));
        }
        for (const std::uint32_t h : hsum) {
          if (std::find(hratio.begin(), hratio.end(), h) == hratio.end()) continue;
          const ShiftData sd = shift_data(f, a, b, c, h);
          if (sd.dCoef == 0 || sd.fCoef == 0) continue;
          ++both_tested;
          CHECK(psi222_hyp(bt, a, b, c, h) == E.from_int(gen_psi_int(f, {2, 2, 2}, {a, b, c})));
        }
      }
    }
  }
  CHECK(psi_tested > 0);
  CHECK(phi_tested > 0);
  CHECK(both_tested == 24);  // common-root instances over F_13

  const Field f11 = Field::build(11, 1);
  const Embedding E11(f11, 2);
  const BinomTable bt11(E11);
  CHECK_THROWS_AS(psi111_hyp(bt11, 1, 2, 3, 1), std::invalid_argument);  // needs 6 | q-1
}

TEST_CASE("trinomial curve counts") {
  const Field f13 = Field::build(13, 1);
  const Embedding E13(f13, 2);
  const BinomTable bt13(E13);
  for (std::uint32_t a = 1; a < 13; ++a) {
    for (std::uint32_t b = 1; b < 13; ++b) {
      const std::vector<std::uint32_t> poly{b, 0, a, 1};  // x^3 + a x^2 + b
      const long long affine = count_direct(f13, poly) - r_of(poly);
      CHECK(count_trinomial_hyp(bt13, 3, a, b) == E13.from_int(affine));
    }
  }

  const Field f73 = Field::build(73, 1);
  const Embedding E73(f73, 2);
  const BinomTable bt73(E73);
  Rng rng73(8);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = static_cast<std::uint32_t>(1 + rng73.bounded(72));
    const auto b = static_cast<std::uint32_t>(1 + rng73.bounded(72));
    const std::vector<std::uint32_t> poly{b, 0, 0, a, 1};  // x^4 + a x^3 + b
    const long long affine = count_direct(f73, poly) - r_of(poly);
    CHECK(count_trinomial_hyp(bt73, 4, a, b) == E73.from_int(affine));
  }

  const Field f41 = Field::build(41, 1);
  const Embedding E41(f41, 2);
  const BinomTable bt41(E41);
  Rng rng41(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = static_cast<std::uint32_t>(1 + rng41.bounded(40));
    const auto b = static_cast<std::uint32_t>(1 + rng41.bounded(40));
    const std::vector<std::uint32_t> poly{b, 0, 0, 0, a, 1};  // x^5 + a x^4 + b
    const long long affine = count_direct(f41, poly) - r_of(poly);
    CHECK(count_trinomial_hyp(bt41, 5, a, b) == E41.from_int(affine));
  }

  const Field f7 = Field::build(7, 1);
  const Embedding E7(f7, 2);
  const BinomTable bt7(E7);
  CHECK_THROWS_AS(count_trinomial_hyp(bt7, 3, 1, 1), std::invalid_argument);  // 12 does not divide 6
  CHECK_THROWS_AS(count_trinomial_hyp(bt13, 3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_trinomial_hyp(bt13, 1, 1, 1), std::invalid_argument);
}

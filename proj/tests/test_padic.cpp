#include <doctest.h>

#include <random>

#include "ntlab/errors.hpp"
#include "ntlab/padic.hpp"

using namespace ntlab;
using namespace ntlab::padic;

TEST_CASE("Teichmueller lifts are multiplicative roots of unity") {
  for (std::uint32_t p : {5u, 7u, 13u, 31u, 97u}) {
    const PadicCtx c(p, 4);
    for (std::uint32_t x = 1; x < p; ++x) {
      const u64 t = c.teich(x);
      CHECK(t % p == x);
      CHECK(c.pow(t, p - 1) == 1);
      CHECK(teichmuller(c, x) == t);
      for (std::uint32_t y = 1; y < p; y += 3) CHECK(c.mul(t, c.teich(y)) == c.teich(c.field().mul(x, y)));
      CHECK(c.omega_pow(x, 1) == t);
    }
  }
}

TEST_CASE("fast Gamma_p agrees with the defining product") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PadicCtx c(p, 3);
    for (u64 N = 0; N < c.modulus(); ++N) REQUIRE(c.gamma_int(N) == c.gamma_int_naive(N));
  }
  const PadicCtx c(31, 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const u64 N = rng() % c.modulus();
    CHECK(c.gamma_int(N) == c.gamma_int_naive(N));
  }
  CHECK(c.gamma_int(0) == 1);
  CHECK(c.gamma_int(1) == c.modulus() - 1);
}

TEST_CASE("Gamma_p functional equation and reflection") {
  for (std::uint32_t p : primes_in_range(3, 100)) {
    const PadicCtx c(p, 3);
    for (std::int64_t d : {2, 3, 4, 5, 6, 12}) {
      if (d % p == 0) continue;
      for (std::int64_t k = 1; k < d; ++k) CHECK(gamma_reflection_holds(c, Rational(k, d)));
    }
    for (u64 x = 1; x < 3 * p; ++x) {
      const u64 lhs = c.gamma_int(x + 1);
      const u64 rhs = x % p ? c.neg(c.mul(x, c.gamma_int(x))) : c.neg(c.gamma_int(x));
      REQUIRE(lhs == rhs);
    }
  }
  const PadicCtx c(7, 3);
  CHECK(c.gamma(Rational(1, 3)) == c.gamma_naive(Rational(1, 3)));
  CHECK_THROWS(c.residue(Rational(1, 7)));
}

TEST_CASE("pi-ring reduction") {
  const PadicCtx c(5, 3);
  const auto pi4 = PiRingElem::monomial(c, 1, 4);
  CHECK(pi4.is_degree0());
  CHECK(pi4.project0() == c.modulus() - 5);
  CHECK_THROWS_AS(PiRingElem::monomial(c, 1, 1).project0(), PadicPrecisionError);
  const auto x = PiRingElem::monomial(c, 3, 2), y = PiRingElem::monomial(c, 2, 3);
  CHECK(x * y == PiRingElem::monomial(c, 6, 5));
  CHECK((x + y) - y == x);
}

TEST_CASE("Gauss and Jacobi sums: norms") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 29u}) {
    const PadicCtx c(p, 3);
    const std::uint32_t n = p - 1;
    for (std::uint32_t a = 1; a < n; ++a) {
      const auto g = gauss_sum(c, CharIdx{a}) * gauss_sum(c, CharIdx{n - a});
      const u64 sign = a % 2 ? c.neg(p) : u64{p};
      CHECK(g.project0() == sign);
      for (std::uint32_t b = 1; b < n; ++b) {
        if ((a + b) % n == 0) continue;
        const u64 J = jacobi_sum(c, CharIdx{a}, CharIdx{b});
        const u64 Jbar = jacobi_sum(c, CharIdx{n - a}, CharIdx{n - b});
        REQUIRE(c.mul(J, Jbar) == p);
      }
    }
    CHECK(gauss_sum_gk(c, 0).project0() == c.modulus() - 1);
  }
}

TEST_CASE("Gross-Koblitz consistency exhaustive for small p") {
  for (std::uint32_t p : primes_in_range(5, 31)) {
    const PadicCtx c(p, 3);
    const std::uint32_t n = p - 1;
    for (std::uint32_t a = 1; a < n; ++a)
      for (std::uint32_t b = 1; b < n; ++b)
        if ((a + b) % n) REQUIRE(gk_consistency_check(c, CharIdx{a}, CharIdx{b}).match);
  }
}

TEST_CASE("Hasse-Davenport and the Gamma_p product formulas") {
  for (std::uint32_t p : primes_in_range(5, 37)) {
    const PadicCtx c(p, 3);
    for (unsigned m : {2u, 3u}) {
      if ((p - 1) % m) continue;
      for (std::uint32_t a = 0; a < p - 1; ++a) CHECK(hasse_davenport_check(c, m, CharIdx{a}).match);
    }
    for (unsigned t : {2u, 3u, 4u, 6u, 12u}) {
      if ((p - 1) % t) continue;
      for (std::uint32_t j = 0; j < p - 1; ++j) CHECK(gamma_product_formulas(c, t, j).all());
    }
  }
}

TEST_CASE("Q_p values") {
  const PadicCtx c(7, 4);
  const auto a = QpValue::from_rational(c, Rational(49, 3));
  CHECK(a.val == 2);
  const auto b = QpValue::from_rational(c, Rational(-6));
  CHECK(qp_to_integer(c, qp_mul(c, a, b), 0, 1000) == -98);
  const auto s = QpValue::from_rational(c, Rational(-245));
  CHECK(qp_to_integer(c, s, 0, 1000) == -245);
  CHECK(qp_agree(c, qp_add(c, s, qp_neg(c, s)), QpValue::from_residue(c, 0)));
  CHECK(qp_to_integer(c, qp_sub(c, QpValue::from_residue(c, 10), QpValue::from_residue(c, 3)), 0, 100) == 7);
  CHECK_THROWS_AS(qp_to_integer(c, s, 0, 60000), PadicPrecisionError);
}

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ntlab/ecurve.hpp"
#include "ntlab/errors.hpp"
#include "ntlab/hypergeom.hpp"
#include "ntlab/kloosterman.hpp"

using namespace ntlab;
using namespace ntlab::hypergeom;

namespace {

std::int64_t floor_rat(const Rational& x) { return x.floor(); }

// nGn(t) straight from its definition: one Gamma_p quotient at a time,
// each evaluated with the defining product.
QpValue ngn_oracle(const PadicCtx& c, const GSpec& s, std::uint32_t t) {
  const std::int64_t n = static_cast<std::int64_t>(s.a.size()), q = c.p() - 1;
  const std::uint32_t d = c.field().dlog(t);
  QpValue total = QpValue::from_residue(c, 0, 1000);
  for (std::int64_t a = 0; a < q; ++a) {
    const Rational x(a, q);
    u64 unit = c.zeta(-a * d);
    if ((a * n) % 2) unit = c.neg(unit);
    std::int64_t e = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      const Rational ak = s.a[k].frac(), mbk = (-s.b[k]).frac();
      e -= floor_rat(ak - x) + floor_rat(mbk + x);
      unit = c.mul(unit, c.mul(c.gamma_naive((s.a[k] - x).frac()), c.inv(c.gamma_naive(ak))));
      unit = c.mul(unit, c.mul(c.gamma_naive((x - s.b[k]).frac()), c.inv(c.gamma_naive(mbk))));
    }
    if (e % 2) unit = c.neg(unit);
    total = qp_add(c, total, QpValue::from_residue(c, unit, e));
  }
  return qp_mul(c, total, QpValue::from_rational(c, Rational(-1, q)));
}

// I from complex Gauss sums with omega(g) = exp(2 pi i/(p-1)); I is an
// integer that does not depend on that choice.
std::int64_t i_complex_oracle(std::uint32_t p) {
  using C = std::complex<long double>;
  const FieldCtx f(p);
  const std::int64_t q = p - 1;
  const long double tau = 2 * std::acos(-1.0L);
  std::vector<C> g(q);  // g[k] = sum_x omega^k(x) e(x/p)
  for (std::int64_t k = 0; k < q; ++k) {
    C s = 0;
    for (std::uint32_t x = 1; x < p; ++x)
      s += std::polar(1.0L, tau * k * f.dlog(x) / q) * std::polar(1.0L, tau * x / p);
    g[k] = s;
  }
  auto G = [&](std::int64_t k) { return g[((k % q) + q) % q]; };
  const std::int64_t h = q / 2;
  C I = 0;
  for (std::uint32_t l = 1; l < p; ++l) {
    const std::uint32_t arg = f.mul(f.mul(4, f.sub(1, l)), f.inv(l));
    if (arg == 0) continue;
    C inner = 0;
    for (std::int64_t a = 0; a < q; ++a) {
      const C gb = G(-a);
      inner += G(h + a) * gb * gb * gb * G(h + 2 * a) * std::polar(1.0L, -tau * a * f.dlog(arg) / q);
    }
    I += static_cast<long double>(f.phi(l)) * inner;
  }
  return std::llround(I.real());
}

}  // namespace

TEST_CASE("nGn agrees with the definition") {
  for (std::uint32_t p : {7u, 13u, 19u}) {
    const PadicCtx c(p, 3);
    for (std::uint32_t t = 1; t < p; ++t) CHECK(qp_agree(c, ngn_evaluate(c, spec_3g3(), t), ngn_oracle(c, spec_3g3(), t)));
  }
  for (std::uint32_t p : {5u, 11u, 17u}) {
    const PadicCtx c(p, 3);
    for (std::uint32_t t = 1; t < p; ++t) CHECK(qp_agree(c, ngn_evaluate(c, spec_9g9(), t), ngn_oracle(c, spec_9g9(), t)));
  }
  CHECK_THROWS_AS(ngn_evaluate(PadicCtx(7, 4), spec_3g3(), 0), DomainError);
}

TEST_CASE("Greene 2F1 recovers Legendre traces") {
  for (std::uint32_t p : primes_in_range(5, 200)) {
    const PadicCtx c(p, 3);
    const auto J = greene_jacobi_table(c);
    const auto tr = ecurve::trace_table(c.field());
    const int m1 = c.field().phi(p - 1);
    for (std::uint32_t l = 2; l < p; ++l) REQUIRE(greene_2f1_scaled(c, J, l) == -m1 * tr[l]);
  }
}

TEST_CASE("3F2(1) and B against their character-sum oracles") {
  for (std::uint32_t p : primes_in_range(5, 60)) {
    const PadicCtx c(p, 6);
    const auto J = greene_jacobi_table(c);
    CHECK(greene_3f2_scaled(c, J) == greene_3f2_scaled_direct(c.field()));
    CHECK(b_scaled(c, J) == b_scaled_direct(c.field()));
  }
}

TEST_CASE("I: serial and parallel kernels agree with the complex oracle") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    const PadicCtx c(p, 6);
    CHECK(i_residue(c) == i_residue_serial(c));
    CHECK(i_sum(c) == i_complex_oracle(p));
  }
}

TEST_CASE("twisted 3G3 identity with the Gamma_p constant") {
  for (std::uint32_t p : primes_in_range(7, 200)) {
    if (p % 3 != 1) continue;
    const PadicCtx c(p, 6);
    CHECK(prop64_gamma_check(c, Prop64Twist::kSquareOfComplement).match);
    CHECK_FALSE(prop64_gamma_check(c, Prop64Twist::kComplementOfSquare).match);
    CHECK_FALSE(prop64_check(c, Prop64Twist::kComplementOfSquare).match);
    CHECK_FALSE(prop64_root_of_unity(c, Prop64Twist::kSquareOfComplement).has_value());
    CHECK_FALSE(prop64_root_of_unity(c, Prop64Twist::kComplementOfSquare).has_value());
    const u64 C = g3_gamma_constant(c);
    CHECK(c.pow(C, 6) != 1);
  }
}

TEST_CASE("twisted 9G9 identity and the phi(-1) variant") {
  for (std::uint32_t p : primes_in_range(5, 200)) {
    if (p % 3 != 2) continue;
    const PadicCtx c(p, 6);
    CHECK(prop65_check(c, false).match);
    CHECK(prop65_check(c, true).match == (p % 4 == 1));
  }
}

TEST_CASE("backbone records and slack closed form") {
  for (std::uint32_t p : primes_in_range(7, 120)) {
    const PadicCtx c(p, 6);
    const auto tr = ecurve::trace_table(c.field());
    const std::int64_t s4 = kloosterman::twisted_moment(c.field(), 4, c.field().quadratic()).value;
    for (const auto& r : prop66_backbone(c, tr, s4)) CHECK_MESSAGE(r.match, r.name << " p=" << p);
    CHECK(prop66_slack(c, s4) == Rational(prop66_slack_closed_form(c.field(), tr)));
  }
}

TEST_CASE("trend of |T(p)| decreases between the ends of the range") {
  CHECK(trend_point(7, 6).abs_t > trend_point(283, 6).abs_t);
  CHECK(trend_point(11, 6).abs_t > trend_point(293, 6).abs_t);
}

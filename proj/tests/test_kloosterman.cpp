#include <doctest.h>

#include <cmath>
#include <complex>

#include "ntlab/errors.hpp"
#include "ntlab/ffield.hpp"
#include "ntlab/kloosterman.hpp"

using namespace ntlab;
using namespace ntlab::kloosterman;

namespace {

// Plain complex-exponential oracle in long double.
long double kloosterman_oracle(std::uint32_t p, std::uint32_t a) {
  const FieldCtx f(p);
  std::complex<long double> s = 0;
  const long double tau = 2.0L * std::acos(-1.0L) / p;
  for (std::uint32_t x = 1; x < p; ++x) {
    const std::uint32_t k = f.add(x, f.mul(a, f.inv(x)));
    s += std::polar(1.0L, tau * k);
  }
  return s.real();
}

std::int64_t moment_oracle(std::uint32_t p, unsigned n, bool twisted) {
  const FieldCtx f(p);
  long double s = 0;
  for (std::uint32_t a = 1; a < p; ++a) {
    s += (twisted ? f.phi(a) : 1) * std::pow(kloosterman_oracle(p, a), static_cast<long double>(n));
  }
  return std::llround(s);
}

int legendre3(std::uint32_t p) { return p % 3 == 1 ? 1 : (p % 3 == 2 ? -1 : 0); }

}  // namespace

TEST_CASE("K(a,p) matches the complex oracle") {
  for (std::uint32_t p : {5u, 7u, 31u, 101u}) {
    const FieldCtx f(p);
    const auto t = kloosterman_table(f);
    for (std::uint32_t a = 0; a < p; ++a) {
      CHECK(std::fabs(t[a].to_double() - static_cast<double>(kloosterman_oracle(p, a))) < 1e-9);
      CHECK(t[a].err() < 1e-20);
    }
    CHECK(kloosterman_sum(f, 0).to_double() == doctest::Approx(-1.0));
  }
}

TEST_CASE("Weil bound and realness on every entry") {
  const FieldCtx f(211);
  const auto t = kloosterman_table(f);
  for (std::uint32_t a = 1; a < 211; ++a) CHECK(std::fabs(t[a].to_double()) <= 2 * std::sqrt(211.0));
}

TEST_CASE("moments agree with the floating oracle for small p") {
  for (std::uint32_t p : {7u, 11u, 13u, 29u}) {
    const FieldCtx f(p);
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(untwisted_moment(f, n).value == moment_oracle(p, n, false));
      CHECK(twisted_moment(f, n, f.quadratic()).value == moment_oracle(p, n, true));
    }
  }
}

TEST_CASE("spot values of S(4,phi)") {
  CHECK(twisted_moment(FieldCtx(7), 4, FieldCtx(7).quadratic()).value == -315);
  CHECK(twisted_moment(FieldCtx(13), 4, FieldCtx(13).quadratic()).value == -793);
}

TEST_CASE("closed forms for the low moments") {
  for (std::uint32_t p : primes_in_range(7, 300)) {
    const FieldCtx f(p);
    const auto t = kloosterman_table(f);
    const std::int64_t P = p;
    const int m1 = f.phi(p - 1);
    CHECK(untwisted_moment(t, 1).value == 1);
    CHECK(untwisted_moment(t, 2).value == P * P - P - 1);
    CHECK(untwisted_moment(t, 3).value == legendre3(p) * P * P + 2 * P + 1);
    CHECK(untwisted_moment(t, 4).value == 2 * P * P * P - 3 * P * P - 3 * P - 1);
    CHECK(twisted_moment(f, t, 1, f.quadratic()).value == m1 * P);
    CHECK(twisted_moment(f, t, 2, f.quadratic()).value == -P);
    const std::int64_t s4 = twisted_moment(f, t, 4, f.quadratic()).value;
    CHECK(sheaf_moment(f, t, 4) == s4 + 3 * P * P);
    CHECK(sheaf_moment4_termwise(f, t) == s4 + 3 * P * P);
    CHECK(sheaf_moment(f, t, 1) == -m1 * P);
  }
}

TEST_CASE("serial and OpenMP tables coincide") {
  for (std::uint32_t p : {101u, 997u, 2003u}) {
    const FieldCtx f(p);
    const auto a = kloosterman_table_serial(f), b = kloosterman_table_omp(f);
    for (std::uint32_t k = 0; k < p; ++k) REQUIRE(std::fabs(a[k].to_double() - b[k].to_double()) <= a.err + b.err);
    CHECK(twisted_moment(f, a, 4, f.quadratic()).value == twisted_moment(f, b, 4, f.quadratic()).value);
  }
}

TEST_CASE("summation order does not change S(4,phi)") {
  const FieldCtx f(103);
  const auto t = kloosterman_table(f);
  const std::int64_t s4 = twisted_moment(f, t, 4, f.quadratic()).value;
  for (std::uint32_t u : {2u, 3u, 5u, 17u}) CHECK(twisted_moment_permuted(f, t, 4, f.mul(u, u)) == s4);
}

TEST_CASE("twisted moments agree with the symmetric character sums") {
  for (std::uint32_t p : {7u, 11u, 13u, 17u, 19u}) {
    const FieldCtx f(p);
    const auto t = kloosterman_table(f);
    CHECK(symmetric_moment_rhs(f, 1) == twisted_moment(f, t, 2, f.quadratic()).value);
    CHECK(symmetric_moment_rhs(f, 2) == twisted_moment(f, t, 3, f.quadratic()).value);
    CHECK(symmetric_moment_rhs(f, 3) == twisted_moment(f, t, 4, f.quadratic()).value);
  }
  CHECK_THROWS_AS(symmetric_moment_rhs(FieldCtx(211), 3, 200), CapExceeded);
}

TEST_CASE("unsupported twists and lost precision are reported") {
  const FieldCtx f(13);
  CHECK_THROWS_AS(twisted_moment(f, 4, CharIdx{1}), UnsupportedTwist);
  CHECK(twisted_moment(f, 4, f.trivial()).value == untwisted_moment(f, 4).value);
  CHECK_THROWS_AS(round_to_integer(CertifiedReal(DoubleDouble{2.5, 0}, 0.6)), PrecisionError);
  CHECK(round_to_integer(CertifiedReal(DoubleDouble{2.9, 0}, 0.2)) == 3);
}

TEST_CASE("angle histogram covers every a exactly once") {
  const FieldCtx f(1009);
  const auto h = angle_histogram(f, 20);
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  CHECK(h.size() == 20);
  CHECK(total == 1008);
  CHECK(semicircle_chi2(h) < 0.1);
}

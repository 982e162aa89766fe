#include <doctest.h>

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ntlab/ecurve.hpp"
#include "ntlab/errors.hpp"
#include "ntlab/ffield.hpp"

using namespace ntlab;
using namespace ntlab::ecurve;

namespace {

// Affine points of y^2 = x(x-1)(x-lambda), counted naively.
int naive_trace(const FieldCtx& f, std::uint32_t lambda) {
  std::vector<int> sq(f.p(), 0);
  for (std::uint32_t y = 0; y < f.p(); ++y) ++sq[f.mul(y, y)];
  long count = 1;
  for (std::uint32_t x = 0; x < f.p(); ++x) count += sq[f.mul(x, f.mul(f.sub(x, 1), f.sub(x, lambda)))];
  return static_cast<int>(static_cast<long>(f.p()) + 1 - count);
}

// Brute group law on a short-free cubic y^2 = x^3 + a2 x^2 + a4 x (Legendre: a2 = -(1+l), a4 = l).
struct Pt {
  std::uint32_t x = 0, y = 0;
  bool inf = true;
  friend bool operator==(const Pt&, const Pt&) = default;
};

struct Group {
  const FieldCtx& f;
  std::uint32_t a2, a4;
  Pt add(Pt P, Pt Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    std::uint32_t m;
    if (P.x == Q.x) {
      if (f.add(P.y, Q.y) == 0) return {};
      const std::uint32_t num = f.add(f.add(f.mul(3, f.mul(P.x, P.x)), f.mul(f.mul(2, a2), P.x)), a4);
      m = f.mul(num, f.inv(f.mul(2, P.y)));
    } else {
      m = f.mul(f.sub(Q.y, P.y), f.inv(f.sub(Q.x, P.x)));
    }
    const std::uint32_t x3 = f.sub(f.sub(f.sub(f.mul(m, m), a2), P.x), Q.x);
    const std::uint32_t y3 = f.sub(f.mul(m, f.sub(P.x, x3)), P.y);
    return {x3, y3, false};
  }
};

// Size of E[4](F_p) by enumerating points and doubling twice.
std::size_t four_torsion_size(const FieldCtx& f, std::uint32_t lambda) {
  const Group g{f, f.neg(f.add(1, lambda)), lambda};
  std::size_t n = 1;
  for (std::uint32_t x = 0; x < f.p(); ++x) {
    const std::uint32_t rhs = f.mul(x, f.mul(f.sub(x, 1), f.sub(x, lambda)));
    for (std::uint32_t y = 0; y < f.p(); ++y) {
      if (f.mul(y, y) != rhs) continue;
      const Pt P{x, y, false};
      const Pt Q = g.add(P, P);
      if (g.add(Q, Q).inf) ++n;
    }
  }
  return n;
}

TorsionClass class_from_size(std::size_t n) {
  if (n == 16) return TorsionClass::k4x4;
  if (n == 8) return TorsionClass::k2x4;
  return TorsionClass::k2x2;
}

}  // namespace

TEST_CASE("Legendre traces match naive point counts") {
  for (std::uint32_t p : primes_in_range(5, 200)) {
    const FieldCtx f(p);
    const auto serial = trace_table_serial(f), omp = trace_table_omp(f);
    CHECK(serial == omp);
    for (std::uint32_t l = 2; l < p; ++l) REQUIRE(serial[l] == naive_trace(f, l));
  }
  CHECK_THROWS_AS(ap_legendre(FieldCtx(11), 1), DomainError);
}

TEST_CASE("lambda orbit shares j and the twist relations hold") {
  for (std::uint32_t p : {11u, 13u, 37u, 101u}) {
    const FieldCtx f(p);
    for (std::uint32_t l = 2; l < p; ++l) {
      for (std::uint32_t m : lambda_orbit(f, l)) CHECK(j_invariant(f, m) == j_invariant(f, l));
      const auto r = twist_relation_check(f, l);
      CHECK(r[0]);
      CHECK(r[1]);
      CHECK(r[2]);
      const auto w = legendre_to_weierstrass(f, l);
      CHECK(is_nonsingular(f, w));
      CHECK(j_invariant(f, w) == j_invariant(f, l));
      CHECK(trace(f, w) == ap_legendre(f, l));
    }
  }
}

TEST_CASE("halving criterion agrees with brute 4-torsion") {
  for (std::uint32_t p : primes_in_range(5, 110)) {
    const FieldCtx f(p);
    for (std::uint32_t l = 2; l < p; ++l) REQUIRE(torsion_class(f, l) == class_from_size(four_torsion_size(f, l)));
  }
}

TEST_CASE("twist keys decide isomorphism exactly") {
  for (std::uint32_t p : {7u, 13u, 17u, 19u, 23u, 37u}) {
    const FieldCtx f(p);
    std::vector<Weierstrass> curves;
    for (std::uint32_t A = 0; A < p; ++A)
      for (std::uint32_t B = 0; B < p; ++B)
        if (is_nonsingular(f, {A, B})) curves.push_back({A, B});
    for (std::size_t i = 0; i < curves.size(); i += 3)
      for (std::size_t k = 0; k < curves.size(); k += 5)
        REQUIRE((twist_key(f, curves[i]) == twist_key(f, curves[k])) == isomorphic_brute(f, curves[i], curves[k]));
  }
}

TEST_CASE("number of isomorphism classes is 2p + {6,2,4,0}") {
  for (std::uint32_t p : primes_in_range(5, 200)) {
    const FieldCtx f(p);
    const std::size_t extra[12] = {0, 6, 0, 0, 0, 2, 0, 4, 0, 0, 0, 0};
    CHECK(enumerate_iso_classes(f).size() == 2 * p + extra[p % 12]);
  }
}

TEST_CASE("class enumeration: traces are consistent and roots counted") {
  const FieldCtx f(43);
  for (const auto& c : enumerate_iso_classes(f)) {
    CHECK(c.trace == trace(f, c.rep));
    CHECK(c.rational_roots == roots(f, c.rep).size());
    CHECK(c.torsion.has_value() == (c.rational_roots == 3));
  }
}

TEST_CASE("L(lambda) matches its predicted size where one is asserted") {
  for (std::uint32_t p : primes_in_range(7, 150)) {
    const FieldCtx f(p);
    const SquareFamily fam(f);
    for (std::uint32_t l = 2; l + 1 < p; ++l) {
      const auto L = fam.l_set(l);
      CHECK(L == l_set(f, l));
      for (std::uint32_t mu : L) CHECK(legendre_isomorphic(f, f.mul(mu, mu), fam.ap(mu), f.mul(l, l), fam.ap(l)));
      if (const auto n = l_set_predicted_size(f, l)) CHECK(L.size() == *n);
    }
  }
}

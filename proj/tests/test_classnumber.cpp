#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ntlab/arith.hpp"
#include "ntlab/classnumber.hpp"
#include "ntlab/errors.hpp"
#include "ntlab/ffield.hpp"

using namespace ntlab;
using namespace ntlab::classnumber;

namespace {

// Dirichlet's formula for a prime D = 3 mod 4, D > 3: h(-D) = -(1/D) sum_a a (a/D).
std::int64_t dirichlet_class_number(std::uint32_t D) {
  const FieldCtx f(D);
  std::int64_t s = 0;
  for (std::uint32_t a = 1; a < D; ++a) s += static_cast<std::int64_t>(a) * f.phi(a);
  return -s / static_cast<std::int64_t>(D);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("ntlab-test-" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

const HurwitzTable& table() {
  static const HurwitzTable t = HurwitzTable::build(6000);
  return t;
}

}  // namespace

TEST_CASE("known Hurwitz class numbers") {
  const std::pair<int, Rational> known[] = {
      {3, Rational(1, 3)}, {4, Rational(1, 2)}, {7, 1},  {8, 1},  {11, 1},
      {12, Rational(4, 3)}, {15, 2}, {16, Rational(3, 2)}, {19, 1}, {20, 2},
      {23, 3}, {24, 2}, {27, Rational(4, 3)}, {28, 2}, {31, 3}};
  for (const auto& [D, h] : known) {
    CHECK(table().hstar(D) == h);
    CHECK(Rational(hurwitz_hstar(D), 12) == h);
  }
  CHECK(table().hstar(0) == Rational(-1, 12));
  CHECK(table().hstar12_at(1) == 0);
  CHECK(table().hstar12_at(-5) == 0);
  CHECK(table().hfull_at(3) == 1);
  CHECK(table().hfull_at(12) == 2);
}

TEST_CASE("class numbers of prime discriminants follow Dirichlet's formula") {
  for (std::uint32_t D : primes_in_range(7, 3000)) {
    if (D % 4 != 3) continue;
    CHECK(class_number_h(D) == dirichlet_class_number(D));
    CHECK(table().h[D] == dirichlet_class_number(D));
  }
}

TEST_CASE("table, single enumerations and the all-forms count agree") {
  for (std::int64_t D = 1; D <= 3000; ++D) {
    REQUIRE(table().hstar12_at(D) == hurwitz_hstar(D));
    REQUIRE(hurwitz_hstar(D) == hstar12_all_forms(D));
    REQUIRE(table().hfull_at(D) == hurwitz_hfull(D));
    if (!is_discriminant(D)) REQUIRE(table().hstar12_at(D) == 0);
  }
}

TEST_CASE("Eichler relation for odd n") {
  for (std::int64_t n = 1; n <= 5000; n += 2) REQUIRE(eichler_lhs(table(), n) == eichler_rhs(n));
}

TEST_CASE("Cohen coefficient vanishes for odd l") {
  for (std::int64_t l = 1; l <= 5000; l += 2) REQUIRE(cohen_coefficient(table(), l) == Rational(0));
}

TEST_CASE("divisor sums") {
  const auto d = divisor_sums(12);
  CHECK(d.sigma1 == 28);
  CHECK(d.lambda1x2 == 1 + 2 + 3 + 3 + 2 + 1);
  CHECK(d.lambda3x2 == 2 * (1 + 8 + 27));
  CHECK(divisor_sums(9).lambda1x2 == 1 + 3 + 1);
}

TEST_CASE("lookups past the bound raise CapExceeded") {
  const auto t = HurwitzTable::build(100);
  CHECK_THROWS_AS(t.hstar12_at(101), CapExceeded);
  CHECK_NOTHROW(t.hstar12_at(100));
}

TEST_CASE("CSV round trip and byte-identical rebuild") {
  const auto dir = scratch("csv");
  const auto t = HurwitzTable::build(2000);
  write_csv(t, dir / "a.csv");
  const auto back = read_csv(dir / "a.csv");
  CHECK(back.bound == t.bound);
  CHECK(back.h == t.h);
  CHECK(back.hstar12 == t.hstar12);
  CHECK(back.hfull == t.hfull);
  write_csv(HurwitzTable::build(2000), dir / "b.csv");
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));

  const auto loaded = load_or_build(500, dir);
  CHECK(loaded.bound >= 500);
  CHECK(std::filesystem::exists(dir / "hurwitz.csv"));
  const auto first = slurp(dir / "hurwitz.csv");
  load_or_build(500, dir);
  CHECK(slurp(dir / "hurwitz.csv") == first);
  std::filesystem::remove_all(dir);
}

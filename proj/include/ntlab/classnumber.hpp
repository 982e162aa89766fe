#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ntlab/rational.hpp"

namespace ntlab::classnumber {

// Hurwitz class numbers for 0 <= D <= bound. hstar12 holds 12 H*(D) so that
// all arithmetic stays integral; hstar12[0] = -1 encodes H*(0) = -1/12.
struct HurwitzTable {
  std::uint32_t bound = 0;
  std::vector<std::uint32_t> h;        // primitive reduced forms of discriminant -D
  std::vector<std::int64_t> hstar12;   // 12 H*(D)
  std::vector<std::uint32_t> hfull;    // H(D), orders counted without unit weights

  static HurwitzTable build(std::uint32_t bound);

  // Values for arbitrary integers: 0 for D < 0; CapExceeded("extend cache") past the bound.
  std::int64_t hstar12_at(std::int64_t D) const;
  std::int64_t hfull_at(std::int64_t D) const;
  Rational hstar(std::int64_t D) const { return Rational(hstar12_at(D), 12); }
};

bool is_discriminant(std::int64_t D);  // -D = 0 or 1 mod 4, D > 0

// Direct single-discriminant enumerations, independent of the table.
std::uint32_t class_number_h(std::int64_t D);
std::int64_t hurwitz_hstar(std::int64_t D);  // 12 H*(D)
std::int64_t hurwitz_hfull(std::int64_t D);

// Second oracle for 12 H*(D): every reduced form of discriminant -D, primitive
// or not, weighted 12, except multiples of x^2+y^2 (6) and x^2+xy+y^2 (4).
std::int64_t hstar12_all_forms(std::int64_t D);

struct DivisorSums {
  std::int64_t n = 0;
  std::int64_t sigma1 = 0;
  std::int64_t lambda1x2 = 0;  // 2 lambda_1(n) = sum_{d|n} min(d, n/d)
  std::int64_t lambda3x2 = 0;  // 2 lambda_3(n) = sum_{d|n} min(d, n/d)^3
};
DivisorSums divisor_sums(std::int64_t n);

// sum_{s^2 <= n} H*(n - s^2) for odd n, and the closed form -lambda_1(n) + sigma_1(n)/3.
Rational eichler_lhs(const HurwitzTable& table, std::int64_t n);
Rational eichler_rhs(std::int64_t n);

// 4 sum_s H*(l - s^2) s^2 - l sum_s H*(l - s^2) + lambda_3(l) for odd l.
Rational cohen_coefficient(const HurwitzTable& table, std::int64_t l);

// Cache directory: $NTLAB_CACHE or ./.ntlab-cache.
std::filesystem::path cache_dir();

void write_csv(const HurwitzTable& table, const std::filesystem::path& file);
HurwitzTable read_csv(const std::filesystem::path& file);
// Loads dir/hurwitz.csv when it covers `bound`, otherwise rebuilds and rewrites it.
HurwitzTable load_or_build(std::uint32_t bound, const std::filesystem::path& dir);

}  // namespace ntlab::classnumber

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ntlab/certified.hpp"
#include "ntlab/ffield.hpp"

namespace ntlab::kloosterman {

// cos(2*pi*k/p) for k in [0, p), rounded from quad precision to double-double.
class CosineTable {
 public:
  explicit CosineTable(std::uint32_t p);
  std::uint32_t p() const { return static_cast<std::uint32_t>(values_.size()); }
  const DoubleDouble& operator[](std::uint32_t k) const { return values_[k]; }
  // Absolute error of each entry.
  static constexpr double entry_err() { return 0x1p-104; }

 private:
  std::vector<DoubleDouble> values_;
};

// K(a, p) for every a in F_p, sharing one certified error bound.
struct KloostermanTable {
  std::uint32_t p = 0;
  std::vector<DoubleDouble> values;
  double err = 0.0;

  CertifiedReal operator[](std::uint32_t a) const { return {values[a], err}; }
};

// Straightforward reference kernel: one modular index computation per term.
KloostermanTable kloosterman_table_serial(const FieldCtx& ctx);
// OpenMP kernel: a-chunks per thread, incremental index update, cascaded sums.
KloostermanTable kloosterman_table_omp(const FieldCtx& ctx);
inline KloostermanTable kloosterman_table(const FieldCtx& ctx) { return kloosterman_table_omp(ctx); }

// K(a,p) = sum_{x != 0} cos(2 pi (x + a/x) / p); exactly -1 at a = 0.
CertifiedReal kloosterman_sum(const FieldCtx& ctx, std::uint32_t a);

struct MomentResult {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::optional<CharIdx> twist;
  std::int64_t value = 0;
  std::string backend;
};

// S(n)_p = sum_{a != 0} K(a,p)^n, exact via certified rounding. Leaving out
// K(0,p) = -1 is the convention under which S(1)_p = 1.
MomentResult untwisted_moment(const KloostermanTable& table, unsigned n);
MomentResult untwisted_moment(const FieldCtx& ctx, unsigned n);

// S(n,chi)_p for chi trivial or quadratic; other twists throw UnsupportedTwist.
MomentResult twisted_moment(const FieldCtx& ctx, const KloostermanTable& table, unsigned n,
                            CharIdx twist);
MomentResult twisted_moment(const FieldCtx& ctx, unsigned n, CharIdx twist);

// Same sum visited in the order a -> a*t^2, t a generator of the squares.
std::int64_t twisted_moment_permuted(const FieldCtx& ctx, const KloostermanTable& table,
                                     unsigned n, std::uint32_t t);

// M(n,phi)_p through the h_n recursion of the Frobenius-root symmetric sums.
std::int64_t sheaf_moment(const FieldCtx& ctx, const KloostermanTable& table, unsigned n);
std::int64_t sheaf_moment(const FieldCtx& ctx, unsigned n);
// M(4,phi)_p summed termwise as phi(a)(K^4 - 3pK^2 + p^2).
std::int64_t sheaf_moment4_termwise(const FieldCtx& ctx, const KloostermanTable& table);

// Histogram of theta = arccos(K/(2 sqrt p)) over [0, pi] for a = 1..p-1.
std::vector<std::uint64_t> angle_histogram(const KloostermanTable& table, unsigned bins);
std::vector<std::uint64_t> angle_histogram(const FieldCtx& ctx, unsigned bins);
// Sum over bins of (observed - expected)^2 / expected, with frequencies
// normalised to 1 and the expected mass taken from (2/pi) sin^2.
double semicircle_chi2(const std::vector<std::uint64_t>& histogram);

inline constexpr std::uint32_t kDefaultBruteCap = 200;

// p phi(-1) sum_{x_1..x_m != 0} phi(sum x_i + 1) phi(sum 1/x_i + 1), m in {1,2,3}.
std::int64_t symmetric_moment_rhs(const FieldCtx& ctx, unsigned m,
                                  std::uint32_t cap = kDefaultBruteCap);

}  // namespace ntlab::kloosterman

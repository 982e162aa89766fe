#include "ntlab/kloosterman.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ntlab/errors.hpp"

namespace ntlab::kloosterman {

CosineTable::CosineTable(std::uint32_t p) : values_(p) {
  const __float128 two_pi = 2 * M_PIq;
  for (std::uint32_t k = 0; k <= p / 2; ++k) {
    __float128 c = cosq(two_pi * k / p);
    double hi = static_cast<double>(c);
    double lo = static_cast<double>(c - hi);
    values_[k] = quick_two_sum(hi, lo);
    if (k != 0) values_[p - k] = values_[k];
  }
}

namespace {

double table_error_bound(std::uint32_t p) {
  const double n = p - 1.0;
  // Covers both the dd_add chain of the reference kernel and the cascaded
  // summation of the parallel kernel.
  double dd_chain = n * CosineTable::entry_err() + n * n * kDDRoundoff;
  double cascaded = cascaded_sum_bound(p - 1, n, CosineTable::entry_err());
  return std::max(dd_chain, cascaded);
}

}  // namespace

KloostermanTable kloosterman_table_serial(const FieldCtx& ctx) {
  const std::uint32_t p = ctx.p();
  const CosineTable cos(p);
  KloostermanTable t{p, std::vector<DoubleDouble>(p), table_error_bound(p)};
  t.values[0] = {-1.0, 0.0};
  for (std::uint32_t a = 1; a < p; ++a) {
    DoubleDouble s{};
    for (std::uint32_t x = 1; x < p; ++x) {
      std::uint32_t k = ctx.add(x, ctx.mul(a, ctx.inv(x)));
      s = dd_add(s, cos[k]);
    }
    t.values[a] = s;
  }
  return t;
}

KloostermanTable kloosterman_table_omp(const FieldCtx& ctx) {
  const std::uint32_t p = ctx.p();
  const CosineTable cos(p);
  KloostermanTable t{p, std::vector<DoubleDouble>(p), table_error_bound(p)};
  t.values[0] = {-1.0, 0.0};
  const std::int64_t chunk = 64;
  const std::int64_t nchunks = (p - 1 + chunk - 1) / chunk;
#pragma omp parallel
  {
    std::vector<std::uint32_t> idx(p);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < nchunks; ++c) {
      const std::uint32_t a0 = static_cast<std::uint32_t>(1 + c * chunk);
      const std::uint32_t a1 = std::min<std::uint32_t>(p, a0 + chunk);
      for (std::uint32_t x = 1; x < p; ++x) idx[x] = ctx.add(x, ctx.mul(a0, ctx.inv(x)));
      for (std::uint32_t a = a0; a < a1; ++a) {
        double s = 0.0, e = 0.0;
        for (std::uint32_t x = 1; x < p; ++x) {
          const DoubleDouble& v = cos[idx[x]];
          DoubleDouble ts = two_sum(s, v.hi);
          s = ts.hi;
          e += ts.lo + v.lo;
          std::uint32_t nx = idx[x] + ctx.inv(x);
          idx[x] = nx >= p ? nx - p : nx;
        }
        t.values[a] = quick_two_sum(s, e);
      }
    }
  }
  return t;
}

CertifiedReal kloosterman_sum(const FieldCtx& ctx, std::uint32_t a) {
  a %= ctx.p();
  if (a == 0) return CertifiedReal::exact(-1.0);
  const CosineTable cos(ctx.p());
  DoubleDouble s{};
  for (std::uint32_t x = 1; x < ctx.p(); ++x) s = dd_add(s, cos[ctx.add(x, ctx.mul(a, ctx.inv(x)))]);
  return {s, table_error_bound(ctx.p())};
}

namespace {

CertifiedReal power(const CertifiedReal& x, unsigned n) {
  CertifiedReal r = CertifiedReal::exact(1.0);
  for (unsigned i = 0; i < n; ++i) r = r * x;
  return r;
}

void require_order(unsigned n) {
  if (n == 0) throw DomainError("moment order must be positive");
}

const char* kBackend = "dd-cosine-table";

}  // namespace

MomentResult untwisted_moment(const KloostermanTable& table, unsigned n) {
  require_order(n);
  CertifiedReal s;
  for (std::uint32_t a = 1; a < table.p; ++a) s += power(table[a], n);
  return {table.p, n, std::nullopt, round_to_integer(s), kBackend};
}

MomentResult untwisted_moment(const FieldCtx& ctx, unsigned n) {
  return untwisted_moment(kloosterman_table(ctx), n);
}

MomentResult twisted_moment(const FieldCtx& ctx, const KloostermanTable& table, unsigned n,
                            CharIdx twist) {
  require_order(n);
  const std::uint32_t a_idx = twist.a % ctx.order();
  const bool trivial = a_idx == 0;
  const bool quadratic = a_idx == ctx.quadratic().a;
  if (!trivial && !quadratic)
    throw UnsupportedTwist("unsupported twist: only trivial and quadratic characters give rational moments");
  CertifiedReal s;
  for (std::uint32_t a = 1; a < table.p; ++a) {
    CertifiedReal term = power(table[a], n);
    s += (trivial || ctx.phi(a) > 0) ? term : -term;
  }
  return {table.p, n, CharIdx{a_idx}, round_to_integer(s), kBackend};
}

MomentResult twisted_moment(const FieldCtx& ctx, unsigned n, CharIdx twist) {
  return twisted_moment(ctx, kloosterman_table(ctx), n, twist);
}

std::int64_t twisted_moment_permuted(const FieldCtx& ctx, const KloostermanTable& table,
                                     unsigned n, std::uint32_t t) {
  require_order(n);
  const std::uint32_t t2 = ctx.mul(t, t);
  if (t2 == 0) throw DomainError("permutation multiplier must be nonzero");
  CertifiedReal s;
  // Walk each coset of <t^2> in F_p^x, visiting a, a t^2, a t^4, ...
  std::vector<bool> seen(table.p, false);
  for (std::uint32_t start = 1; start < table.p; ++start) {
    if (seen[start]) continue;
    std::uint32_t a = start;
    do {
      seen[a] = true;
      CertifiedReal term = power(table[a], n);
      s += ctx.phi(a) > 0 ? term : -term;
      a = ctx.mul(a, t2);
    } while (a != start);
  }
  return round_to_integer(s);
}

std::int64_t sheaf_moment(const FieldCtx& ctx, const KloostermanTable& table, unsigned n) {
  require_order(n);
  const CertifiedReal p = CertifiedReal::exact(static_cast<double>(ctx.p()));
  CertifiedReal s;
  for (std::uint32_t a = 1; a < table.p; ++a) {
    const CertifiedReal k = table[a];
    CertifiedReal h_prev = CertifiedReal::exact(1.0);
    CertifiedReal h = -k;
    for (unsigned i = 2; i <= n; ++i) {
      CertifiedReal next = -(k * h) - p * h_prev;
      h_prev = h;
      h = next;
    }
    s += ctx.phi(a) > 0 ? h : -h;
  }
  return round_to_integer(s);
}

std::int64_t sheaf_moment(const FieldCtx& ctx, unsigned n) {
  return sheaf_moment(ctx, kloosterman_table(ctx), n);
}

std::int64_t sheaf_moment4_termwise(const FieldCtx& ctx, const KloostermanTable& table) {
  const double p = ctx.p();
  const CertifiedReal three_p = CertifiedReal::exact(3.0 * p);
  const CertifiedReal p2 = CertifiedReal::exact(p * p);
  CertifiedReal s;
  for (std::uint32_t a = 1; a < table.p; ++a) {
    const CertifiedReal k = table[a];
    const CertifiedReal k2 = k * k;
    CertifiedReal term = k2 * k2 - three_p * k2 + p2;
    s += ctx.phi(a) > 0 ? term : -term;
  }
  return round_to_integer(s);
}

std::vector<std::uint64_t> angle_histogram(const KloostermanTable& table, unsigned bins) {
  if (bins == 0) throw DomainError("histogram needs at least one bin");
  std::vector<std::uint64_t> h(bins, 0);
  const double scale = 2.0 * std::sqrt(static_cast<double>(table.p));
  for (std::uint32_t a = 1; a < table.p; ++a) {
    double c = std::clamp(table.values[a].to_double() / scale, -1.0, 1.0);
    double theta = std::acos(c);
    auto b = static_cast<unsigned>(theta / std::numbers::pi * bins);
    h[std::min(b, bins - 1)]++;
  }
  return h;
}

std::vector<std::uint64_t> angle_histogram(const FieldCtx& ctx, unsigned bins) {
  return angle_histogram(kloosterman_table(ctx), bins);
}

double semicircle_chi2(const std::vector<std::uint64_t>& histogram) {
  std::uint64_t total = 0;
  for (auto c : histogram) total += c;
  if (total == 0) return 0.0;
  const double pi = std::numbers::pi;
  auto cdf = [pi](double t) { return (t / 2.0 - std::sin(2.0 * t) / 4.0) * 2.0 / pi; };
  const double width = pi / static_cast<double>(histogram.size());
  double chi2 = 0.0;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    double expected = cdf(width * (i + 1)) - cdf(width * i);
    double observed = static_cast<double>(histogram[i]) / static_cast<double>(total);
    chi2 += (observed - expected) * (observed - expected) / expected;
  }
  return chi2;
}

std::int64_t symmetric_moment_rhs(const FieldCtx& ctx, unsigned m, std::uint32_t cap) {
  if (m < 1 || m > 3) throw DomainError("symmetric moment supports m in {1,2,3}");
  const std::uint32_t p = ctx.p();
  if (p > cap)
    throw CapExceeded("brute-force cap: p=" + std::to_string(p) + " exceeds " + std::to_string(cap));
  std::int64_t total = 0;
  // Recursive enumeration over (running sum, running inverse sum).
  auto rec = [&](auto&& self, unsigned depth, std::uint32_t s, std::uint32_t t) -> void {
    if (depth == m) {
      total += ctx.phi(ctx.add(s, 1)) * ctx.phi(ctx.add(t, 1));
      return;
    }
    for (std::uint32_t x = 1; x < p; ++x) self(self, depth + 1, ctx.add(s, x), ctx.add(t, ctx.inv(x)));
  };
  rec(rec, 0, 0, 0);
  return static_cast<std::int64_t>(p) * ctx.phi(p - 1) * total;
}

}  // namespace ntlab::kloosterman

#include "ntlab/ffield.hpp"

#include <string>

#include "ntlab/errors.hpp"

namespace ntlab {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  i128 t = 0, nt = 1;
  i128 r = m, nr = a % m;
  while (nr != 0) {
    i128 q = r / nr;
    i128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("invmod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

i64 ipow(i64 base, unsigned exp) {
  i64 r = 1;
  while (exp--) r *= base;
  return r;
}

i64 isqrt(i64 n) {
  if (n < 0) return -1;
  i64 r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

i64 gcd(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> f;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    f.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) f.push_back(n);
  return f;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto l : factors) {
      if (powmod(g, (p - 1) / l, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw DomainError("no primitive root mod " + std::to_string(p));
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw DomainError(std::to_string(p) + " is not an odd prime");
  g_ = smallest_primitive_root(p);
  dlog_.assign(p, 0);
  exp_.assign(p - 1, 0);
  inv_.assign(p, 0);
  qr_.assign(p, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < p - 1; ++k) {
    exp_[k] = x;
    dlog_[x] = k;
    qr_[x] = (k % 2 == 0) ? 1 : -1;
    x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * g_ % p);
  }
  for (std::uint32_t y = 1; y < p; ++y) inv_[y] = exp_[(p - 1 - dlog_[y]) % (p - 1)];
}

FieldCtx make_field_ctx(std::uint32_t p) { return FieldCtx(p); }

std::optional<std::uint32_t> char_eval(const FieldCtx& ctx, CharIdx idx, std::uint32_t x) {
  x %= ctx.p();
  if (x == 0) return std::nullopt;
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(idx.a % ctx.order()) * ctx.dlog(x) %
                                    ctx.order());
}

int legendre_phi(const FieldCtx& ctx, std::uint32_t x) { return ctx.phi(x % ctx.p()); }

std::uint32_t unique_cube_root(const FieldCtx& ctx, std::uint32_t lambda) {
  if (ctx.p() % 3 != 2)
    throw DomainError("cube map is not a bijection mod " + std::to_string(ctx.p()));
  // 3e = 1 mod p-1
  std::uint64_t e = invmod(3, ctx.order());
  return ctx.pow(lambda % ctx.p(), e);
}

}  // namespace ntlab

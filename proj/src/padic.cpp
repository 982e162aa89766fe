#include "ntlab/padic.hpp"

#include <sstream>

#include "ntlab/errors.hpp"

namespace ntlab::padic {

namespace {

using Poly = std::vector<u64>;

Poly poly_shift(const Poly& c, u64 s, u64 mod) {
  // Horner: sum c_k (t + s)^k, truncated to the same length.
  const std::size_t n = c.size();
  Poly r(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    Poly next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (r[i] == 0) continue;
      next[i] = addmod(next[i], mulmod(r[i], s, mod), mod);
      if (i + 1 < n) next[i + 1] = addmod(next[i + 1], r[i], mod);
    }
    next[0] = addmod(next[0], c[k], mod);
    r = std::move(next);
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 mod) {
  const std::size_t n = a.size();
  Poly r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], mod), mod);
    }
  }
  return r;
}

u64 poly_eval(const Poly& c, u64 t, u64 mod) {
  u64 r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = addmod(mulmod(r, t, mod), c[k], mod);
  return r;
}

}  // namespace

PadicCtx::PadicCtx(std::uint32_t p, unsigned K) : field_(p), K_(K) {
  if (K == 0) throw DomainError("precision K must be positive");
  pw_.assign(K + 1, 1);
  for (unsigned e = 1; e <= K; ++e) {
    if (pw_[e - 1] > (u64{1} << 62) / p) {
      throw DomainError("p^K exceeds 2^62 for p=" + std::to_string(p) +
                        ", K=" + std::to_string(K));
    }
    pw_[e] = pw_[e - 1] * p;
  }
  mod_ = pw_[K];

  const std::uint32_t n = p - 1;
  u64 w = field_.generator();
  for (;;) {
    u64 next = powmod(w, p, mod_);
    if (next == w) break;
    w = next;
  }
  zeta_.resize(n);
  zeta_[0] = 1 % mod_;
  for (std::uint32_t k = 1; k < n; ++k) zeta_[k] = mulmod(zeta_[k - 1], w, mod_);
  teich_.assign(p, 0);
  for (std::uint32_t x = 1; x < p; ++x) teich_[x] = zeta_[field_.dlog(x)];

  blocks_.resize(K);
  if (K >= 2) {
    Poly b(K, 0);
    b[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) {
      Poly lin(K, 0);
      lin[0] = i;
      lin[1] = p % mod_;
      b = poly_mul(b, lin, mod_);
    }
    blocks_[1] = b;
    for (unsigned l = 2; l < K; ++l) {
      Poly acc(K, 0);
      acc[0] = 1;
      for (std::uint32_t m = 0; m < p; ++m) {
        acc = poly_mul(acc, poly_shift(blocks_[l - 1], mulmod(m, pw_[l - 2], mod_), mod_), mod_);
      }
      blocks_[l] = acc;
    }
  }
}

u64 PadicCtx::teich(std::uint32_t x) const {
  x %= p();
  if (x == 0) throw DomainError("Teichmueller lift of 0");
  return teich_[x];
}

u64 PadicCtx::zeta(std::int64_t k) const {
  return zeta_[to_residue(k, p() - 1)];
}

u64 PadicCtx::omega_pow(std::uint32_t x, std::int64_t a) const {
  x %= p();
  if (x == 0) throw DomainError("character evaluated at 0");
  return zeta(static_cast<std::int64_t>(field_.dlog(x)) * (a % static_cast<std::int64_t>(p() - 1)));
}

u64 PadicCtx::inv(u64 a) const {
  if (a % p() == 0) throw DomainError("not a p-adic unit");
  return invmod(a, mod_);
}

unsigned PadicCtx::valuation(u64 a) const {
  a %= mod_;
  if (a == 0) return K_;
  unsigned v = 0;
  while (a % p() == 0) {
    a /= p();
    ++v;
  }
  return v;
}

u64 PadicCtx::gamma_int(u64 N) const {
  if (N >= mod_) throw DomainError("gamma_int argument must be below p^K");
  const u64 P = p();
  u64 prod = 1 % mod_;
  u64 base = 0;
  for (unsigned l = K_; l-- > 1;) {
    const u64 digit = (N / pw_[l]) % P;
    for (u64 m = 0; m < digit; ++m) {
      prod = mulmod(prod, poly_eval(blocks_[l], base / P, mod_), mod_);
      base += pw_[l];
    }
  }
  const u64 d0 = N % P;
  for (u64 i = 1; i < d0; ++i) prod = mulmod(prod, (base + i) % mod_, mod_);
  return N % 2 == 0 ? prod : neg(prod);
}

u64 PadicCtx::gamma_int_naive(u64 N) const {
  u64 prod = 1 % mod_;
  for (u64 j = 1; j < N; ++j) {
    if (j % p() != 0) prod = mulmod(prod, j % mod_, mod_);
  }
  return N % 2 == 0 ? prod : neg(prod);
}

u64 PadicCtx::residue(const Rational& x) const {
  const std::int64_t den = x.den();
  if (den % static_cast<std::int64_t>(p()) == 0) {
    throw DomainError("denominator of " + x.to_string() + " is divisible by p");
  }
  return mulmod(to_residue(x.num(), mod_), inv(to_residue(den, mod_)), mod_);
}

u64 PadicCtx::gamma(const Rational& x) const { return gamma_int(residue(x)); }
u64 PadicCtx::gamma_naive(const Rational& x) const { return gamma_int_naive(residue(x)); }

u64 teichmuller(const PadicCtx& ctx, std::uint32_t x) {
  x %= ctx.p();
  if (x == 0) throw DomainError("Teichmueller lift of 0");
  u64 t = x;
  for (unsigned i = 0; i <= ctx.K() + 1; ++i) {
    u64 next = ctx.pow(t, ctx.p());
    if (next == t) return t;
    t = next;
  }
  throw PadicPrecisionError("Teichmueller iteration did not stabilise");
}

PiRingElem::PiRingElem(const PadicCtx& ctx) : ctx_(&ctx), c_(ctx.p() - 1, 0) {}

PiRingElem PiRingElem::monomial(const PadicCtx& ctx, u64 c, std::uint64_t deg) {
  PiRingElem e(ctx);
  const std::uint64_t n = ctx.p() - 1;
  u64 coeff = c % ctx.modulus();
  const u64 minus_p = ctx.neg(ctx.p() % ctx.modulus());
  for (std::uint64_t q = deg / n; q > 0; --q) coeff = ctx.mul(coeff, minus_p);
  e.c_[deg % n] = coeff;
  return e;
}

bool PiRingElem::is_degree0() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

u64 PiRingElem::project0() const {
  if (!is_degree0()) throw PadicPrecisionError("pi-ring element has non-degree-0 support");
  return c_[0];
}

PiRingElem PiRingElem::operator+(const PiRingElem& o) const {
  PiRingElem r(*ctx_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ctx_->add(c_[i], o.c_[i]);
  return r;
}

PiRingElem PiRingElem::operator-(const PiRingElem& o) const {
  PiRingElem r(*ctx_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ctx_->sub(c_[i], o.c_[i]);
  return r;
}

PiRingElem PiRingElem::operator*(const PiRingElem& o) const {
  const std::size_t n = c_.size();
  PiRingElem r(*ctx_);
  const u64 minus_p = ctx_->neg(ctx_->p() % ctx_->modulus());
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      u64 t = ctx_->mul(c_[i], o.c_[j]);
      std::size_t k = i + j;
      if (k >= n) {
        k -= n;
        t = ctx_->mul(t, minus_p);
      }
      r.c_[k] = ctx_->add(r.c_[k], t);
    }
  }
  return r;
}

PiRingElem PiRingElem::scaled(u64 s) const {
  PiRingElem r(*ctx_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ctx_->mul(c_[i], s);
  return r;
}

PiRingElem gauss_sum_gk(const PadicCtx& ctx, std::uint32_t j) {
  const std::uint32_t n = ctx.p() - 1;
  if (j >= n) throw DomainError("Gauss sum index out of range");
  if (j == 0) return PiRingElem::monomial(ctx, ctx.neg(1), 0);
  return PiRingElem::monomial(ctx, ctx.neg(ctx.gamma(Rational(j, n))), j);
}

PiRingElem gauss_sum(const PadicCtx& ctx, CharIdx chi) {
  return gauss_sum_gk(ctx, GaussTable::index_of(ctx, chi.a));
}

GaussTable::GaussTable(const PadicCtx& ctx) : unit(ctx.p() - 1) {
  const std::int64_t n = ctx.p() - 1;
  unit[0] = ctx.neg(1);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t j = 1; j < n; ++j) unit[j] = ctx.neg(ctx.gamma(Rational(j, n)));
}

std::uint32_t GaussTable::index_of(const PadicCtx& ctx, std::int64_t a) {
  return static_cast<std::uint32_t>(to_residue(-a, ctx.p() - 1));
}

u64 jacobi_sum(const PadicCtx& ctx, CharIdx a, CharIdx b) {
  const FieldCtx& f = ctx.field();
  u64 s = 0;
  for (std::uint32_t y = 2; y < ctx.p(); ++y) {
    const std::int64_t k = static_cast<std::int64_t>(a.a) * f.dlog(y) +
                           static_cast<std::int64_t>(b.a) * f.dlog(f.sub(1, y));
    s = ctx.add(s, ctx.zeta(k));
  }
  return s;
}

// ---- QpValue -------------------------------------------------------------

namespace {

constexpr std::int64_t kExactZeroVal = 1 << 20;

}  // namespace

QpValue QpValue::from_residue(const PadicCtx& ctx, u64 r, std::int64_t shift) {
  r %= ctx.modulus();
  QpValue q;
  if (r == 0) {
    q.val = shift + ctx.K();
    return q;
  }
  const unsigned v = ctx.valuation(r);
  q.val = shift + v;
  q.prec = ctx.K() - v;
  q.unit = (r / ctx.power(v)) % ctx.power(q.prec);
  return q;
}

QpValue QpValue::from_rational(const PadicCtx& ctx, const Rational& x) {
  QpValue q;
  if (x.num() == 0) {
    q.val = kExactZeroVal;
    return q;
  }
  std::int64_t num = x.num(), den = x.den(), v = 0;
  const std::int64_t p = ctx.p();
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  q.val = v;
  q.prec = ctx.K();
  q.unit = ctx.residue(Rational(num, den));
  return q;
}

std::string QpValue::to_string(const PadicCtx& ctx) const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(" << ctx.p() << "^" << val << ")";
  } else {
    os << unit << "*" << ctx.p() << "^" << val << "+O(" << ctx.p() << "^" << abs_precision()
       << ")";
  }
  return os.str();
}

QpValue qp_add(const PadicCtx& ctx, const QpValue& a, const QpValue& b) {
  const std::int64_t A = std::min(a.abs_precision(), b.abs_precision());
  const std::int64_t m = std::min(a.is_zero() ? A : a.val, b.is_zero() ? A : b.val);
  QpValue r;
  if (A <= m) {
    r.val = A;
    return r;
  }
  const std::int64_t rel = std::min<std::int64_t>(A - m, ctx.K());
  const u64 M = ctx.power(static_cast<unsigned>(rel));
  auto part = [&](const QpValue& x) -> u64 {
    if (x.is_zero()) return 0;
    const std::int64_t shift = x.val - m;
    if (shift >= rel) return 0;
    return mulmod(x.unit % M, ctx.power(static_cast<unsigned>(shift)), M);
  };
  const u64 s = addmod(part(a), part(b), M);
  if (s == 0) {
    r.val = m + rel;
    return r;
  }
  unsigned v = 0;
  u64 u = s;
  while (u % ctx.p() == 0) {
    u /= ctx.p();
    ++v;
  }
  r.val = m + v;
  r.prec = static_cast<unsigned>(rel - v);
  r.unit = u % ctx.power(r.prec);
  return r;
}

QpValue qp_neg(const PadicCtx& ctx, const QpValue& a) {
  QpValue r = a;
  if (!a.is_zero()) {
    const u64 M = ctx.power(a.prec);
    r.unit = a.unit % M == 0 ? 0 : M - a.unit % M;
  }
  return r;
}

QpValue qp_sub(const PadicCtx& ctx, const QpValue& a, const QpValue& b) {
  return qp_add(ctx, a, qp_neg(ctx, b));
}

QpValue qp_mul(const PadicCtx& ctx, const QpValue& a, const QpValue& b) {
  QpValue r;
  if (a.is_zero() || b.is_zero()) {
    r.val = a.val + b.val;
    return r;
  }
  r.val = a.val + b.val;
  r.prec = std::min(a.prec, b.prec);
  const u64 M = ctx.power(r.prec);
  r.unit = mulmod(a.unit % M, b.unit % M, M);
  return r;
}

bool qp_agree(const PadicCtx& ctx, const QpValue& a, const QpValue& b) {
  return qp_sub(ctx, a, b).is_zero();
}

std::int64_t qp_to_integer(const PadicCtx& ctx, const QpValue& a, std::int64_t e,
                           std::int64_t bound) {
  std::int64_t emax = 0;
  for (u64 m = 1; m <= (u64{1} << 62) / ctx.p(); m *= ctx.p()) ++emax;
  const std::int64_t E = std::min(a.abs_precision() + e, emax);
  if (E <= 0) throw PadicPrecisionError("raise K: no digits known");
  u64 M = 1;
  for (std::int64_t i = 0; i < E; ++i) M *= ctx.p();
  if (static_cast<u64>(bound) >= M / 2) {
    throw PadicPrecisionError("raise K: bound " + std::to_string(bound) + " exceeds p^" +
                              std::to_string(E) + "/2");
  }
  if (a.is_zero()) return 0;
  const std::int64_t v = a.val + e;
  if (v < 0) throw DomainError("value is not p-integral");
  if (v >= E) return 0;
  u64 pv = 1;
  for (std::int64_t i = 0; i < v; ++i) pv *= ctx.p();
  return symmetric(mulmod(a.unit % M, pv, M), M);
}

// ---- checks ----------------------------------------------------------------

namespace {

std::string residue_string(const PadicCtx& ctx, u64 r) { return std::to_string(ctx.lift(r)); }

std::string pi_string(const PadicCtx& ctx, const PiRingElem& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
    if (e.coeffs()[i] == 0) continue;
    if (!first) os << " + ";
    os << ctx.lift(e.coeffs()[i]);
    if (i > 0) os << "*pi^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

VerificationRecord gk_consistency_check(const PadicCtx& ctx, CharIdx a, CharIdx b) {
  const std::uint32_t n = ctx.p() - 1;
  const std::uint32_t c = (a.a + b.a) % n;
  if (a.a % n == 0 || b.a % n == 0 || c == 0) {
    throw DomainError("Gross-Koblitz check needs a, b, a+b nontrivial");
  }
  const std::uint32_t ja = GaussTable::index_of(ctx, a.a);
  const std::uint32_t jb = GaussTable::index_of(ctx, b.a);
  const std::uint32_t jc = GaussTable::index_of(ctx, c);
  const std::uint32_t e = ja + jb - jc;  // 0 or p-1
  if (e != 0 && e != n) throw PadicPrecisionError("pi exponent is not 0 or p-1");
  u64 q = ctx.mul(ctx.gamma(Rational(ja, n)), ctx.gamma(Rational(jb, n)));
  q = ctx.mul(q, ctx.inv(ctx.gamma(Rational(jc, n))));
  q = ctx.neg(q);  // (-1)(-1)/(-1)
  if (e == n) q = ctx.mul(q, ctx.neg(ctx.p()));
  VerificationRecord r = exact_record(ctx.p(), "gk", residue_string(ctx, jacobi_sum(ctx, a, b)),
                                      residue_string(ctx, q));
  r.note = "a=" + std::to_string(a.a) + " b=" + std::to_string(b.a) + " K=" + std::to_string(ctx.K());
  return r;
}

VerificationRecord hasse_davenport_check(const PadicCtx& ctx, unsigned m, CharIdx psi) {
  const std::uint32_t n = ctx.p() - 1;
  if (m == 0 || n % m != 0) throw DomainError("Hasse-Davenport needs m | p-1");
  const std::uint32_t step = n / m;
  PiRingElem lhs = PiRingElem::monomial(ctx, 1, 0);
  for (unsigned i = 0; i < m; ++i) lhs = lhs * gauss_sum(ctx, CharIdx{(psi.a + i * step) % n});
  PiRingElem rhs = gauss_sum(ctx, CharIdx{static_cast<std::uint32_t>((u64{psi.a} * m) % n)});
  rhs = rhs.scaled(ctx.omega_pow(m, -static_cast<std::int64_t>(m) * psi.a));
  for (unsigned i = 1; i < m; ++i) rhs = rhs * gauss_sum(ctx, CharIdx{i * step});
  VerificationRecord r =
      exact_record(ctx.p(), "hasse-davenport", pi_string(ctx, lhs), pi_string(ctx, rhs));
  r.note = "m=" + std::to_string(m) + " psi=" + std::to_string(psi.a);
  return r;
}

GammaProductResult gamma_product_formulas(const PadicCtx& ctx, unsigned t, std::uint32_t j) {
  if (t == 0 || t % ctx.p() == 0) throw DomainError("multiplier must be prime to p");
  const std::int64_t n = ctx.p() - 1;
  const std::int64_t T = t;
  u64 base = 1;  // prod_{h=1}^{t-1} Gamma_p(h/t)
  for (std::int64_t h = 1; h < T; ++h) base = ctx.mul(base, ctx.gamma(Rational(h, T)));
  GammaProductResult res;

  {
    const Rational x(j, n);
    u64 lhs = 1;
    for (std::int64_t h = 0; h < T; ++h) lhs = ctx.mul(lhs, ctx.gamma((x + Rational(h)) / Rational(T)));
    u64 rhs = ctx.mul(ctx.omega_pow(t, j), ctx.mul(ctx.gamma(x), base));
    res.multiplication = lhs == rhs;
  }
  {
    u64 lhs = ctx.mul(ctx.omega_pow(t, T * j), ctx.mul(ctx.gamma(Rational(T * j, n).frac()), base));
    u64 rhs = 1;
    for (std::int64_t h = 0; h < T; ++h) {
      rhs = ctx.mul(rhs, ctx.gamma((Rational(h, T) + Rational(j, n)).frac()));
    }
    res.shift_plus = lhs == rhs;
  }
  {
    u64 lhs =
        ctx.mul(ctx.omega_pow(t, -T * j), ctx.mul(ctx.gamma(Rational(-T * j, n).frac()), base));
    u64 rhs = 1;
    for (std::int64_t h = 1; h <= T; ++h) {
      rhs = ctx.mul(rhs, ctx.gamma((Rational(h, T) - Rational(j, n)).frac()));
    }
    res.shift_minus = lhs == rhs;
  }
  return res;
}

VerificationRecord gamma_product_checks(const PadicCtx& ctx, unsigned t, std::uint32_t j) {
  const GammaProductResult g = gamma_product_formulas(ctx, t, j);
  auto flags = [](const GammaProductResult& r) {
    return std::string(r.multiplication ? "1" : "0") + (r.shift_plus ? "1" : "0") +
           (r.shift_minus ? "1" : "0");
  };
  VerificationRecord r = exact_record(ctx.p(), "gamma-products", flags(g), "111");
  r.note = "t=" + std::to_string(t) + " j=" + std::to_string(j);
  return r;
}

bool gamma_reflection_holds(const PadicCtx& ctx, const Rational& x) {
  std::uint32_t x0 = static_cast<std::uint32_t>(ctx.residue(x) % ctx.p());
  if (x0 == 0) x0 = ctx.p();
  const u64 prod = ctx.mul(ctx.gamma(x), ctx.gamma(Rational(1) - x));
  return prod == (x0 % 2 == 0 ? 1 : ctx.neg(1));
}

}  // namespace ntlab::padic

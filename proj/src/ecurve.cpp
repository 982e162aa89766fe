#include "ntlab/ecurve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ntlab/errors.hpp"

namespace ntlab::ecurve {

namespace {

void require_nonsingular_legendre(std::uint32_t lambda) {
  if (lambda <= 1) throw DomainError("singular curve");
}

std::uint32_t legendre_j_numerator(const FieldCtx& f, std::uint32_t l) {
  std::uint32_t q = f.add(f.sub(f.mul(l, l), l), 1);
  return f.mul(256 % f.p(), f.mul(q, f.mul(q, q)));
}

}  // namespace

int ap_legendre(const FieldCtx& ctx, std::uint32_t lambda) {
  lambda %= ctx.p();
  require_nonsingular_legendre(lambda);
  int s = 0;
  for (std::uint32_t x = 0; x < ctx.p(); ++x) {
    s += ctx.phi(ctx.mul(ctx.mul(x, ctx.sub(x, 1)), ctx.sub(x, lambda)));
  }
  return -s;
}

std::vector<int> trace_table_serial(const FieldCtx& ctx) {
  std::vector<int> t(ctx.p(), 0);
  for (std::uint32_t l = 2; l < ctx.p(); ++l) t[l] = ap_legendre(ctx, l);
  return t;
}

// phi is multiplicative, so a_p(l) = -sum_x phi(x(x-1)) phi(x-l): a
// correlation of two sign tables with no modular products in the inner loop.
std::vector<int> trace_table_omp(const FieldCtx& ctx) {
  const std::uint32_t p = ctx.p();
  std::vector<int> f(p), q(2 * p);
  for (std::uint32_t x = 0; x < p; ++x) f[x] = ctx.phi(ctx.mul(x, ctx.sub(x, 1)));
  for (std::uint32_t x = 0; x < 2 * p; ++x) q[x] = ctx.phi(x % p);
  std::vector<int> t(p, 0);
  const std::int64_t n = p;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t l = 2; l < n; ++l) {
    const int* shifted = q.data() + (p - l);  // shifted[x] = phi(x - l)
    int s = 0;
    for (std::uint32_t x = 0; x < p; ++x) s += f[x] * shifted[x];
    t[l] = -s;
  }
  return t;
}

std::uint32_t j_invariant(const FieldCtx& ctx, std::uint32_t lambda) {
  lambda %= ctx.p();
  require_nonsingular_legendre(lambda);
  std::uint32_t d = ctx.mul(lambda, ctx.sub(lambda, 1));
  d = ctx.mul(d, d);
  return ctx.mul(legendre_j_numerator(ctx, lambda), ctx.inv(d));
}

std::array<std::uint32_t, 6> lambda_orbit(const FieldCtx& ctx, std::uint32_t l) {
  require_nonsingular_legendre(l % ctx.p());
  const std::uint32_t one_minus = ctx.sub(1, l);
  const std::uint32_t l_minus = ctx.sub(l, 1);
  return {l,
          ctx.inv(l),
          one_minus,
          ctx.inv(one_minus),
          ctx.mul(l, ctx.inv(l_minus)),
          ctx.mul(l_minus, ctx.inv(l))};
}

std::array<bool, 3> twist_relation_check(const FieldCtx& ctx, std::uint32_t l) {
  auto o = lambda_orbit(ctx, l);
  const int a = ap_legendre(ctx, l);
  return {a == ctx.phi(l) * ap_legendre(ctx, o[1]),
          a == ctx.phi(ctx.p() - 1) * ap_legendre(ctx, o[2]),
          a == ctx.phi(o[2]) * ap_legendre(ctx, o[4])};
}

std::string to_string(TorsionClass c) {
  switch (c) {
    case TorsionClass::k2x2: return "2x2";
    case TorsionClass::k2x4: return "2x4";
    case TorsionClass::k4x4: return "4x4";
  }
  return "?";
}

TorsionClass torsion_class_from_roots(const FieldCtx& ctx, std::uint32_t e1, std::uint32_t e2,
                                      std::uint32_t e3) {
  auto halvable = [&](std::uint32_t e, std::uint32_t a, std::uint32_t b) {
    return ctx.phi(ctx.sub(e, a)) == 1 && ctx.phi(ctx.sub(e, b)) == 1;
  };
  int h = int(halvable(e1, e2, e3)) + int(halvable(e2, e1, e3)) + int(halvable(e3, e1, e2));
  if (h == 3) return TorsionClass::k4x4;
  return h >= 1 ? TorsionClass::k2x4 : TorsionClass::k2x2;
}

TorsionClass torsion_class(const FieldCtx& ctx, std::uint32_t lambda) {
  lambda %= ctx.p();
  require_nonsingular_legendre(lambda);
  return torsion_class_from_roots(ctx, 0, 1, lambda);
}

// (x - 0)(x - 1)(x - l) = x^3 + a2 x^2 + a4 x, then shift x -> x - a2/3.
Weierstrass legendre_to_weierstrass(const FieldCtx& ctx, std::uint32_t lambda) {
  lambda %= ctx.p();
  require_nonsingular_legendre(lambda);
  if (ctx.p() <= 3) throw DomainError("short Weierstrass form needs p > 3");
  const std::uint32_t a2 = ctx.neg(ctx.add(1, lambda));
  const std::uint32_t a4 = lambda;
  const std::uint32_t inv3 = ctx.inv(3);
  const std::uint32_t inv27 = ctx.inv(27 % ctx.p());
  const std::uint32_t a2sq = ctx.mul(a2, a2);
  Weierstrass w;
  w.A = ctx.sub(a4, ctx.mul(a2sq, inv3));
  w.B = ctx.sub(ctx.mul(ctx.mul(2, ctx.mul(a2sq, a2)), inv27), ctx.mul(ctx.mul(a2, a4), inv3));
  return w;
}

bool is_nonsingular(const FieldCtx& ctx, Weierstrass w) {
  const std::uint32_t a3 = ctx.mul(w.A, ctx.mul(w.A, w.A));
  return ctx.add(ctx.mul(4, a3), ctx.mul(27, ctx.mul(w.B, w.B))) != 0;
}

std::uint32_t j_invariant(const FieldCtx& ctx, Weierstrass w) {
  const std::uint32_t a3 = ctx.mul(4, ctx.mul(w.A, ctx.mul(w.A, w.A)));
  const std::uint32_t disc = ctx.add(a3, ctx.mul(27, ctx.mul(w.B, w.B)));
  if (disc == 0) throw DomainError("singular curve");
  return ctx.mul(ctx.mul(1728 % ctx.p(), a3), ctx.inv(disc));
}

int trace(const FieldCtx& ctx, Weierstrass w) {
  int s = 0;
  for (std::uint32_t x = 0; x < ctx.p(); ++x) {
    std::uint32_t v = ctx.add(ctx.mul(x, ctx.add(ctx.mul(x, x), w.A)), w.B);
    s += ctx.phi(v);
  }
  return -s;
}

std::vector<std::uint32_t> roots(const FieldCtx& ctx, Weierstrass w) {
  std::vector<std::uint32_t> r;
  for (std::uint32_t x = 0; x < ctx.p(); ++x) {
    if (ctx.add(ctx.mul(x, ctx.add(ctx.mul(x, x), w.A)), w.B) == 0) r.push_back(x);
  }
  return r;
}

TwistKey twist_key(const FieldCtx& ctx, Weierstrass w) {
  if (!is_nonsingular(ctx, w)) throw DomainError("singular curve");
  const std::uint32_t n = ctx.order();
  if (w.A == 0) return {0, ctx.dlog(w.B) % static_cast<std::uint32_t>(gcd(6, n))};
  if (w.B == 0) {
    return {1728 % ctx.p(), ctx.dlog(w.A) % static_cast<std::uint32_t>(gcd(4, n))};
  }
  return {j_invariant(ctx, w), ctx.phi(ctx.mul(w.B, ctx.inv(w.A))) == 1 ? 0u : 1u};
}

bool isomorphic_brute(const FieldCtx& ctx, Weierstrass w1, Weierstrass w2) {
  for (std::uint32_t u = 1; u < ctx.p(); ++u) {
    const std::uint32_t u2 = ctx.mul(u, u);
    const std::uint32_t u4 = ctx.mul(u2, u2);
    if (ctx.mul(u4, w1.A) == w2.A && ctx.mul(ctx.mul(u4, u2), w1.B) == w2.B) return true;
  }
  return false;
}

IsoClassKey iso_class_key(const FieldCtx& ctx, std::uint32_t lambda, int ap) {
  IsoClassKey k;
  k.j = j_invariant(ctx, lambda);
  k.ap = ap;
  k.degenerate = ap == 0 || k.j == 0 || k.j == 1728 % ctx.p();
  return k;
}

bool legendre_isomorphic(const FieldCtx& ctx, std::uint32_t l1, int ap1, std::uint32_t l2,
                         int ap2) {
  const IsoClassKey k1 = iso_class_key(ctx, l1, ap1);
  const IsoClassKey k2 = iso_class_key(ctx, l2, ap2);
  if (k1.j != k2.j || k1.ap != k2.ap) return false;
  if (!k1.degenerate) return true;
  return twist_key(ctx, legendre_to_weierstrass(ctx, l1)) ==
         twist_key(ctx, legendre_to_weierstrass(ctx, l2));
}

SquareFamily::SquareFamily(const FieldCtx& ctx) : SquareFamily(ctx, trace_table(ctx)) {}

SquareFamily::SquareFamily(const FieldCtx& ctx, const std::vector<int>& traces)
    : ctx_(&ctx), ap_(ctx.p(), 0), j_(ctx.p(), 0), key_(ctx.p()) {
  for (std::uint32_t mu = 2; mu + 1 < ctx.p(); ++mu) {
    const std::uint32_t l = ctx.mul(mu, mu);
    ap_[mu] = traces[l];
    j_[mu] = j_invariant(ctx, l);
    key_[mu] = twist_key(ctx, legendre_to_weierstrass(ctx, l));
  }
}

bool SquareFamily::admissible(std::uint32_t mu) const {
  return mu >= 2 && mu + 1 < ctx_->p();
}

std::vector<std::uint32_t> SquareFamily::l_set(std::uint32_t lambda) const {
  if (!admissible(lambda)) throw DomainError("lambda must avoid 0 and +-1");
  std::vector<std::uint32_t> out;
  for (std::uint32_t mu = 2; mu + 1 < ctx_->p(); ++mu) {
    if (key_[mu] == key_[lambda]) out.push_back(mu);
  }
  return out;
}

std::size_t SquareFamily::distinct_classes() const {
  std::set<TwistKey> keys;
  for (std::uint32_t mu = 2; mu + 1 < ctx_->p(); ++mu) keys.insert(key_[mu]);
  return keys.size();
}

std::vector<std::uint32_t> l_set(const FieldCtx& ctx, std::uint32_t lambda) {
  return SquareFamily(ctx).l_set(lambda);
}

std::optional<std::size_t> l_set_predicted_size(const FieldCtx& ctx, std::uint32_t lambda) {
  const std::uint32_t p = ctx.p();
  if (lambda % p < 2 || lambda % p == p - 1) throw DomainError("lambda must avoid 0 and +-1");
  const std::uint32_t l2 = ctx.mul(lambda, lambda);
  const std::uint32_t j = j_invariant(ctx, l2);
  if (j == 0) {
    if (p % 12 == 1) return 4;
    return 0;  // no such lambda exists for p = 7 mod 12 (or p = 2 mod 3)
  }
  if (j == 1728 % p) {
    if (p % 8 == 1) return 6;
    if (p % 8 == 5) return 2;
    return std::nullopt;
  }
  if (p % 4 == 1 && ctx.phi(ctx.sub(1, l2)) == 1) return 12;
  return 4;
}

std::vector<CurveClass> enumerate_iso_classes(const FieldCtx& ctx) {
  std::map<TwistKey, Weierstrass> reps;
  for (std::uint32_t a = 0; a < ctx.p(); ++a) {
    for (std::uint32_t b = 0; b < ctx.p(); ++b) {
      Weierstrass w{a, b};
      if (!is_nonsingular(ctx, w)) continue;
      reps.try_emplace(twist_key(ctx, w), w);
    }
  }
  std::vector<CurveClass> out;
  out.reserve(reps.size());
  for (const auto& [key, w] : reps) {
    CurveClass c;
    c.rep = w;
    c.key = key;
    c.trace = trace(ctx, w);
    auto r = roots(ctx, w);
    c.rational_roots = r.size();
    if (r.size() == 3) c.torsion = torsion_class_from_roots(ctx, r[0], r[1], r[2]);
    out.push_back(c);
  }
  return out;
}

}  // namespace ntlab::ecurve

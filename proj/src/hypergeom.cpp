#include "ntlab/hypergeom.hpp"

#include <cmath>

#include "ntlab/errors.hpp"

namespace ntlab::hypergeom {

using padic::GaussTable;
using padic::qp_agree;
using padic::qp_mul;
using padic::qp_to_integer;

namespace {

std::uint32_t half(const PadicCtx& ctx) { return (ctx.p() - 1) / 2; }

// sum_i coeff[i] * sum_k acc[k] zeta^(-i k), both vectors of length p-1.
u64 character_transform(const PadicCtx& ctx, const std::vector<u64>& coeff,
                        const std::vector<u64>& acc) {
  const std::int64_t n = ctx.p() - 1;
  std::vector<u64> terms(n, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    if (coeff[i] == 0) continue;
    u64 inner = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      if (acc[k] != 0) inner = ctx.add(inner, ctx.mul(acc[k], ctx.zeta(-i * k)));
    }
    terms[i] = ctx.mul(coeff[i], inner);
  }
  u64 s = 0;
  for (u64 t : terms) s = ctx.add(s, t);
  return s;
}

QpValue scaled_rational(const PadicCtx& ctx, u64 unit_part, unsigned pexp) {
  QpValue q = QpValue::from_residue(ctx, unit_part);
  q.val += pexp;
  return q;
}

std::string sign_tag(bool b) { return b ? "with" : "without"; }

}  // namespace

std::vector<u64> greene_jacobi_table(const PadicCtx& ctx) {
  const std::int64_t n = ctx.p() - 1;
  const std::uint32_t h = half(ctx);
  std::vector<u64> J(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    J[i] = padic::jacobi_sum(ctx, CharIdx{static_cast<std::uint32_t>((h + i) % n)},
                             CharIdx{static_cast<std::uint32_t>((n - i) % n)});
  }
  return J;
}

QpValue greene_2f1(const PadicCtx& ctx, const std::vector<u64>& J, std::uint32_t lambda) {
  lambda %= ctx.p();
  if (lambda == 0) return QpValue::from_residue(ctx, 0, -1);
  const std::uint32_t n = ctx.p() - 1;
  const std::int64_t d = ctx.field().dlog(lambda);
  u64 s = 0;
  for (std::uint32_t i = 0; i < n; ++i) s = ctx.add(s, ctx.mul(ctx.mul(J[i], J[i]), ctx.zeta(d * i)));
  return QpValue::from_residue(ctx, ctx.mul(s, ctx.inv(n)), -1);
}

QpValue greene_2f1(const PadicCtx& ctx, std::uint32_t lambda) {
  return greene_2f1(ctx, greene_jacobi_table(ctx), lambda);
}

std::int64_t greene_2f1_scaled(const PadicCtx& ctx, const std::vector<u64>& J,
                               std::uint32_t lambda) {
  return qp_to_integer(ctx, greene_2f1(ctx, J, lambda), 1, ctx.p());
}

namespace {

u64 cubes_signed_sum(const PadicCtx& ctx, const std::vector<u64>& J) {
  u64 s = 0;
  for (std::size_t i = 0; i < J.size(); ++i) {
    u64 c = ctx.mul(J[i], ctx.mul(J[i], J[i]));
    s = i % 2 == 0 ? ctx.add(s, c) : ctx.sub(s, c);
  }
  return s;
}

}  // namespace

QpValue greene_3f2_at_1(const PadicCtx& ctx) {
  const auto J = greene_jacobi_table(ctx);
  return QpValue::from_residue(ctx, ctx.mul(cubes_signed_sum(ctx, J), ctx.inv(ctx.p() - 1)), -2);
}

std::int64_t greene_3f2_scaled(const PadicCtx& ctx, const std::vector<u64>& J) {
  const QpValue v =
      QpValue::from_residue(ctx, ctx.mul(cubes_signed_sum(ctx, J), ctx.inv(ctx.p() - 1)), -2);
  const std::int64_t p = ctx.p();
  return qp_to_integer(ctx, v, 2, p * p);
}

std::int64_t b_scaled(const PadicCtx& ctx, const std::vector<u64>& J) {
  const FieldCtx& f = ctx.field();
  const std::uint32_t n = ctx.p() - 1;
  std::vector<u64> acc(n, 0);
  for (std::uint32_t t = 0; t < ctx.p(); ++t) {
    const std::uint32_t u = f.sub(1, f.mul(t, t));
    if (u == 0) continue;
    acc[f.dlog(u)] = ctx.add(acc[f.dlog(u)], ctx.from_int(f.phi(f.add(1, t))));
  }
  std::vector<u64> coeff(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    u64 c = ctx.mul(J[i], ctx.mul(J[i], J[i]));
    coeff[i] = i % 2 == 0 ? c : ctx.neg(c);
  }
  const u64 r = character_transform(ctx, coeff, acc);
  const std::int64_t p = ctx.p();
  const double bound = double(p) * double(p - 1) * std::pow(double(p), 1.5);
  return qp_to_integer(ctx, QpValue::from_residue(ctx, r), 0, static_cast<std::int64_t>(bound) + 1);
}

namespace {

// N(u) for every u in F_p (index u).
std::vector<std::int64_t> triple_counts(const FieldCtx& f) {
  const std::uint32_t p = f.p();
  std::vector<std::int64_t> h1(p, 0), h2(p, 0), N(p, 0);
  for (std::uint32_t y = 2; y < p; ++y) h1[f.mul(y, f.inv(f.sub(1, y)))] += f.phi(y);
  for (std::uint32_t r1 = 1; r1 < p; ++r1) {
    if (h1[r1] == 0) continue;
    for (std::uint32_t r2 = 1; r2 < p; ++r2) h2[f.mul(r1, r2)] += h1[r1] * h1[r2];
  }
  for (std::uint32_t u = 1; u < p; ++u) {
    const std::uint32_t target = f.neg(u);
    std::int64_t s = 0;
    for (std::uint32_t r3 = 1; r3 < p; ++r3) {
      if (h1[r3] != 0) s += h1[r3] * h2[f.mul(target, f.inv(r3))];
    }
    N[u] = s;
  }
  return N;
}

}  // namespace

std::int64_t greene_3f2_scaled_direct(const FieldCtx& f) { return triple_counts(f)[1]; }

std::int64_t b_scaled_direct(const FieldCtx& f) {
  const auto N = triple_counts(f);
  std::int64_t s = 0;
  for (std::uint32_t t = 0; t < f.p(); ++t) {
    const std::uint32_t u = f.sub(1, f.mul(t, t));
    if (u != 0) s += f.phi(f.add(1, t)) * N[u];
  }
  return static_cast<std::int64_t>(f.p() - 1) * s;
}

GSpec spec_3g3() {
  return {{Rational(5, 6), Rational(1, 12), Rational(7, 12)},
          {Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
}

GSpec spec_9g9() {
  GSpec s;
  for (int k : {1, 2, 3, 5, 6, 7, 9, 10, 11}) s.a.emplace_back(k, 12);
  for (int i = 0; i < 3; ++i) s.b.emplace_back(1, 3);
  for (int i = 0; i < 3; ++i) s.b.emplace_back(2, 3);
  for (int i = 0; i < 3; ++i) s.b.emplace_back(0);
  return s;
}

void validate(const PadicCtx& ctx, const GSpec& spec) {
  if (spec.a.empty() || spec.a.size() != spec.b.size()) {
    throw DomainError("nGn needs two parameter lists of equal positive length");
  }
  for (const auto* list : {&spec.a, &spec.b}) {
    for (const Rational& r : *list) {
      if (r.den() % ctx.p() == 0) {
        throw DomainError("parameter " + r.to_string() + " is not p-integral");
      }
    }
  }
}

NgnCoefficients::NgnCoefficients(const PadicCtx& ctx, const GSpec& spec) : ctx_(&ctx) {
  validate(ctx, spec);
  const std::int64_t n = ctx.p() - 1;
  const std::size_t len = spec.a.size();
  std::vector<u64> unit(n);
  val_.assign(n, 0);
  std::vector<u64> den(len);
  for (std::size_t k = 0; k < len; ++k) {
    den[k] = ctx.inv(ctx.mul(ctx.gamma(spec.a[k].frac()), ctx.gamma((-spec.b[k]).frac())));
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < n; ++a) {
    const Rational x(a, n);
    int v = 0;
    u64 u = 1;
    for (std::size_t k = 0; k < len; ++k) {
      const Rational ak = spec.a[k].frac();
      const Rational bk = (-spec.b[k]).frac();
      v -= static_cast<int>((ak - x).floor());
      v -= static_cast<int>((bk + x).floor());
      u = ctx.mul(u, ctx.mul(ctx.gamma((ak - x).frac()), ctx.gamma((bk + x).frac())));
      u = ctx.mul(u, den[k]);
    }
    const bool negative = ((v % 2) != 0) ^ (((a * static_cast<std::int64_t>(len)) % 2) != 0);
    unit[a] = negative ? ctx.neg(u) : u;
    val_[a] = v;
  }
  int vmin = 0;
  for (int v : val_) vmin = std::min(vmin, v);
  shift_ = static_cast<unsigned>(-vmin);
  scaled_.assign(n, 0);
  for (std::int64_t a = 0; a < n; ++a) {
    const int e = val_[a] + static_cast<int>(shift_);
    if (e < static_cast<int>(ctx.K())) scaled_[a] = ctx.mul(unit[a], ctx.power(e));
  }
}

QpValue NgnCoefficients::evaluate(std::uint32_t t) const {
  t %= ctx_->p();
  if (t == 0) throw DomainError("nGn is evaluated at t != 0 only");
  const std::int64_t d = ctx_->field().dlog(t);
  u64 s = 0;
  for (std::size_t a = 0; a < scaled_.size(); ++a) {
    s = ctx_->add(s, ctx_->mul(scaled_[a], ctx_->zeta(-static_cast<std::int64_t>(a) * d)));
  }
  s = ctx_->mul(ctx_->neg(s), ctx_->inv(ctx_->p() - 1));
  return QpValue::from_residue(*ctx_, s, -static_cast<std::int64_t>(shift_));
}

QpValue NgnCoefficients::weighted_sum(const std::vector<u64>& acc) const {
  u64 s = character_transform(*ctx_, scaled_, acc);
  s = ctx_->mul(ctx_->neg(s), ctx_->inv(ctx_->p() - 1));
  return QpValue::from_residue(*ctx_, s, -static_cast<std::int64_t>(shift_));
}

QpValue ngn_evaluate(const PadicCtx& ctx, const GSpec& spec, std::uint32_t t) {
  return NgnCoefficients(ctx, spec).evaluate(t);
}

namespace {

// Gauss-sum indices of g(phi omega^a), g(omega-bar^a), g(phi omega^2a).
struct TermIndex {
  std::uint32_t j1, j2, j3;
  std::uint64_t exponent() const { return std::uint64_t{j1} + 3ull * j2 + j3; }
};

TermIndex term_index(const PadicCtx& ctx, std::int64_t a) {
  const std::int64_t h = half(ctx);
  return {GaussTable::index_of(ctx, h + a), static_cast<std::uint32_t>(a),
          GaussTable::index_of(ctx, h + 2 * a)};
}

void require_degree0(const PadicCtx& ctx, const TermIndex& t) {
  if (t.exponent() % (ctx.p() - 1) != 0) {
    throw PadicPrecisionError("Gauss-sum product has pi-degree not divisible by p-1");
  }
}

std::vector<u64> lambda_weights(const PadicCtx& ctx) {
  const FieldCtx& f = ctx.field();
  std::vector<u64> acc(ctx.p() - 1, 0);
  for (std::uint32_t l = 2; l < ctx.p(); ++l) {
    const std::uint32_t w = f.mul(f.mul(4 % f.p(), f.sub(1, l)), f.inv(l));
    acc[f.dlog(w)] = ctx.add(acc[f.dlog(w)], ctx.from_int(f.phi(l)));
  }
  return acc;
}

}  // namespace

u64 i_residue(const PadicCtx& ctx) {
  const std::int64_t n = ctx.p() - 1;
  const GaussTable G(ctx);
  const u64 minus_p = ctx.neg(ctx.p());
  std::vector<u64> M(n);
  for (std::int64_t a = 0; a < n; ++a) {
    const TermIndex t = term_index(ctx, a);
    require_degree0(ctx, t);
    u64 m = ctx.mul(G.unit[t.j1], G.unit[t.j3]);
    m = ctx.mul(m, ctx.mul(G.unit[t.j2], ctx.mul(G.unit[t.j2], G.unit[t.j2])));
    m = ctx.mul(m, ctx.pow(minus_p, t.exponent() / n));
    M[a] = m;
  }
  return character_transform(ctx, M, lambda_weights(ctx));
}

u64 i_residue_serial(const PadicCtx& ctx) {
  const std::int64_t n = ctx.p() - 1;
  const FieldCtx& f = ctx.field();
  std::vector<u64> M(n);
  for (std::int64_t a = 0; a < n; ++a) {
    const TermIndex t = term_index(ctx, a);
    const padic::PiRingElem g2 = padic::gauss_sum_gk(ctx, t.j2);
    const padic::PiRingElem prod =
        padic::gauss_sum_gk(ctx, t.j1) * g2 * g2 * g2 * padic::gauss_sum_gk(ctx, t.j3);
    M[a] = prod.project0();
  }
  u64 s = 0;
  for (std::uint32_t l = 2; l < ctx.p(); ++l) {
    const std::int64_t d = f.dlog(f.mul(f.mul(4 % f.p(), f.sub(1, l)), f.inv(l)));
    u64 inner = 0;
    for (std::int64_t a = 0; a < n; ++a) inner = ctx.add(inner, ctx.mul(M[a], ctx.zeta(-a * d)));
    s = f.phi(l) > 0 ? ctx.add(s, inner) : ctx.sub(s, inner);
  }
  return s;
}

std::int64_t i_bound(std::uint32_t p) {
  const double P = p;
  return static_cast<std::int64_t>(std::ceil((P - 1) * (P - 2) * std::pow(P, 2.5)));
}

std::int64_t i_sum(const PadicCtx& ctx) {
  const std::int64_t bound = i_bound(ctx.p());
  if (static_cast<u64>(bound) >= ctx.modulus() / 2) {
    throw PadicPrecisionError("raise K: |I| bound " + std::to_string(bound) + " exceeds p^K/2");
  }
  return ctx.lift(i_residue(ctx));
}

const char* to_string(Prop64Twist t) {
  return t == Prop64Twist::kSquareOfComplement ? "lambda(1-lambda)^2" : "lambda(1-lambda^2)";
}

QpValue g3_twisted_sum(const PadicCtx& ctx, Prop64Twist twist) {
  if (ctx.p() % 3 != 1) throw DomainError("the 3G3 family needs p = 1 mod 3");
  const FieldCtx& f = ctx.field();
  const std::int64_t sixth = (ctx.p() - 1) / 6;
  std::vector<u64> acc(ctx.p() - 1, 0);
  for (std::uint32_t l = 2; l < ctx.p(); ++l) {
    const std::uint32_t c = f.sub(1, l);
    const std::uint32_t x = twist == Prop64Twist::kSquareOfComplement
                                ? f.mul(l, f.mul(c, c))
                                : f.mul(l, f.sub(1, f.mul(l, l)));
    if (x == 0) continue;
    const std::uint32_t t = f.mul(f.sub(l, 1), f.inv(l));
    acc[f.dlog(t)] = ctx.add(acc[f.dlog(t)], ctx.zeta(sixth * f.dlog(x)));
  }
  return NgnCoefficients(ctx, spec_3g3()).weighted_sum(acc);
}

QpValue g9_twisted_sum(const PadicCtx& ctx) {
  if (ctx.p() % 3 != 2) throw DomainError("the 9G9 family needs p = 2 mod 3");
  const FieldCtx& f = ctx.field();
  std::vector<u64> acc(ctx.p() - 1, 0);
  for (std::uint32_t l = 1; l < ctx.p(); ++l) {
    const int s = f.phi(f.sub(unique_cube_root(f, l), 1));
    if (s == 0) continue;
    acc[f.dlog(l)] = ctx.add(acc[f.dlog(l)], ctx.from_int(s));
  }
  return NgnCoefficients(ctx, spec_9g9()).weighted_sum(acc);
}

namespace {

QpValue g3_prefactor(const PadicCtx& ctx, std::int64_t k_sixth) {
  const FieldCtx& f = ctx.field();
  u64 u = ctx.mul(ctx.p() - 1, ctx.from_int(f.phi(2)));
  u = ctx.mul(u, ctx.zeta(k_sixth));
  return scaled_rational(ctx, u, 3);
}

}  // namespace

VerificationRecord prop64_check(const PadicCtx& ctx, Prop64Twist twist) {
  const FieldCtx& f = ctx.field();
  const std::int64_t I = i_sum(ctx);
  const QpValue S = g3_twisted_sum(ctx, twist);
  const std::int64_t sixth = (ctx.p() - 1) / 6;
  const QpValue rhs = qp_mul(ctx, g3_prefactor(ctx, sixth * f.dlog(f.neg(2))), S);
  const QpValue lhs = QpValue::from_rational(ctx, Rational(I));
  VerificationRecord r;
  r.p = ctx.p();
  r.name = "g3-twisted-identity";
  r.lhs = std::to_string(I);
  r.rhs = rhs.to_string(ctx);
  r.match = qp_agree(ctx, lhs, rhs);
  r.note = std::string("twist=") + to_string(twist);
  return r;
}

u64 g3_gamma_constant(const PadicCtx& ctx) {
  auto G = [&](std::int64_t n, std::int64_t d) { return ctx.gamma(Rational(n, d)); };
  u64 c = ctx.mul(ctx.pow(G(2, 3), 3), G(5, 6));
  c = ctx.mul(c, ctx.mul(G(1, 12), G(7, 12)));
  return ctx.mul(c, ctx.inv(G(1, 2)));
}

VerificationRecord prop64_gamma_check(const PadicCtx& ctx, Prop64Twist twist) {
  const FieldCtx& f = ctx.field();
  const std::int64_t I = i_sum(ctx);
  const QpValue S = g3_twisted_sum(ctx, twist);
  u64 u = ctx.mul(ctx.p() - 1, ctx.from_int(-f.phi(2)));
  u = ctx.mul(u, g3_gamma_constant(ctx));
  const QpValue rhs = qp_mul(ctx, scaled_rational(ctx, u, 3), S);
  VerificationRecord r;
  r.p = ctx.p();
  r.name = "g3-twisted-identity-gamma";
  r.lhs = std::to_string(I);
  r.rhs = rhs.to_string(ctx);
  r.match = qp_agree(ctx, QpValue::from_rational(ctx, Rational(I)), rhs);
  r.note = std::string("twist=") + to_string(twist);
  return r;
}

std::optional<unsigned> prop64_root_of_unity(const PadicCtx& ctx, Prop64Twist twist) {
  const std::int64_t I = i_sum(ctx);
  const QpValue S = g3_twisted_sum(ctx, twist);
  const QpValue lhs = QpValue::from_rational(ctx, Rational(I));
  const std::int64_t sixth = (ctx.p() - 1) / 6;
  std::optional<unsigned> found;
  for (unsigned k = 0; k < 6; ++k) {
    if (qp_agree(ctx, lhs, qp_mul(ctx, g3_prefactor(ctx, sixth * k), S))) {
      if (found) return std::nullopt;
      found = k;
    }
  }
  return found;
}

VerificationRecord prop65_check(const PadicCtx& ctx, bool with_phi_minus_one) {
  const FieldCtx& f = ctx.field();
  const std::int64_t I = i_sum(ctx);
  const QpValue S = g9_twisted_sum(ctx);
  u64 u = ctx.p() - 1;
  if (with_phi_minus_one) u = ctx.mul(u, ctx.from_int(f.phi(f.neg(1))));
  const QpValue rhs = qp_mul(ctx, scaled_rational(ctx, u, 1), S);
  VerificationRecord r;
  r.p = ctx.p();
  r.name = "g9-twisted-identity";
  r.lhs = std::to_string(I);
  r.rhs = rhs.to_string(ctx);
  r.match = qp_agree(ctx, QpValue::from_rational(ctx, Rational(I)), rhs);
  r.note = sign_tag(with_phi_minus_one) + " phi(-1)";
  return r;
}

namespace {

struct BackboneParts {
  std::int64_t x_half = 0;   // p 2F1(1/2)
  std::int64_t x_minus = 0;  // p 2F1(-1)
  std::int64_t f3 = 0;       // p^2 3F2(1)
  std::int64_t pb = 0;       // p^3 B
  std::int64_t I = 0;
  std::int64_t a_split = 0;  // p^2 A assembled from 2F1 values
};

BackboneParts backbone_parts(const PadicCtx& ctx) {
  const FieldCtx& f = ctx.field();
  const auto J = greene_jacobi_table(ctx);
  BackboneParts b;
  const std::uint32_t inv2 = f.inv(2);
  b.x_half = greene_2f1_scaled(ctx, J, inv2);
  b.x_minus = greene_2f1_scaled(ctx, J, f.neg(1));
  for (std::uint32_t t = 2; t + 1 < ctx.p(); ++t) {
    const std::int64_t x = greene_2f1_scaled(ctx, J, f.mul(f.sub(1, t), inv2));
    b.a_split += f.phi(f.sub(1, t)) * x * x;
  }
  b.a_split *= f.phi(2);
  b.f3 = greene_3f2_scaled(ctx, J);
  b.pb = b_scaled(ctx, J);
  b.I = i_sum(ctx);
  return b;
}

Rational main_terms(const FieldCtx& f, const BackboneParts& b) {
  const std::int64_t p = f.p();
  return Rational(f.phi(2) * b.x_half * b.x_half - f.phi(p - 1) * b.x_minus * b.x_minus -
                  f.phi(p - 2) * b.f3) +
         Rational(b.I, p * (p - 1));
}

}  // namespace

std::vector<VerificationRecord> prop66_backbone(const PadicCtx& ctx, const std::vector<int>& traces,
                                                std::int64_t s4) {
  const FieldCtx& f = ctx.field();
  const std::int64_t p = ctx.p();
  const BackboneParts b = backbone_parts(ctx);
  const int phi2 = f.phi(2), phim1 = f.phi(p - 1), phim2 = f.phi(p - 2);
  std::vector<VerificationRecord> out;

  std::int64_t lhs6 = 0;
  for (std::uint32_t l = 2; l + 1 < ctx.p(); ++l) {
    lhs6 += f.phi(l) * std::int64_t{traces[l]} * traces[l];
  }
  const std::int64_t rhs6 =
      phi2 * b.x_half * b.x_half - phim1 * b.x_minus * b.x_minus + b.a_split;
  out.push_back(exact_record(ctx.p(), "trace-square-split", std::to_string(lhs6),
                             std::to_string(rhs6)));

  std::int64_t p2a = 0;
  const std::uint32_t inv2 = f.inv(2);
  for (std::uint32_t t = 2; t + 1 < ctx.p(); ++t) {
    const std::int64_t a = traces[f.mul(f.sub(1, t), inv2)];
    p2a += f.phi(f.sub(1, t)) * a * a;
  }
  p2a *= phi2;
  const Rational rhs7 = Rational(-p - phi2 * p - phim2 * b.f3) + Rational(phim2 * b.pb, p - 1);
  out.push_back(exact_record(ctx.p(), "a-term-split", std::to_string(p2a), rhs7.to_string()));

  out.push_back(exact_record(ctx.p(), "b-term-split", std::to_string(p * b.pb),
                             std::to_string(phim2 * (b.I - p * (p - 1)))));

  const Rational slack = Rational(s4, p) - main_terms(f, b);
  VerificationRecord r = exact_record(ctx.p(), "trace-square-slack", slack.to_string(),
                                      std::to_string(prop66_slack_closed_form(f, traces)));
  r.ratio = std::abs(slack.to_double()) / double(p * p);
  out.push_back(r);
  return out;
}

Rational prop66_slack(const PadicCtx& ctx, std::int64_t s4) {
  return Rational(s4, ctx.p()) - main_terms(ctx.field(), backbone_parts(ctx));
}

std::int64_t prop66_slack_closed_form(const FieldCtx& f, const std::vector<int>& traces) {
  const std::int64_t p = f.p();
  const std::int64_t am1 = traces[p - 1];
  return -3 * p - f.phi(2) * p + f.phi(p - 1) * am1 * am1;
}

TrendPoint trend_point(std::uint32_t p, unsigned K) {
  const PadicCtx ctx(p, K);
  TrendPoint t;
  t.p = p;
  t.I = i_sum(ctx);
  t.abs_t = std::abs(double(t.I)) / (double(p) * p * p * (p - 1));
  return t;
}

}  // namespace ntlab::hypergeom

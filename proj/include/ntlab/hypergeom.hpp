#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ntlab/padic.hpp"
#include "ntlab/rational.hpp"
#include "ntlab/record.hpp"

namespace ntlab::hypergeom {

using padic::PadicCtx;
using padic::QpValue;

// J_i = J(phi omega^i, omega^-i) for i in [0, p-1), the Jacobi sums behind
// the binomial coefficients (phi chi choose chi) with chi = omega^i.
std::vector<u64> greene_jacobi_table(const PadicCtx& ctx);

// Greene's 2F1(phi, phi; eps | lambda) as a p-adic number.
QpValue greene_2f1(const PadicCtx& ctx, std::uint32_t lambda);
QpValue greene_2f1(const PadicCtx& ctx, const std::vector<u64>& J, std::uint32_t lambda);
// p * 2F1(lambda) as an integer.
std::int64_t greene_2f1_scaled(const PadicCtx& ctx, const std::vector<u64>& J,
                               std::uint32_t lambda);

// Greene's 3F2(phi, phi, phi; eps, eps | 1) and p^2 times it as an integer.
QpValue greene_3f2_at_1(const PadicCtx& ctx);
std::int64_t greene_3f2_scaled(const PadicCtx& ctx, const std::vector<u64>& J);

// p^3 B with B = sum_t phi(1+t) sum_chi (phi chi choose chi)^3 chi-bar(1 - t^2).
std::int64_t b_scaled(const PadicCtx& ctx, const std::vector<u64>& J);

// Character-sum oracles without p-adic numbers: with r(y) = y/(1-y),
// N(u) = sum phi(y1 y2 y3) over y_i not in {0,1} with r(y1) r(y2) r(y3) = -u.
// Then p^2 3F2(1) = N(1) and p^3 B = (p-1) sum_{t != +-1} phi(1+t) N(1-t^2).
std::int64_t greene_3f2_scaled_direct(const FieldCtx& f);
std::int64_t b_scaled_direct(const FieldCtx& f);

// McCarthy's nGn with parameters a_k, b_k in Q n Z_p.
struct GSpec {
  std::vector<Rational> a;
  std::vector<Rational> b;
};
GSpec spec_3g3();  // a = 5/6, 1/12, 7/12; b = 1/3, 1/3, 1/3
GSpec spec_9g9();  // a = k/12 for k in {1,2,3,5,6,7,9,10,11}; b = 1/3 x3, 2/3 x3, 0 x3
void validate(const PadicCtx& ctx, const GSpec& spec);

// The t-independent part of each a-term: (-1)^(an) times the (-p)-powers and
// Gamma_p quotients, stored as p^shift * c(a) so that every entry is integral.
class NgnCoefficients {
 public:
  NgnCoefficients(const PadicCtx& ctx, const GSpec& spec);
  unsigned shift() const { return shift_; }
  const std::vector<u64>& scaled() const { return scaled_; }
  const std::vector<int>& valuations() const { return val_; }

  QpValue evaluate(std::uint32_t t) const;
  // sum_t w(t) nGn(t), with the weights grouped by dlog t: acc[k] = sum_{dlog t = k} w(t).
  QpValue weighted_sum(const std::vector<u64>& acc) const;

 private:
  const PadicCtx* ctx_;
  unsigned shift_ = 0;
  std::vector<u64> scaled_;
  std::vector<int> val_;
};

QpValue ngn_evaluate(const PadicCtx& ctx, const GSpec& spec, std::uint32_t t);

// I = sum_lambda phi(lambda) sum_a g(phi omega^a) g(omega-bar^a)^3 g(phi omega^2a)
//     omega-bar^a(4(1 - lambda)/lambda),
// each a-term reduced to unit * (-p)^e by Gross-Koblitz. The residue is exact
// mod p^K; the integer needs p^K > 2 (p-1)(p-2) p^(5/2).
u64 i_residue(const PadicCtx& ctx);
u64 i_residue_serial(const PadicCtx& ctx);
std::int64_t i_bound(std::uint32_t p);
std::int64_t i_sum(const PadicCtx& ctx);

enum class Prop64Twist {
  kSquareOfComplement,  // psi_6(lambda (1 - lambda)^2)
  kComplementOfSquare,  // psi_6(lambda (1 - lambda^2))
};
const char* to_string(Prop64Twist t);

// sum_lambda psi_6(twist(lambda)) 3G3(lambda), p = 1 mod 3.
QpValue g3_twisted_sum(const PadicCtx& ctx, Prop64Twist twist);
// sum_{lambda != 0} phi(lambda^(1/3) - 1) 9G9(lambda), p = 2 mod 3.
QpValue g9_twisted_sum(const PadicCtx& ctx);

// I against p^3 (p-1) psi_6(-2) phi(2) times the 3G3 sum.
VerificationRecord prop64_check(const PadicCtx& ctx, Prop64Twist twist);
// C = Gamma_p(2/3)^3 Gamma_p(5/6) Gamma_p(1/12) Gamma_p(7/12) / Gamma_p(1/2), the
// constant left over once Gross-Koblitz and the duplication formula are applied.
u64 g3_gamma_constant(const PadicCtx& ctx);
// I against -phi(2) C p^3 (p-1) times the 3G3 sum.
VerificationRecord prop64_gamma_check(const PadicCtx& ctx, Prop64Twist twist);
// k in [0, 6) with I = p^3 (p-1) phi(2) zeta_6^k sum, zeta_6 = omega(g)^((p-1)/6), if any.
std::optional<unsigned> prop64_root_of_unity(const PadicCtx& ctx, Prop64Twist twist);
// I against p (p-1) [phi(-1)] times the 9G9 sum.
VerificationRecord prop65_check(const PadicCtx& ctx, bool with_phi_minus_one);

// The exact chain linking sum phi(lambda) a_p(lambda)^2 to 2F1, 3F2, B and I.
// traces: a_p(lambda) indexed by lambda; s4: S(4, phi)_p.
std::vector<VerificationRecord> prop66_backbone(const PadicCtx& ctx, const std::vector<int>& traces,
                                                std::int64_t s4);
// What is left of S(4, phi)_p / p after the main terms, and its closed form
// -3p - phi(2) p + phi(-1) a_p(-1)^2.
Rational prop66_slack(const PadicCtx& ctx, std::int64_t s4);
std::int64_t prop66_slack_closed_form(const FieldCtx& f, const std::vector<int>& traces);

// |T(p)| from the exact I: |I| / (p^3 (p-1)) for both families.
struct TrendPoint {
  std::uint32_t p = 0;
  std::int64_t I = 0;
  double abs_t = 0.0;
};
TrendPoint trend_point(std::uint32_t p, unsigned K);

}  // namespace ntlab::hypergeom

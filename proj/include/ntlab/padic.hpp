#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ntlab/arith.hpp"
#include "ntlab/ffield.hpp"
#include "ntlab/rational.hpp"
#include "ntlab/record.hpp"

namespace ntlab::padic {

// Fixed-precision arithmetic in Z/p^K together with the Teichmueller table
// and the data needed for fast p-adic gamma values.
class PadicCtx {
 public:
  PadicCtx(std::uint32_t p, unsigned K);

  const FieldCtx& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  unsigned K() const { return K_; }
  u64 modulus() const { return mod_; }
  // p^e as an integer, e <= K.
  u64 power(unsigned e) const { return pw_[e]; }

  // omega(x), the (p-1)-th root of unity congruent to x mod p; x != 0 mod p.
  u64 teich(std::uint32_t x) const;
  // zeta^k with zeta = omega(g), g the field's generator; so omega^a(x) = zeta^(a dlog x).
  u64 zeta(std::int64_t k) const;
  u64 omega_pow(std::uint32_t x, std::int64_t a) const;

  u64 add(u64 a, u64 b) const { return addmod(a, b, mod_); }
  u64 sub(u64 a, u64 b) const { return submod(a, b, mod_); }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, mod_); }
  u64 neg(u64 a) const { return a == 0 ? 0 : mod_ - a; }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, mod_); }
  u64 from_int(std::int64_t x) const { return to_residue(x, mod_); }
  std::int64_t lift(u64 r) const { return symmetric(r, mod_); }
  // Inverse of a p-adic unit; DomainError otherwise.
  u64 inv(u64 a) const;
  // p-adic valuation of a residue (K for 0).
  unsigned valuation(u64 a) const;

  // Gamma_p(N) for an integer 0 <= N < p^K via precomputed block products.
  u64 gamma_int(u64 N) const;
  // Gamma_p(N) by the defining product; O(N).
  u64 gamma_int_naive(u64 N) const;
  // Gamma_p(x) for x in Z_p n Q, through the integer N = x mod p^K.
  u64 gamma(const Rational& x) const;
  u64 gamma_naive(const Rational& x) const;
  // x mod p^K for a rational with denominator prime to p.
  u64 residue(const Rational& x) const;

 private:
  FieldCtx field_;
  unsigned K_;
  u64 mod_;
  std::vector<u64> pw_;
  std::vector<u64> teich_;
  std::vector<u64> zeta_;
  // blocks_[l](t) = prod_{0 < i < p^l, p ∤ i} (p t + i), truncated to degree < K.
  std::vector<std::vector<u64>> blocks_;
};

// Teichmueller lift by iterating t -> t^p mod p^K to its fixed point.
u64 teichmuller(const PadicCtx& ctx, std::uint32_t x);

// Element of Z[pi]/(pi^(p-1) + p) with coefficients mod p^K.
class PiRingElem {
 public:
  explicit PiRingElem(const PadicCtx& ctx);
  // c * pi^deg for any deg >= 0, reduced with pi^(p-1) = -p.
  static PiRingElem monomial(const PadicCtx& ctx, u64 c, std::uint64_t deg);

  const std::vector<u64>& coeffs() const { return c_; }
  bool is_degree0() const;
  // Degree-0 coefficient; PadicPrecisionError if any other coefficient is nonzero.
  u64 project0() const;

  PiRingElem operator+(const PiRingElem& o) const;
  PiRingElem operator-(const PiRingElem& o) const;
  PiRingElem operator*(const PiRingElem& o) const;
  PiRingElem scaled(u64 s) const;
  friend bool operator==(const PiRingElem& a, const PiRingElem& b) { return a.c_ == b.c_; }

 private:
  const PadicCtx* ctx_;
  std::vector<u64> c_;
};

// g(omega-bar^j) = -pi^j Gamma_p(j/(p-1)) for 0 <= j <= p-2. At j = 0 this is
// -1, which is also the direct value of the Gauss sum of the trivial character.
PiRingElem gauss_sum_gk(const PadicCtx& ctx, std::uint32_t j);
// g(omega^a) = g(omega-bar^(-a)).
PiRingElem gauss_sum(const PadicCtx& ctx, CharIdx chi);

// Gauss sums as unit * pi^deg, one per j, for products that are tracked by exponent.
struct GaussTable {
  std::vector<u64> unit;  // -Gamma_p(j/(p-1))
  explicit GaussTable(const PadicCtx& ctx);
  // Index j with g(omega^a) = g(omega-bar^j).
  static std::uint32_t index_of(const PadicCtx& ctx, std::int64_t a);
};

// J(omega^a, omega^b) = sum_y omega^a(y) omega^b(1 - y), chi(0) = 0 throughout.
u64 jacobi_sum(const PadicCtx& ctx, CharIdx a, CharIdx b);

// value = p^val * unit, known modulo p^(val + prec). prec = 0 means the value
// is zero to absolute precision p^val.
struct QpValue {
  std::int64_t val = 0;
  u64 unit = 0;
  unsigned prec = 0;

  static QpValue from_residue(const PadicCtx& ctx, u64 r, std::int64_t shift = 0);
  static QpValue from_rational(const PadicCtx& ctx, const Rational& x);
  bool is_zero() const { return prec == 0; }
  std::int64_t abs_precision() const { return val + prec; }
  std::string to_string(const PadicCtx& ctx) const;
};

QpValue qp_add(const PadicCtx& ctx, const QpValue& a, const QpValue& b);
QpValue qp_neg(const PadicCtx& ctx, const QpValue& a);
QpValue qp_sub(const PadicCtx& ctx, const QpValue& a, const QpValue& b);
QpValue qp_mul(const PadicCtx& ctx, const QpValue& a, const QpValue& b);
// Equal up to the smaller of the two absolute precisions.
bool qp_agree(const PadicCtx& ctx, const QpValue& a, const QpValue& b);
// p^e * value as an integer of absolute value <= bound, by symmetric lifting.
// PadicPrecisionError("raise K") when the known digits cannot pin it down.
std::int64_t qp_to_integer(const PadicCtx& ctx, const QpValue& a, std::int64_t e,
                           std::int64_t bound);

// J(omega^a, omega^b) g(omega^(a+b)) against g(omega^a) g(omega^b), the Gauss
// sum quotient taken with the pi-power bookkeeping; a, b, a+b nontrivial.
VerificationRecord gk_consistency_check(const PadicCtx& ctx, CharIdx a, CharIdx b);

// prod_{i<m} g(psi chi^i) = g(psi^m) psi^(-m)(m) prod_{0<i<m} g(chi^i), chi of order m.
VerificationRecord hasse_davenport_check(const PadicCtx& ctx, unsigned m, CharIdx psi);

struct GammaProductResult {
  bool multiplication = false;  // Gauss multiplication at x = j/(p-1), m = t
  bool shift_plus = false;      // product over <h/t + j/(p-1)>
  bool shift_minus = false;     // product over <h/t - j/(p-1)>
  bool all() const { return multiplication && shift_plus && shift_minus; }
};
GammaProductResult gamma_product_formulas(const PadicCtx& ctx, unsigned t, std::uint32_t j);
VerificationRecord gamma_product_checks(const PadicCtx& ctx, unsigned t, std::uint32_t j);

// Gamma_p(x) Gamma_p(1-x) = (-1)^{x0}, x0 in [1, p] congruent to x mod p.
bool gamma_reflection_holds(const PadicCtx& ctx, const Rational& x);

}  // namespace ntlab::padic

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ntlab/arith.hpp"

namespace ntlab {

// Multiplicative character omega^a, indexed by its exponent a mod p-1 with
// respect to the field's fixed generator. chi(0) = 0 for every index,
// including the trivial one.
struct CharIdx {
  std::uint32_t a = 0;
  friend bool operator==(CharIdx, CharIdx) = default;
};

// Prime field F_p with its smallest primitive root, discrete-log table,
// inverse table and quadratic-residue table. Immutable after construction.
class FieldCtx {
 public:
  explicit FieldCtx(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t order() const { return p_ - 1; }
  std::uint32_t generator() const { return g_; }

  // Index k with g^k = x, for x in F_p^x.
  std::uint32_t dlog(std::uint32_t x) const { return dlog_[x]; }
  // g^k for k in [0, p-1).
  std::uint32_t gpow(std::uint32_t k) const { return exp_[k % (p_ - 1)]; }
  std::uint32_t inv(std::uint32_t x) const { return inv_[x]; }
  // Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0.
  int phi(std::uint32_t x) const { return qr_[x]; }
  int phi_signed(std::int64_t x) const { return qr_[reduce(x)]; }

  std::uint32_t reduce(std::int64_t x) const {
    return static_cast<std::uint32_t>(to_residue(x, p_));
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    return static_cast<std::uint32_t>(powmod(a, e, p_));
  }

  CharIdx trivial() const { return CharIdx{0}; }
  CharIdx quadratic() const { return CharIdx{(p_ - 1) / 2}; }

 private:
  std::uint32_t p_;
  std::uint32_t g_;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::int8_t> qr_;
};

// Throws DomainError("not an odd prime") for even or composite input.
FieldCtx make_field_ctx(std::uint32_t p);

// omega^a(x) as the exponent k with omega^a(x) = zeta_{p-1}^k; nullopt encodes chi(0) = 0.
std::optional<std::uint32_t> char_eval(const FieldCtx& ctx, CharIdx idx, std::uint32_t x);

int legendre_phi(const FieldCtx& ctx, std::uint32_t x);

// Unique x with x^3 = lambda; requires p = 2 mod 3.
std::uint32_t unique_cube_root(const FieldCtx& ctx, std::uint32_t lambda);

}  // namespace ntlab

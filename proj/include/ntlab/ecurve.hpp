#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ntlab/ffield.hpp"

namespace ntlab::ecurve {

// a_p(lambda) = -sum_x phi(x(x-1)(x-lambda)) for y^2 = x(x-1)(x-lambda).
// Throws DomainError("singular curve") for lambda in {0, 1}.
int ap_legendre(const FieldCtx& ctx, std::uint32_t lambda);

// a_p(lambda) for every lambda in F_p (entries 0 and 1 are left at 0).
std::vector<int> trace_table_serial(const FieldCtx& ctx);
std::vector<int> trace_table_omp(const FieldCtx& ctx);
inline std::vector<int> trace_table(const FieldCtx& ctx) { return trace_table_omp(ctx); }

std::uint32_t j_invariant(const FieldCtx& ctx, std::uint32_t lambda);

// {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}
std::array<std::uint32_t, 6> lambda_orbit(const FieldCtx& ctx, std::uint32_t lambda);

// a(l) = phi(l) a(1/l), a(l) = phi(-1) a(1-l), a(l) = phi(1-l) a(l/(l-1)).
std::array<bool, 3> twist_relation_check(const FieldCtx& ctx, std::uint32_t lambda);

enum class TorsionClass { k2x2 = 0, k2x4 = 1, k4x4 = 2 };
std::string to_string(TorsionClass c);

// Largest of {2x2, 2x4, 4x4} contained in E(F_p) for y^2 = (x-e1)(x-e2)(x-e3).
// (e,0) is halvable iff both differences to the other roots are squares.
TorsionClass torsion_class_from_roots(const FieldCtx& ctx, std::uint32_t e1, std::uint32_t e2,
                                      std::uint32_t e3);
TorsionClass torsion_class(const FieldCtx& ctx, std::uint32_t lambda);

// y^2 = x^3 + A x + B
struct Weierstrass {
  std::uint32_t A = 0;
  std::uint32_t B = 0;
  friend bool operator==(const Weierstrass&, const Weierstrass&) = default;
};

Weierstrass legendre_to_weierstrass(const FieldCtx& ctx, std::uint32_t lambda);
bool is_nonsingular(const FieldCtx& ctx, Weierstrass w);
std::uint32_t j_invariant(const FieldCtx& ctx, Weierstrass w);
int trace(const FieldCtx& ctx, Weierstrass w);
std::vector<std::uint32_t> roots(const FieldCtx& ctx, Weierstrass w);

// Exact F_p-isomorphism invariant of a short Weierstrass curve: the
// j-invariant plus the twist class (phi(B/A) generically, A modulo fourth
// powers at j = 1728, B modulo sixth powers at j = 0).
struct TwistKey {
  std::uint32_t j = 0;
  std::uint32_t cls = 0;
  friend auto operator<=>(const TwistKey&, const TwistKey&) = default;
};
TwistKey twist_key(const FieldCtx& ctx, Weierstrass w);

// Oracle: search u in F_p^x with A2 = u^4 A1 and B2 = u^6 B1.
bool isomorphic_brute(const FieldCtx& ctx, Weierstrass w1, Weierstrass w2);

// The cheap (j, a_p) key; degenerate when a_p = 0 or j in {0, 1728}, where
// it no longer determines the F_p-isomorphism class.
struct IsoClassKey {
  std::uint32_t j = 0;
  int ap = 0;
  bool degenerate = false;
};
IsoClassKey iso_class_key(const FieldCtx& ctx, std::uint32_t lambda, int ap);

// Isomorphism of two Legendre curves: (j, a_p) generically, twist-class
// comparison when the key is degenerate.
bool legendre_isomorphic(const FieldCtx& ctx, std::uint32_t l1, int ap1, std::uint32_t l2, int ap2);

// Precomputed data for the curves E_{mu^2}, mu in F_p \ {0, +-1}.
class SquareFamily {
 public:
  explicit SquareFamily(const FieldCtx& ctx);
  SquareFamily(const FieldCtx& ctx, const std::vector<int>& traces);

  const FieldCtx& ctx() const { return *ctx_; }
  bool admissible(std::uint32_t mu) const;
  int ap(std::uint32_t mu) const { return ap_[mu]; }
  std::uint32_t j(std::uint32_t mu) const { return j_[mu]; }
  TwistKey key(std::uint32_t mu) const { return key_[mu]; }

  // L(lambda): all mu with E_{mu^2} isomorphic to E_{lambda^2}.
  std::vector<std::uint32_t> l_set(std::uint32_t lambda) const;
  // Number of distinct F_p-isomorphism classes among the E_{mu^2}.
  std::size_t distinct_classes() const;

 private:
  const FieldCtx* ctx_;
  std::vector<int> ap_;
  std::vector<std::uint32_t> j_;
  std::vector<TwistKey> key_;
};

std::vector<std::uint32_t> l_set(const FieldCtx& ctx, std::uint32_t lambda);

// |L(lambda)| as stated by the case analysis on p mod 4/8/12, j and 1-lambda^2;
// nullopt where no cardinality is asserted (j = 1728 with p = 3 mod 4).
std::optional<std::size_t> l_set_predicted_size(const FieldCtx& ctx, std::uint32_t lambda);

// One representative per F_p-isomorphism class of elliptic curves over F_p.
struct CurveClass {
  Weierstrass rep;
  TwistKey key;
  int trace = 0;
  std::size_t rational_roots = 0;  // 3 iff the full 2-torsion is rational
  std::optional<TorsionClass> torsion;  // set when rational_roots == 3
};
std::vector<CurveClass> enumerate_iso_classes(const FieldCtx& ctx);

}  // namespace ntlab::ecurve

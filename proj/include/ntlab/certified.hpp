#pragma once

#include <cmath>
#include <cstdint>

namespace ntlab {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, about 106 significant bits.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  double to_double() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble dd_add(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  DoubleDouble t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble dd_neg(DoubleDouble x) { return {-x.hi, -x.lo}; }

inline DoubleDouble dd_mul(DoubleDouble x, DoubleDouble y) {
  double p = x.hi * y.hi;
  double e = std::fma(x.hi, y.hi, -p);
  e += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p, e);
}

inline DoubleDouble dd_mul(DoubleDouble x, double y) { return dd_mul(x, DoubleDouble{y, 0.0}); }

inline double dd_abs(DoubleDouble x) { return std::fabs(x.hi) + std::fabs(x.lo); }

// Relative rounding error charged to each double-double add or multiply.
// The accurate algorithms above stay below 7*2^-106; 2^-100 leaves headroom.
inline constexpr double kDDRoundoff = 0x1p-100;

// A real number with a rigorous absolute error bound.
class CertifiedReal {
 public:
  CertifiedReal() = default;
  CertifiedReal(DoubleDouble v, double err) : value_(v), err_(err) {}
  static CertifiedReal exact(double v) { return {DoubleDouble{v, 0.0}, 0.0}; }

  DoubleDouble value() const { return value_; }
  double err() const { return err_; }
  double to_double() const { return value_.to_double(); }
  double magnitude() const { return dd_abs(value_) + err_; }

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  CertifiedReal operator-() const { return {dd_neg(value_), err_}; }
  CertifiedReal& operator+=(const CertifiedReal& o) { return *this = *this + o; }

 private:
  DoubleDouble value_{};
  double err_ = 0.0;
};

// The unique integer within err of the value. Throws PrecisionError when
// err >= 1/2, naming the number of extra bits that would be needed.
std::int64_t round_to_integer(const CertifiedReal& x);

// Error bound for a cascaded (TwoSum) summation of n terms whose absolute
// values sum to sum_abs, with each input carrying entry_err.
double cascaded_sum_bound(std::uint64_t n, double sum_abs, double entry_err);

}  // namespace ntlab

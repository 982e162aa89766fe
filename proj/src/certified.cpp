#include "ntlab/certified.hpp"

#include <cmath>
#include <string>

#include "ntlab/errors.hpp"

namespace ntlab {

namespace {

// Inflate a bound computed in double arithmetic so it stays an upper bound.
inline double up(double x) { return x * (1.0 + 0x1p-50); }

}  // namespace

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  DoubleDouble v = dd_add(a.value_, b.value_);
  return {v, up(a.err_ + b.err_ + dd_abs(v) * kDDRoundoff)};
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) { return a + (-b); }

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  DoubleDouble v = dd_mul(a.value_, b.value_);
  double e = dd_abs(a.value_) * b.err_ + dd_abs(b.value_) * a.err_ + a.err_ * b.err_ +
             dd_abs(v) * kDDRoundoff;
  return {v, up(e)};
}

std::int64_t round_to_integer(const CertifiedReal& x) {
  if (!(x.err() < 0.5)) {
    int bits = static_cast<int>(std::ceil(std::log2(x.err() / 0.5))) + 1;
    throw PrecisionError("insufficient precision: error bound " + std::to_string(x.err()) +
                             " needs " + std::to_string(bits) + " extra bits",
                         bits);
  }
  DoubleDouble v = x.value();
  double r = std::nearbyint(v.hi);
  double diff = (v.hi - r) + v.lo;
  if (diff > 0.5) r += 1.0;
  if (diff < -0.5) r -= 1.0;
  if (std::fabs(r) > 0x1p62) throw PrecisionError("value exceeds 64-bit range", 0);
  return static_cast<std::int64_t>(r);
}

double cascaded_sum_bound(std::uint64_t n, double sum_abs, double entry_err) {
  const double u = 0x1p-53;
  const double nu = static_cast<double>(n) * u;
  const double gamma = nu / (1.0 - nu);
  // Ogita-Rump-Oishi Sum2 bound plus the final renormalisation and the
  // plain accumulation of the low words.
  double bound = static_cast<double>(n) * entry_err + 2.0 * gamma * gamma * sum_abs +
                 4.0 * u * u * sum_abs;
  return up(bound);
}

}  // namespace ntlab

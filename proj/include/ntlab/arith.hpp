#pragma once

#include <cstdint>
#include <vector>

namespace ntlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; requires gcd(a, m) == 1 (throws DomainError otherwise).
u64 invmod(u64 a, u64 m);

// Reduce a signed integer into [0, m).
inline u64 to_residue(i64 x, u64 m) {
  i64 r = x % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

// Symmetric representative in (-m/2, m/2].
inline i64 symmetric(u64 r, u64 m) {
  return r > m / 2 ? static_cast<i64>(r) - static_cast<i64>(m) : static_cast<i64>(r);
}

bool is_prime(u64 n);

// Primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

i64 ipow(i64 base, unsigned exp);

i64 isqrt(i64 n);

i64 gcd(i64 a, i64 b);

}  // namespace ntlab

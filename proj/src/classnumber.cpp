#include "ntlab/classnumber.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ntlab/arith.hpp"
#include "ntlab/errors.hpp"

namespace ntlab::classnumber {

namespace {

constexpr const char* kSchemaLine = "# ntlab-schema v1";
constexpr const char* kHeader = "D,h,hstar12,hfull";

bool reduced(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (std::llabs(b) > a || a > c) return false;
  if ((std::llabs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::int64_t unit_weight(std::int64_t D) {
  if (D == 3) return 4;
  if (D == 4) return 6;
  return 12;
}

// Calls fn(a, b, c) for each reduced form with 4ac - b^2 = D.
template <class Fn>
void for_each_reduced_form(std::int64_t D, Fn fn) {
  for (std::int64_t a = 1; 3 * a * a <= D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = D + b * b;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (reduced(a, b, c)) fn(a, b, c);
    }
  }
}

}  // namespace

bool is_discriminant(std::int64_t D) { return D > 0 && (D % 4 == 0 || D % 4 == 3); }

std::uint32_t class_number_h(std::int64_t D) {
  if (!is_discriminant(D)) return 0;
  std::uint32_t n = 0;
  for_each_reduced_form(D, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    if (std::gcd(std::gcd(a, std::llabs(b)), c) == 1) ++n;
  });
  return n;
}

std::int64_t hurwitz_hstar(std::int64_t D) {
  if (D == 0) return -1;
  if (D < 0) return 0;
  std::int64_t s = 0;
  for (std::int64_t f = 1; f * f <= D; ++f) {
    if (D % (f * f) != 0) continue;
    const std::int64_t d = D / (f * f);
    if (is_discriminant(d)) s += class_number_h(d) * unit_weight(d);
  }
  return s;
}

std::int64_t hurwitz_hfull(std::int64_t D) {
  if (D <= 0) return 0;
  std::int64_t s = 0;
  for (std::int64_t f = 1; f * f <= D; ++f) {
    if (D % (f * f) == 0) s += class_number_h(D / (f * f));
  }
  return s;
}

std::int64_t hstar12_all_forms(std::int64_t D) {
  if (D == 0) return -1;
  if (!is_discriminant(D)) return 0;
  std::int64_t s = 0;
  for_each_reduced_form(D, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b == 0 && a == c) {
      s += 6;
    } else if (b == a && a == c) {
      s += 4;
    } else {
      s += 12;
    }
  });
  return s;
}

HurwitzTable HurwitzTable::build(std::uint32_t bound) {
  HurwitzTable t;
  t.bound = bound;
  t.h.assign(bound + 1, 0);
  t.hstar12.assign(bound + 1, 0);
  t.hfull.assign(bound + 1, 0);
  const std::int64_t B = bound;
  for (std::int64_t a = 1; 3 * a * a <= B; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      for (std::int64_t c = a;; ++c) {
        const std::int64_t D = 4 * a * c - b * b;
        if (D > B) break;
        if (!reduced(a, b, c)) continue;
        if (std::gcd(std::gcd(a, std::llabs(b)), c) == 1) ++t.h[D];
      }
    }
  }
  for (std::int64_t f = 1; f * f <= B; ++f) {
    const std::int64_t f2 = f * f;
    for (std::int64_t d = 1; d * f2 <= B; ++d) {
      if (!is_discriminant(d)) continue;
      t.hstar12[d * f2] += t.h[d] * unit_weight(d);
      t.hfull[d * f2] += t.h[d];
    }
  }
  t.hstar12[0] = -1;
  return t;
}

std::int64_t HurwitzTable::hstar12_at(std::int64_t D) const {
  if (D < 0) return 0;
  if (D > static_cast<std::int64_t>(bound)) {
    throw CapExceeded("extend cache: D=" + std::to_string(D) + " exceeds bound " +
                      std::to_string(bound));
  }
  return hstar12[D];
}

std::int64_t HurwitzTable::hfull_at(std::int64_t D) const {
  if (D < 0) return 0;
  if (D > static_cast<std::int64_t>(bound)) {
    throw CapExceeded("extend cache: D=" + std::to_string(D) + " exceeds bound " +
                      std::to_string(bound));
  }
  return hfull[D];
}

DivisorSums divisor_sums(std::int64_t n) {
  if (n <= 0) throw DomainError("divisor sums need n > 0");
  DivisorSums r;
  r.n = n;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t e = n / d;
    r.sigma1 += d + (e != d ? e : 0);
    const std::int64_t m = d;  // d <= e
    const std::int64_t mult = e != d ? 2 : 1;
    r.lambda1x2 += mult * m;
    r.lambda3x2 += mult * m * m * m;
  }
  return r;
}

namespace {

void require_odd(std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw DomainError("expected an odd positive integer");
}

}  // namespace

Rational eichler_lhs(const HurwitzTable& table, std::int64_t n) {
  require_odd(n);
  std::int64_t s12 = 0;
  for (std::int64_t s = -isqrt(n); s * s <= n; ++s) s12 += table.hstar12_at(n - s * s);
  return Rational(s12, 12);
}

Rational eichler_rhs(std::int64_t n) {
  require_odd(n);
  const DivisorSums d = divisor_sums(n);
  return Rational(-d.lambda1x2, 2) + Rational(d.sigma1, 3);
}

Rational cohen_coefficient(const HurwitzTable& table, std::int64_t l) {
  require_odd(l);
  std::int64_t weighted = 0, plain = 0;
  for (std::int64_t s = -isqrt(l); s * s <= l; ++s) {
    const std::int64_t v = table.hstar12_at(l - s * s);
    weighted += v * s * s;
    plain += v;
  }
  const DivisorSums d = divisor_sums(l);
  return Rational(4 * weighted - l * plain + 6 * d.lambda3x2, 12);
}

std::filesystem::path cache_dir() {
  const char* env = std::getenv("NTLAB_CACHE");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path("./.ntlab-cache");
}

void write_csv(const HurwitzTable& table, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + file.string());
  out << kSchemaLine << '\n' << kHeader << '\n';
  for (std::uint32_t D = 0; D <= table.bound; ++D) {
    out << D << ',' << table.h[D] << ',' << table.hstar12[D] << ',' << table.hfull[D] << '\n';
  }
  if (!out) throw Error("write failed: " + file.string());
}

HurwitzTable read_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != kSchemaLine) {
    throw Error("unrecognised schema in " + file.string());
  }
  if (!std::getline(in, line) || line != kHeader) throw Error("bad header in " + file.string());
  HurwitzTable t;
  std::int64_t expect = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::int64_t D, h, hs, hf;
    char c1, c2, c3;
    if (!(ss >> D >> c1 >> h >> c2 >> hs >> c3 >> hf) || D != expect) {
      throw Error("malformed row in " + file.string() + ": " + line);
    }
    t.h.push_back(static_cast<std::uint32_t>(h));
    t.hstar12.push_back(hs);
    t.hfull.push_back(static_cast<std::uint32_t>(hf));
    ++expect;
  }
  if (expect == 0) throw Error("empty table in " + file.string());
  t.bound = static_cast<std::uint32_t>(expect - 1);
  return t;
}

HurwitzTable load_or_build(std::uint32_t bound, const std::filesystem::path& dir) {
  const auto file = dir / "hurwitz.csv";
  if (std::filesystem::exists(file)) {
    try {
      HurwitzTable t = read_csv(file);
      if (t.bound >= bound) return t;
    } catch (const Error&) {
      // unreadable or stale: rebuild below
    }
  }
  HurwitzTable t = HurwitzTable::build(bound);
  write_csv(t, file);
  return t;
}

}  // namespace ntlab::classnumber

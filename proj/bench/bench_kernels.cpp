// Serial reference kernels against their OpenMP counterparts. Each pair is
// checked for identical output before the timings are trusted.
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ntlab/ecurve.hpp"
#include "ntlab/hypergeom.hpp"
#include "ntlab/kloosterman.hpp"
#include "ntlab/padic.hpp"

using namespace ntlab;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count());
  }
  return best;
}

bool report(const char* name, std::uint32_t p, double serial, double parallel, bool same) {
  std::printf("%-22s p=%-6u serial %10.2f ms  omp %10.2f ms  speedup %6.2fx  %s\n", name, p, serial,
              parallel, serial / parallel, same ? "outputs agree" : "OUTPUTS DIFFER");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernels"};
  std::uint32_t pk = 4001, pt = 20011, pi = 97, pg = 31;
  int reps = 3;
  app.add_option("--kloosterman-p", pk);
  app.add_option("--trace-p", pt);
  app.add_option("--i-p", pi);
  app.add_option("--gamma-p", pg);
  app.add_option("--reps", reps);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  bool ok = true;

  {
    const FieldCtx f(pk);
    kloosterman::KloostermanTable a, b;
    const double s = time_ms([&] { a = kloosterman::kloosterman_table_serial(f); }, reps);
    const double o = time_ms([&] { b = kloosterman::kloosterman_table_omp(f); }, reps);
    // Same certified integers either way; the double-double values may differ in the last bits.
    const bool same = kloosterman::twisted_moment(f, a, 4, f.quadratic()).value ==
                      kloosterman::twisted_moment(f, b, 4, f.quadratic()).value;
    ok &= report("kloosterman table", pk, s, o, same);
  }
  {
    const FieldCtx f(pt);
    std::vector<int> a, b;
    const double s = time_ms([&] { a = ecurve::trace_table_serial(f); }, reps);
    const double o = time_ms([&] { b = ecurve::trace_table_omp(f); }, reps);
    ok &= report("legendre traces", pt, s, o, a == b);
  }
  {
    const padic::PadicCtx ctx(pi, 6);
    u64 a = 0, b = 0;
    const double s = time_ms([&] { a = hypergeom::i_residue_serial(ctx); }, reps);
    const double o = time_ms([&] { b = hypergeom::i_residue(ctx); }, reps);
    ok &= report("I residue", pi, s, o, a == b);
  }
  {
    const padic::PadicCtx ctx(pg, 4);
    const u64 n = ctx.modulus() / 64;
    std::vector<u64> a(64), b(64);
    const double s = time_ms(
        [&] {
          for (int i = 0; i < 64; ++i) a[i] = ctx.gamma_int_naive(n * i + 1);
        },
        1);
    const double o = time_ms(
        [&] {
          for (int i = 0; i < 64; ++i) b[i] = ctx.gamma_int(n * i + 1);
        },
        reps);
    std::printf("%-22s p=%-6u naive  %10.2f ms  block %10.2f ms  speedup %6.2fx  %s\n",
                "gamma_p (64 values)", pg, s, o, s / o, a == b ? "outputs agree" : "OUTPUTS DIFFER");
    ok &= a == b;
  }
  return ok ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ntlab/classnumber.hpp"
#include "ntlab/ecurve.hpp"
#include "ntlab/hypergeom.hpp"
#include "ntlab/identities.hpp"
#include "ntlab/kloosterman.hpp"
#include "ntlab/padic.hpp"

using namespace ntlab;

namespace {

constexpr double kRatioThreshold = 4.0;
constexpr double kCohenThreshold = 0.01;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts failures for one named sub-check and renders "name ok/total".
struct Tally {
  std::string name;
  std::size_t total = 0, bad = 0;
  std::vector<std::string> first_bad;

  void add(bool ok, const std::string& where) {
    ++total;
    if (!ok) {
      ++bad;
      if (first_bad.size() < 3) first_bad.push_back(where);
    }
  }
  bool ok() const { return bad == 0; }
  std::string str() const {
    std::ostringstream s;
    s << name << " " << (total - bad) << "/" << total;
    if (bad) {
      s << " (fails at";
      for (const auto& w : first_bad) s << " " << w;
      if (bad > first_bad.size()) s << " ...";
      s << ")";
    }
    return s.str();
  }
};

Outcome combine(const std::vector<Tally>& required, const std::vector<Tally>& info = {}) {
  Outcome o;
  std::string sep;
  for (const auto& t : required) {
    o.pass = o.pass && t.ok();
    o.detail += sep + t.str();
    sep = "; ";
  }
  if (!info.empty()) {
    o.detail += " | corrected:";
    for (const auto& t : info) o.detail += " " + t.str() + ";";
    o.detail.pop_back();
  }
  return o;
}

std::string pstr(std::uint32_t p) { return "p=" + std::to_string(p); }

std::map<std::uint32_t, std::int64_t> g_s4;  // S(4, phi)_p, filled by criterion 1

const classnumber::HurwitzTable& table() {
  static const classnumber::HurwitzTable t = classnumber::HurwitzTable::build(8100);
  return t;
}

Outcome criterion1() {
  Tally s1{"S(1)=1"}, s2{"S(2)=p^2-p-1"}, s4{"S(4)=2p^3-3p^2-1"}, s2phi{"S(2,phi)=-p"},
      m4{"M(4,phi)=S(4,phi)+3p^2"}, s4true{"S(4)=2p^3-3p^2-3p-1"};
  for (std::uint32_t p : primes_in_range(7, 2000)) {
    const FieldCtx f(p);
    const auto t = kloosterman::kloosterman_table(f);
    const std::int64_t P = p;
    s1.add(kloosterman::untwisted_moment(t, 1).value == 1, pstr(p));
    s2.add(kloosterman::untwisted_moment(t, 2).value == P * P - P - 1, pstr(p));
    const std::int64_t u4 = kloosterman::untwisted_moment(t, 4).value;
    s4.add(u4 == 2 * P * P * P - 3 * P * P - 1, pstr(p));
    s4true.add(u4 == 2 * P * P * P - 3 * P * P - 3 * P - 1, pstr(p));
    s2phi.add(kloosterman::twisted_moment(f, t, 2, f.quadratic()).value == -P, pstr(p));
    const std::int64_t s4phi = kloosterman::twisted_moment(f, t, 4, f.quadratic()).value;
    g_s4[p] = s4phi;
    m4.add(kloosterman::sheaf_moment(f, t, 4) == s4phi + 3 * P * P, pstr(p));
  }
  return combine({s1, s2, s4, s2phi, m4}, {s4true});
}

Outcome criterion2() {
  Tally ap{"direct=traces"}, cn{"direct=class-numbers"}, ap_st{"direct=traces(-p^3+2p^2)"},
      cn_st{"direct=class-numbers(-p^3+2p^2)"}, spot{"spot values -245,-507"};
  for (std::uint32_t p : primes_in_range(7, 1000)) {
    const FieldCtx f(p);
    const auto traces = ecurve::trace_table(f);
    const std::int64_t s4 = g_s4.at(p);
    using identities::Reading;
    ap.add(identities::s4_via_ap(f, traces, Reading::derived) == s4, pstr(p));
    ap_st.add(identities::s4_via_ap(f, traces, Reading::stated) == s4, pstr(p));
    cn.add(identities::s4_via_classnumbers(f, table(), Reading::derived) == Rational(s4), pstr(p));
    cn_st.add(identities::s4_via_classnumbers(f, table(), Reading::stated) == Rational(s4), pstr(p));
  }
  spot.add(g_s4.at(7) == -245, "p=7 got " + std::to_string(g_s4.at(7)));
  spot.add(g_s4.at(13) == -507, "p=13 got " + std::to_string(g_s4.at(13)));
  return combine({ap_st, cn_st, spot}, {ap, cn});
}

Outcome criterion3() {
  Tally cp_st{"C_p brute=formula(3(p-2))"}, cp{"C_p brute=formula(5(p-2))"}, chain{"A_p chain"};
  using identities::CountMode;
  using identities::Reading;
  for (std::uint32_t p : primes_in_range(7, 100)) {
    const FieldCtx f(p);
    const std::int64_t s4 = g_s4.at(p);
    const std::int64_t brute = identities::cp_count(f, CountMode::brute, s4, 100);
    cp_st.add(identities::cp_count(f, CountMode::formula, s4, 100, Reading::stated) == brute, pstr(p));
    cp.add(identities::cp_count(f, CountMode::formula, s4, 100, Reading::derived) == brute, pstr(p));
  }
  for (std::uint32_t p : primes_in_range(7, 500)) {
    identities::PrimeData d{FieldCtx(p), {}, {}, g_s4.at(p)};
    d.traces = ecurve::trace_table(d.field);
    bool ok = true;
    for (const auto& r : identities::ap_second_moment_check(d)) ok = ok && r.match;
    chain.add(ok, pstr(p));
  }
  return combine({cp_st, chain}, {cp});
}

Outcome criterion4() {
  Tally eich{"Eichler odd n<=5000"}, cohen{"|c(l)|/l^1.5<=0.01 odd l<=5000"};
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 5000; n += 2) {
    eich.add(classnumber::eichler_lhs(table(), n) == classnumber::eichler_rhs(n), "n=" + std::to_string(n));
    const double c = std::abs(classnumber::cohen_coefficient(table(), n).to_double()) / std::pow(double(n), 1.5);
    worst = std::max(worst, c);
    cohen.add(c <= kCohenThreshold, "l=" + std::to_string(n));
  }
  Outcome o = combine({eich, cohen});
  o.detail += "; max |c(l)|/l^1.5=" + format_ratio(worst);
  return o;
}

Outcome criterion5() {
  Tally torsion{"torsion criteria and |L(lambda)|"}, schoof{"Schoof counts"}, census{"census"},
      lemma{"counting lemma p=1 mod 4 <=1000"};
  for (std::uint32_t p : primes_in_range(7, 200)) {
    const FieldCtx f(p);
    const auto traces = ecurve::trace_table(f);
    bool ok = true;
    for (const auto& r : identities::torsion_structure_records(f, traces, 200)) ok = ok && r.match;
    torsion.add(ok, pstr(p));
    ok = true;
    for (const auto& r : identities::schoof_records(f, table(), 200)) ok = ok && r.match;
    schoof.add(ok, pstr(p));
    ok = true;
    for (const auto& r : identities::torsion_census_check(f, table(), traces)) ok = ok && (!r.exact || r.match);
    census.add(ok, pstr(p));
  }
  for (std::uint32_t p : primes_in_range(5, 1000)) {
    if (p % 4 == 1) lemma.add(identities::counting_lemma_check(FieldCtx(p), table()).match, pstr(p));
  }
  return combine({torsion, schoof, census, lemma});
}

Outcome criterion6() {
  Tally gk{"GK exhaustive p<=50 K=3"}, gk_rand{"GK 50 random pairs p<=200"}, hd{"Hasse-Davenport"},
      gp{"Gamma_p products"}, greene{"2F1=-phi(-1)a_p/p p<=200"};
  std::mt19937_64 rng(20240601);
  for (std::uint32_t p : primes_in_range(5, 200)) {
    const padic::PadicCtx c(p, 3);
    const std::uint32_t n = p - 1;
    if (p <= 50) {
      bool ok = true;
      for (std::uint32_t a = 1; a < n; ++a)
        for (std::uint32_t b = 1; b < n; ++b)
          if ((a + b) % n) ok = ok && padic::gk_consistency_check(c, CharIdx{a}, CharIdx{b}).match;
      gk.add(ok, pstr(p));
      ok = true;
      for (unsigned m : {2u, 3u}) {
        if (n % m) continue;
        for (std::uint32_t a = 0; a < n; ++a) ok = ok && padic::hasse_davenport_check(c, m, CharIdx{a}).match;
      }
      hd.add(ok, pstr(p));
      ok = true;
      for (unsigned t : {2u, 3u, 4u, 6u, 12u}) {
        if (n % t) continue;
        for (std::uint32_t j = 0; j < n; ++j) ok = ok && padic::gamma_product_formulas(c, t, j).all();
      }
      gp.add(ok, pstr(p));
    }
    if (n > 3) {
      bool ok = true;
      for (int i = 0; i < 50;) {
        const std::uint32_t a = 1 + rng() % (n - 1), b = 1 + rng() % (n - 1);
        if ((a + b) % n == 0) continue;
        ok = ok && padic::gk_consistency_check(c, CharIdx{a}, CharIdx{b}).match;
        ++i;
      }
      gk_rand.add(ok, pstr(p));
    }
    const auto J = hypergeom::greene_jacobi_table(c);
    const auto traces = ecurve::trace_table(c.field());
    const int m1 = c.field().phi(p - 1);
    bool ok = true;
    for (std::uint32_t l = 2; l < p; ++l) ok = ok && hypergeom::greene_2f1_scaled(c, J, l) == -m1 * traces[l];
    greene.add(ok, pstr(p));
  }
  return combine({gk, gk_rand, hd, gp, greene});
}

Outcome criterion7() {
  using hypergeom::Prop64Twist;
  Tally g3_st{"3G3 identity as stated mod p^6"}, g3{"3G3 with -phi(2)C prefactor"},
      g9{"9G9 identity mod p^6"}, backbone{"backbone p<=200"};
  for (std::uint32_t p : primes_in_range(5, 200)) {
    const padic::PadicCtx c(p, 6);
    if (p % 3 == 1) {
      g3_st.add(hypergeom::prop64_check(c, Prop64Twist::kComplementOfSquare).match, pstr(p));
      g3.add(hypergeom::prop64_gamma_check(c, Prop64Twist::kSquareOfComplement).match, pstr(p));
    } else {
      g9.add(hypergeom::prop65_check(c, false).match, pstr(p));
    }
    if (p < 7) continue;
    const auto traces = ecurve::trace_table(c.field());
    bool ok = true;
    for (const auto& r : hypergeom::prop66_backbone(c, traces, g_s4.at(p))) {
      if (r.name != "trace-square-slack") ok = ok && r.match;
    }
    backbone.add(ok, pstr(p));
  }
  return combine({g3_st, g9, backbone}, {g3});
}

Outcome criterion8() {
  struct Claim {
    const char* tag;
    double worst = 0.0;
    std::uint32_t at = 0;
  };
  std::vector<Claim> claims = {{"thm1.1"}, {"cor1.2"}, {"prop4.4"}, {"prop4.6"}, {"prop4.8"}, {"prop4.9"}};
  Outcome o;
  for (auto& cl : claims) {
    for (std::uint32_t p : primes_in_range(100, 2000)) {
      if (!identities::claim_applies(cl.tag, p)) continue;
      const auto r = identities::asymptotic_record(cl.tag, p, table(), g_s4.at(p));
      if (*r.ratio > cl.worst) {
        cl.worst = *r.ratio;
        cl.at = p;
      }
    }
    o.pass = o.pass && cl.worst <= kRatioThreshold;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + cl.tag + " max=" + format_ratio(cl.worst) +
                " at " + pstr(cl.at);
  }
  o.detail += "; threshold " + format_ratio(kRatioThreshold);
  return o;
}

Outcome criterion9() {
  std::uint32_t lo3 = 0, hi3 = 0, lo9 = 0, hi9 = 0;
  for (std::uint32_t p : primes_in_range(7, 300)) {
    auto& lo = p % 3 == 1 ? lo3 : lo9;
    auto& hi = p % 3 == 1 ? hi3 : hi9;
    if (!lo) lo = p;
    hi = p;
  }
  const auto a = hypergeom::trend_point(lo3, 6), b = hypergeom::trend_point(hi3, 6);
  const auto c = hypergeom::trend_point(lo9, 6), d = hypergeom::trend_point(hi9, 6);
  Outcome o;
  o.pass = b.abs_t < a.abs_t && d.abs_t < c.abs_t;
  o.detail = "3G3 |T|: " + pstr(lo3) + " " + format_ratio(a.abs_t) + " -> " + pstr(hi3) + " " +
             format_ratio(b.abs_t) + "; 9G9 |T|/p^2: " + pstr(lo9) + " " + format_ratio(c.abs_t) +
             " -> " + pstr(hi9) + " " + format_ratio(d.abs_t);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"closed-form moments 5<p<=2000", criterion1},
      {"S(4,phi) by three routes 5<p<=1000", criterion2},
      {"C_p and A_p chains", criterion3},
      {"class-number engine", criterion4},
      {"torsion and census", criterion5},
      {"p-adic engine", criterion6},
      {"hypergeometric identities p<=200", criterion7},
      {"bounded ratios 100<=p<=2000", criterion8},
      {"|T(p)| trends", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}

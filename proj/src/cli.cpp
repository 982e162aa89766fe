#include "ntlab/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "ntlab/arith.hpp"
#include "ntlab/classnumber.hpp"
#include "ntlab/ecurve.hpp"
#include "ntlab/errors.hpp"
#include "ntlab/hypergeom.hpp"
#include "ntlab/kloosterman.hpp"
#include "ntlab/padic.hpp"

namespace ntlab::cli {

namespace {

using Clock = std::chrono::steady_clock;
using identities::HurwitzTable;
using identities::PrimeData;
using padic::PadicCtx;

std::string str(std::int64_t v) { return std::to_string(v); }

VerificationRecord error_record(std::uint32_t p, const std::string& name, const std::exception& e) {
  VerificationRecord r = exact_record(p, name, "error", "");
  r.match = false;
  r.note = e.what();
  return r;
}

void append(std::vector<VerificationRecord>& out, std::vector<VerificationRecord> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

// Everything a suite may need for one prime, built on first use.
class PrimeScope {
 public:
  PrimeScope(std::uint32_t p, const RunConfig& cfg, const HurwitzTable& table)
      : p_(p), cfg_(cfg), table_(table) {}

  std::uint32_t p() const { return p_; }
  const RunConfig& cfg() const { return cfg_; }
  const HurwitzTable& table() const { return table_; }

  const FieldCtx& field() {
    if (!field_) field_ = std::make_unique<FieldCtx>(p_);
    return *field_;
  }
  const std::vector<int>& traces() {
    if (data_) return data_->traces;
    if (!traces_) traces_ = std::make_unique<std::vector<int>>(ecurve::trace_table(field()));
    return *traces_;
  }
  const PrimeData& data() {
    if (!data_) data_ = std::make_unique<PrimeData>(identities::make_prime_data(p_));
    return *data_;
  }
  const PadicCtx& padic() {
    if (!padic_) padic_ = std::make_unique<PadicCtx>(p_, cfg_.K);
    return *padic_;
  }

 private:
  std::uint32_t p_;
  const RunConfig& cfg_;
  const HurwitzTable& table_;
  std::unique_ptr<FieldCtx> field_;
  std::unique_ptr<std::vector<int>> traces_;
  std::unique_ptr<PrimeData> data_;
  std::unique_ptr<PadicCtx> padic_;
};

std::vector<VerificationRecord> suite_moments(PrimeScope& s) {
  auto out = identities::moment_records(s.data());
  if (s.p() <= s.cfg().brute_cap) {
    out.push_back(exact_record(s.p(), "symmetric-sum", str(s.data().s4),
                               str(kloosterman::symmetric_moment_rhs(s.field(), 3, s.cfg().brute_cap))));
  }
  return out;
}

std::vector<VerificationRecord> suite_stated(PrimeScope& s) {
  auto out = identities::stated_form_records(s.data(), s.table(), s.cfg().brute_cap);
  if (s.p() % 3 == 1 && s.p() <= s.cfg().padic_cap) {
    for (auto tw : {hypergeom::Prop64Twist::kSquareOfComplement,
                    hypergeom::Prop64Twist::kComplementOfSquare}) {
      VerificationRecord r = hypergeom::prop64_check(s.padic(), tw);
      r.name += "-stated";
      out.push_back(r);
    }
  }
  return out;
}

std::vector<VerificationRecord> suite_gk(PrimeScope& s) {
  const PadicCtx& ctx = s.padic();
  const std::uint32_t n = s.p() - 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (s.p() <= 50) {
    for (std::uint32_t a = 1; a < n; ++a) {
      for (std::uint32_t b = 1; b < n; ++b) {
        if ((a + b) % n != 0) pairs.emplace_back(a, b);
      }
    }
  } else {
    std::mt19937_64 rng(s.cfg().seed ^ (std::uint64_t(s.p()) << 20));
    std::uniform_int_distribution<std::uint32_t> dist(1, n - 1);
    while (pairs.size() < 50) {
      const std::uint32_t a = dist(rng), b = dist(rng);
      if ((a + b) % n != 0) pairs.emplace_back(a, b);
    }
  }
  std::int64_t ok = 0;
  std::string first_bad;
  for (auto [a, b] : pairs) {
    if (padic::gk_consistency_check(ctx, CharIdx{a}, CharIdx{b}).match) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = "a=" + str(a) + " b=" + str(b);
    }
  }
  VerificationRecord r = exact_record(s.p(), "gk", str(ok), str(std::int64_t(pairs.size())));
  r.note = "K=" + str(ctx.K()) + (first_bad.empty() ? "" : " first mismatch " + first_bad);
  return {r};
}

std::vector<VerificationRecord> suite_hasse_davenport(PrimeScope& s) {
  const PadicCtx& ctx = s.padic();
  std::vector<VerificationRecord> out;
  for (unsigned m : {2u, 3u}) {
    if ((s.p() - 1) % m != 0) continue;
    std::int64_t ok = 0, total = 0;
    for (std::uint32_t a = 0; a + 1 < s.p(); ++a) {
      ++total;
      if (padic::hasse_davenport_check(ctx, m, CharIdx{a}).match) ++ok;
    }
    VerificationRecord r = exact_record(s.p(), "hasse-davenport", str(ok), str(total));
    r.note = "m=" + str(m);
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationRecord> suite_gamma(PrimeScope& s) {
  const PadicCtx& ctx = s.padic();
  std::vector<VerificationRecord> out;
  for (unsigned t : {2u, 3u, 4u, 6u, 12u}) {
    if (t % s.p() == 0) continue;
    std::int64_t ok = 0;
    for (std::uint32_t j = 0; j + 1 < s.p(); ++j) {
      if (padic::gamma_product_formulas(ctx, t, j).all()) ++ok;
    }
    VerificationRecord r = exact_record(s.p(), "gamma-products", str(ok), str(s.p() - 1));
    r.note = "t=" + str(t);
    out.push_back(r);
  }
  std::int64_t ok = 0;
  for (std::uint32_t j = 0; j + 1 < s.p(); ++j) {
    if (padic::gamma_reflection_holds(ctx, Rational(j, s.p() - 1))) ++ok;
  }
  out.push_back(exact_record(s.p(), "gamma-reflection", str(ok), str(s.p() - 1)));
  return out;
}

std::vector<VerificationRecord> suite_greene(PrimeScope& s) {
  const PadicCtx& ctx = s.padic();
  const FieldCtx& f = s.field();
  const auto J = hypergeom::greene_jacobi_table(ctx);
  const auto& tr = s.traces();
  const int phim1 = f.phi(s.p() - 1);
  std::int64_t ok = 0;
  for (std::uint32_t l = 2; l < s.p(); ++l) {
    if (hypergeom::greene_2f1_scaled(ctx, J, l) == -phim1 * tr[l]) ++ok;
  }
  std::vector<VerificationRecord> out;
  out.push_back(exact_record(s.p(), "greene-2f1", str(ok), str(s.p() - 2)));
  out.push_back(exact_record(s.p(), "greene-3f2", str(hypergeom::greene_3f2_scaled(ctx, J)),
                             str(hypergeom::greene_3f2_scaled_direct(f))));
  out.push_back(exact_record(s.p(), "greene-b", str(hypergeom::b_scaled(ctx, J)),
                             str(hypergeom::b_scaled_direct(f))));
  return out;
}

std::vector<VerificationRecord> suite_g3(PrimeScope& s) {
  return {hypergeom::prop64_gamma_check(s.padic(), hypergeom::Prop64Twist::kSquareOfComplement)};
}

std::vector<VerificationRecord> suite_g9(PrimeScope& s) {
  return {hypergeom::prop65_check(s.padic(), false)};
}

std::vector<VerificationRecord> suite_backbone(PrimeScope& s) {
  return hypergeom::prop66_backbone(s.padic(), s.data().traces, s.data().s4);
}

std::vector<VerificationRecord> run_prime_suite(const std::string& suite, PrimeScope& s) {
  if (suite == "moments") return suite_moments(s);
  if (suite == "s4-triroute") return identities::s4_triroute_records(s.data(), s.table());
  if (suite == "cp") return {identities::cp_record(s.data(), s.cfg().brute_cap)};
  if (suite == "ap-chain") return identities::ap_second_moment_check(s.data());
  if (suite == "stated") return suite_stated(s);
  if (suite == "schoof") return identities::schoof_records(s.field(), s.table(), s.cfg().enumeration_cap);
  if (suite == "counting-lemma") return {identities::counting_lemma_check(s.field(), s.table())};
  if (suite == "census") return identities::torsion_census_check(s.field(), s.table(), s.traces());
  if (suite == "torsion") {
    return identities::torsion_structure_records(s.field(), s.traces(), s.cfg().enumeration_cap);
  }
  if (suite == "gk") return suite_gk(s);
  if (suite == "hasse-davenport") return suite_hasse_davenport(s);
  if (suite == "gamma") return suite_gamma(s);
  if (suite == "greene") return suite_greene(s);
  if (suite == "g3") return suite_g3(s);
  if (suite == "g9") return suite_g9(s);
  if (suite == "backbone") return suite_backbone(s);
  throw DomainError("unknown suite " + suite);
}

bool is_class_number_suite(const std::string& suite) {
  return suite == "eichler" || suite == "cohen";
}

std::vector<VerificationRecord> class_number_records(const std::string& suite, const RunConfig& cfg,
                                                     const HurwitzTable& table) {
  std::vector<VerificationRecord> out;
  for (std::int64_t n = cfg.nmin | 1; n <= cfg.nmax; n += 2) {
    const auto un = static_cast<std::uint32_t>(n);
    try {
      if (suite == "eichler") {
        out.push_back(exact_record(un, "eichler", classnumber::eichler_lhs(table, n).to_string(),
                                   classnumber::eichler_rhs(n).to_string()));
      } else {
        const Rational c = classnumber::cohen_coefficient(table, n);
        VerificationRecord r = ratio_record(un, "cohen", c.to_string(),
                                            std::abs(c.to_double()) / std::pow(double(n), 1.5));
        r.note = "threshold=" + format_ratio(cfg.thresholds.cohen);
        out.push_back(r);
      }
    } catch (const std::exception& e) {
      out.push_back(error_record(un, suite, e));
    }
  }
  return out;
}

std::uint32_t table_bound(const RunConfig& cfg, bool class_number_suites) {
  std::uint64_t b = 4ull * (cfg.p ? *cfg.p : cfg.pmax) + 16;
  if (class_number_suites) b = std::max<std::uint64_t>(b, cfg.nmax + 1);
  return static_cast<std::uint32_t>(b);
}

HurwitzTable obtain_table(std::uint32_t bound, const RunConfig& cfg) {
  const auto dir = cfg.cache_dir.empty() ? classnumber::cache_dir() : cfg.cache_dir;
  try {
    return classnumber::load_or_build(bound, dir);
  } catch (const std::exception& e) {
    std::cerr << "ntlab: cache unavailable (" << e.what() << "), building in memory\n";
    return HurwitzTable::build(bound);
  }
}

void set_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
}

// Runs fn(p) for every prime in parallel and concatenates the results in prime order.
template <class Fn>
std::vector<VerificationRecord> over_primes(const std::vector<std::uint32_t>& primes, Fn fn) {
  std::vector<std::vector<VerificationRecord>> per(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < primes.size(); ++i) per[i] = fn(primes[i]);
  std::vector<VerificationRecord> out;
  for (auto& v : per) append(out, std::move(v));
  return out;
}

void emit(const RunConfig& cfg, std::ostream& out, std::vector<VerificationRecord> records) {
  sort_records(records);
  if (cfg.out == "json") {
    write_json(out, records);
  } else {
    write_csv(out, records);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "moments", "s4-triroute", "cp",    "ap-chain",        "schoof", "counting-lemma",
      "census",  "torsion",     "gk",    "hasse-davenport", "gamma",  "greene",
      "g3",      "g9",          "backbone", "eichler",      "cohen",  "stated"};
  return names;
}

bool suite_applies(const std::string& suite, std::uint32_t p, const RunConfig& cfg) {
  if (!is_prime(p) || p < 5) return false;
  if (suite == "schoof") return p <= cfg.enumeration_cap;
  if (suite == "gk" || suite == "hasse-davenport" || suite == "gamma" || suite == "greene") {
    return p <= cfg.padic_cap;
  }
  if (suite == "g9") return p % 3 == 2 && p <= cfg.padic_cap;
  if (p <= 5) return false;
  if (suite == "cp") return p <= cfg.brute_cap;
  if (suite == "counting-lemma") return p % 4 == 1;
  if (suite == "g3") return p % 3 == 1 && p <= cfg.padic_cap;
  if (suite == "backbone") return p <= cfg.padic_cap;
  return true;
}

std::vector<std::uint32_t> primes_for(const RunConfig& cfg) {
  if (cfg.p) {
    if (!is_prime(*cfg.p)) throw DomainError(str(*cfg.p) + " is not prime");
    return {*cfg.p};
  }
  if (cfg.pmin > cfg.pmax) throw DomainError("pmin exceeds pmax");
  return primes_in_range(cfg.pmin, cfg.pmax);
}

std::vector<VerificationRecord> verify_records(const RunConfig& cfg) {
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites.clear();
    for (const auto& s : suite_names()) {
      if (s != "stated") suites.push_back(s);
    }
  }
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw DomainError("unknown suite " + s);
    }
  }
  const bool cn = std::any_of(suites.begin(), suites.end(), is_class_number_suite);
  const bool per_prime = std::any_of(suites.begin(), suites.end(),
                                     [](const std::string& s) { return !is_class_number_suite(s); });
  const HurwitzTable table = obtain_table(table_bound(cfg, cn), cfg);
  set_workers(cfg);

  std::vector<VerificationRecord> out;
  for (const auto& s : suites) {
    if (is_class_number_suite(s)) append(out, class_number_records(s, cfg, table));
  }
  if (per_prime) {
    append(out, over_primes(primes_for(cfg), [&](std::uint32_t p) {
             std::vector<VerificationRecord> recs;
             PrimeScope scope(p, cfg, table);
             for (const auto& s : suites) {
               if (is_class_number_suite(s) || !suite_applies(s, p, cfg)) continue;
               const auto t0 = Clock::now();
               std::vector<VerificationRecord> got;
               try {
                 got = run_prime_suite(s, scope);
               } catch (const std::exception& e) {
                 got = {error_record(p, s, e)};
               }
               if (cfg.timings) {
                 const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                 for (auto& r : got) r.elapsed_ms = ms;
               }
               append(recs, std::move(got));
             }
             return recs;
           }));
  }
  sort_records(out);
  return out;
}

std::vector<VerificationRecord> sweep_records(const RunConfig& cfg) {
  const std::string& claim = cfg.claim;
  const auto& tags = identities::claim_tags();
  set_workers(cfg);
  if (std::find(tags.begin(), tags.end(), claim) != tags.end()) {
    const HurwitzTable table = obtain_table(table_bound(cfg, false), cfg);
    const double threshold = identities::threshold_for(cfg.thresholds, claim);
    const bool needs_s4 = claim == "thm1.1" || claim == "cor1.2";
    return over_primes(primes_for(cfg), [&](std::uint32_t p) -> std::vector<VerificationRecord> {
      if (!identities::claim_applies(claim, p)) return {};
      try {
        std::int64_t s4 = 0;
        if (needs_s4) {
          const FieldCtx f(p);
          s4 = kloosterman::twisted_moment(f, kloosterman::kloosterman_table_serial(f), 4,
                                           f.quadratic()).value;
        }
        VerificationRecord r = identities::asymptotic_record(claim, p, table, s4);
        r.note = "threshold=" + format_ratio(threshold);
        return {r};
      } catch (const std::exception& e) {
        return {error_record(p, claim, e)};
      }
    });
  }
  if (claim == "thm6.2" || claim == "thm6.3") {
    const unsigned residue = claim == "thm6.2" ? 1 : 2;
    return over_primes(primes_for(cfg), [&](std::uint32_t p) -> std::vector<VerificationRecord> {
      if (p <= 5 || p % 3 != residue) return {};
      try {
        const auto t = hypergeom::trend_point(p, cfg.K);
        VerificationRecord r = ratio_record(p, claim, str(t.I), t.abs_t);
        r.note = claim == "thm6.2" ? "ratio is |T(p)|" : "ratio is |T(p)|/p^2";
        return {r};
      } catch (const std::exception& e) {
        return {error_record(p, claim, e)};
      }
    });
  }
  throw DomainError("unknown claim " + claim);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto records = verify_records(cfg);
  emit(cfg, out, records);
  return all_exact_match(records) ? 0 : 1;
}

namespace {

int cmd_angles(const RunConfig& cfg, std::ostream& out) {
  const std::uint32_t p = cfg.p ? *cfg.p : cfg.pmax;
  if (!is_prime(p)) throw DomainError(str(p) + " is not prime");
  const FieldCtx f(p);
  const auto hist = kloosterman::angle_histogram(f, cfg.bins);
  const double pi = std::acos(-1.0);
  std::uint64_t total = 0;
  for (auto c : hist) total += c;
  out << kSchemaLine << "\n";
  out << "bin,theta_lo,theta_hi,count,semicircle\n";
  char buf[160];
  for (unsigned b = 0; b < cfg.bins; ++b) {
    const double lo = pi * b / cfg.bins, hi = pi * (b + 1) / cfg.bins;
    // (2/pi) integral of sin^2 over [lo, hi]
    const double mass = ((hi - lo) - (std::sin(2 * hi) - std::sin(2 * lo)) / 2) / pi;
    std::snprintf(buf, sizeof buf, "%u,%.6f,%.6f,%llu,%.6f\n", b, lo, hi,
                  static_cast<unsigned long long>(hist[b]), mass * double(total));
    out << buf;
  }
  out << "# chi2=" << format_ratio(kloosterman::semicircle_chi2(hist)) << "\n";
  return 0;
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.claim == "angles") return cmd_angles(cfg, out);
  const auto records = sweep_records(cfg);
  emit(cfg, out, records);
  bool ok = true;
  const auto& tags = identities::claim_tags();
  const bool bounded = std::find(tags.begin(), tags.end(), cfg.claim) != tags.end();
  double worst = 0.0;
  std::uint32_t worst_p = 0;
  for (const auto& r : records) {
    if (r.lhs == "error") ok = false;
    if (bounded && r.ratio && *r.ratio > worst) {
      worst = *r.ratio;
      worst_p = r.p;
    }
  }
  if (bounded) {
    const double threshold = identities::threshold_for(cfg.thresholds, cfg.claim);
    if (worst > threshold) ok = false;
    if (cfg.out == "csv") {
      out << "# threshold=" << format_ratio(threshold) << " max=" << format_ratio(worst)
          << " at p=" << worst_p << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_cache(const RunConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.cache_dir.empty() ? classnumber::cache_dir() : cfg.cache_dir;
  if (cfg.action == "build") {
    const HurwitzTable t = classnumber::load_or_build(cfg.bound, dir);
    out << "hurwitz.csv: bound " << t.bound << ", " << t.bound + 1 << " rows in " << dir.string()
        << "\n";
    if (cfg.ap_tables) {
      const auto primes = primes_for(cfg);
      for (std::uint32_t p : primes) {
        if (p < 5) continue;
        const FieldCtx f(p);
        const auto tr = ecurve::trace_table(f);
        const fs::path file = dir / ("ap_" + str(p) + ".csv");
        std::ofstream o(file);
        if (!o) throw Error("cannot write " + file.string());
        o << kSchemaLine << "\nlambda,ap\n";
        for (std::uint32_t l = 2; l < p; ++l) o << l << "," << tr[l] << "\n";
      }
      out << "a_p tables: " << primes.size() << " primes\n";
    }
    return 0;
  }
  if (cfg.action == "inspect") {
    const fs::path h = dir / "hurwitz.csv";
    if (fs::exists(h)) {
      const HurwitzTable t = classnumber::read_csv(h);
      out << h.string() << ": bound " << t.bound << ", " << t.bound + 1 << " rows\n";
    } else {
      out << h.string() << ": missing\n";
    }
    std::set<std::uint32_t> ap;
    if (fs::exists(dir)) {
      for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (name.rfind("ap_", 0) == 0 && e.path().extension() == ".csv") {
          ap.insert(static_cast<std::uint32_t>(std::stoul(name.substr(3))));
        }
      }
    }
    out << "a_p tables: " << ap.size();
    if (!ap.empty()) out << " (p from " << *ap.begin() << " to " << *ap.rbegin() << ")";
    out << "\n";
    return 0;
  }
  throw DomainError("cache action must be build or inspect");
}

int cmd_gfun(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.p) throw DomainError("gfun needs --p");
  const PadicCtx ctx(*cfg.p, cfg.K);
  const FieldCtx& f = ctx.field();
  const std::uint32_t l = cfg.lambda % *cfg.p;
  hypergeom::GSpec spec;
  std::uint32_t t = l;
  if (cfg.family == "3g3") {
    if (l == 0) throw DomainError("3G3(lambda) needs lambda != 0");
    spec = hypergeom::spec_3g3();
    t = f.mul(f.sub(l, 1), f.inv(l));
  } else if (cfg.family == "9g9") {
    spec = hypergeom::spec_9g9();
  } else {
    throw DomainError("family must be 3g3 or 9g9");
  }
  const auto v = hypergeom::ngn_evaluate(ctx, spec, t);
  if (cfg.out == "json") {
    nlohmann::ordered_json j;
    j["p"] = *cfg.p;
    j["family"] = cfg.family;
    j["lambda"] = l;
    j["t"] = t;
    j["K"] = cfg.K;
    j["value"] = v.to_string(ctx);
    out << j.dump() << "\n";
  } else {
    out << kSchemaLine << "\np,family,lambda,t,K,value\n"
        << *cfg.p << "," << cfg.family << "," << l << "," << t << "," << cfg.K << ","
        << v.to_string(ctx) << "\n";
  }
  return 0;
}

void print_route_registry(std::ostream& out) {
  for (const auto& e : identities::route_registry()) {
    out << e.identity << "\n";
    for (const auto& r : e.routes) out << "  - " << r << "\n";
  }
  out << "suites:";
  for (const auto& s : suite_names()) out << " " << s;
  out << "\n";
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read config " + file.string());
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(file.string() + ":" + str(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

int run(int argc, char** argv) {
  CLI::App app{"ntlab: Kloosterman moment verification laboratory"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string suites, config_path, output;
  bool list = false;
  std::uint32_t single_p = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--pmin", cfg.pmin, "smallest prime");
    sub->add_option("--pmax", cfg.pmax, "largest prime");
    sub->add_option("--p", single_p, "a single prime");
    sub->add_option("--K", cfg.K, "p-adic precision")->check(CLI::Range(1u, 40u));
    sub->add_option("--workers", cfg.workers, "worker threads (0 = OpenMP default)");
    sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default $NTLAB_CACHE)");
    sub->add_option("--out", cfg.out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "write to this file instead of stdout");
    sub->add_option("--config", config_path, "key=value file; flags win");
  };

  auto* verify = app.add_subcommand("verify", "run identity suites");
  common(verify);
  verify->add_option("--suite", suites, "comma-separated suites, or all");
  verify->add_option("--nmin", cfg.nmin, "smallest n for eichler/cohen");
  verify->add_option("--nmax", cfg.nmax, "largest n for eichler/cohen");
  verify->add_option("--brute-cap", cfg.brute_cap, "largest p for brute-force counts");
  verify->add_option("--enum-cap", cfg.enumeration_cap, "largest p for curve enumeration");
  verify->add_option("--padic-cap", cfg.padic_cap, "largest p for p-adic suites");
  verify->add_option("--seed", cfg.seed, "seed for sampled Gauss-sum pairs");
  verify->add_flag("--timings", cfg.timings, "fill the elapsed_ms column");
  verify->add_flag("--list", list, "print identities, their routes and the suites");

  auto* sweep = app.add_subcommand("sweep", "bounded-ratio sweeps");
  common(sweep);
  sweep->add_option("--claim", cfg.claim,
                    "thm1.1, cor1.2, prop4.4, prop4.6, prop4.8, prop4.9, thm6.2, thm6.3 or angles")
      ->required();
  sweep->add_option("--bins", cfg.bins, "histogram bins for angles")->check(CLI::Range(1u, 10000u));
  sweep->add_option("--threshold-thm1.1", cfg.thresholds.thm11);
  sweep->add_option("--threshold-cor1.2", cfg.thresholds.cor12);
  sweep->add_option("--threshold-prop4.4", cfg.thresholds.prop44);
  sweep->add_option("--threshold-prop4.6", cfg.thresholds.prop46);
  sweep->add_option("--threshold-prop4.8", cfg.thresholds.prop48);
  sweep->add_option("--threshold-prop4.9", cfg.thresholds.prop49);

  auto* cache = app.add_subcommand("cache", "build or inspect the class-number cache");
  common(cache);
  cache->add_option("action", cfg.action, "build or inspect")
      ->required()
      ->check(CLI::IsMember({"build", "inspect"}));
  cache->add_option("--bound", cfg.bound, "largest discriminant");
  cache->add_flag("--ap", cfg.ap_tables, "also write ap_<p>.csv for primes in range");

  auto* gfun = app.add_subcommand("gfun", "evaluate 3G3 or 9G9 at one point");
  common(gfun);
  gfun->add_option("--family", cfg.family, "3g3 or 9g9")->check(CLI::IsMember({"3g3", "9g9"}));
  gfun->add_option("--lambda", cfg.lambda, "the point lambda");

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      for (const auto& [key, value] : read_config_file(config_path)) {
        CLI::Option* opt = nullptr;
        try {
          opt = sub->get_option("--" + key);
        } catch (const CLI::OptionNotFound&) {
          throw CLI::ValidationError("config", "unknown key " + key);
        }
        if (opt->count() == 0) {
          opt->add_result(value);
          opt->run_callback();
        }
      }
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (single_p != 0) cfg.p = single_p;
  cfg.suites = split_list(suites);

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "ntlab: cannot write " << output << "\n";
      return 2;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;

  try {
    if (verify->parsed()) {
      if (list) {
        print_route_registry(out);
        return 0;
      }
      return cmd_verify(cfg, out);
    }
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    if (cache->parsed()) return cmd_cache(cfg, out);
    if (gfun->parsed()) return cmd_gfun(cfg, out);
  } catch (const std::exception& e) {
    std::cerr << "ntlab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ntlab::cli

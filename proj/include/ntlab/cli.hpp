#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ntlab/identities.hpp"
#include "ntlab/record.hpp"

namespace ntlab::cli {

struct RunConfig {
  std::uint32_t pmin = 7;
  std::uint32_t pmax = 97;
  std::optional<std::uint32_t> p;  // single prime, overrides the range
  std::vector<std::string> suites;
  std::string claim;
  unsigned K = 6;
  std::uint32_t brute_cap = 100;
  std::uint32_t enumeration_cap = 200;
  std::uint32_t padic_cap = 200;
  std::int64_t nmin = 1;
  std::int64_t nmax = 999;
  unsigned bins = 20;
  std::uint64_t seed = 1;
  std::filesystem::path cache_dir;
  std::string out = "csv";
  int workers = 0;  // 0: OpenMP default
  bool timings = false;
  identities::Thresholds thresholds;

  // cache
  std::string action;
  std::uint32_t bound = 20000;
  bool ap_tables = false;

  // gfun
  std::string family = "3g3";
  std::uint32_t lambda = 2;
};

const std::vector<std::string>& suite_names();
bool suite_applies(const std::string& suite, std::uint32_t p, const RunConfig& cfg);
std::vector<std::uint32_t> primes_for(const RunConfig& cfg);

std::vector<VerificationRecord> verify_records(const RunConfig& cfg);
std::vector<VerificationRecord> sweep_records(const RunConfig& cfg);

// Each returns the process exit status.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_cache(const RunConfig& cfg, std::ostream& out);
int cmd_gfun(const RunConfig& cfg, std::ostream& out);
void print_route_registry(std::ostream& out);

// key=value lines; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& file);

int run(int argc, char** argv);

}  // namespace ntlab::cli

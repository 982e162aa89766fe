#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ntlab {

// One (prime, identity) outcome. Exact identities set `exact` and carry both
// sides as strings (integers, rationals or residues); asymptotic records
// carry a normalized ratio instead and never count as failures.
struct VerificationRecord {
  std::uint32_t p = 0;
  std::string name;
  std::string lhs;
  std::string rhs;
  bool exact = true;
  bool match = false;
  std::optional<double> ratio;
  std::optional<double> elapsed_ms;
  std::string note;
};

VerificationRecord exact_record(std::uint32_t p, std::string name, std::string lhs,
                                std::string rhs);
VerificationRecord ratio_record(std::uint32_t p, std::string name, std::string value,
                                double ratio);

// Sort by (p, name), stable for equal keys.
void sort_records(std::vector<VerificationRecord>& records);
bool all_exact_match(const std::vector<VerificationRecord>& records);

inline constexpr const char* kSchemaLine = "# ntlab-schema v1";

void write_csv(std::ostream& out, const std::vector<VerificationRecord>& records);
void write_json(std::ostream& out, const std::vector<VerificationRecord>& records);

std::string format_ratio(double r);

}  // namespace ntlab

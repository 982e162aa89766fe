#include "ntlab/record.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

namespace ntlab {

VerificationRecord exact_record(std::uint32_t p, std::string name, std::string lhs,
                                std::string rhs) {
  VerificationRecord r;
  r.p = p;
  r.name = std::move(name);
  r.match = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

VerificationRecord ratio_record(std::uint32_t p, std::string name, std::string value,
                                double ratio) {
  VerificationRecord r;
  r.p = p;
  r.name = std::move(name);
  r.lhs = std::move(value);
  r.exact = false;
  r.match = true;
  r.ratio = ratio;
  return r;
}

void sort_records(std::vector<VerificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.p != b.p ? a.p < b.p : a.name < b.name;
  });
}

bool all_exact_match(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const auto& r) { return !r.exact || r.match; });
}

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<VerificationRecord>& records) {
  out << kSchemaLine << '\n' << "p,name,lhs,rhs,match,ratio,elapsed_ms\n";
  for (const auto& r : records) {
    out << r.p << ',' << csv_field(r.name) << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs)
        << ',' << (r.exact ? (r.match ? "true" : "false") : "") << ','
        << (r.ratio ? format_ratio(*r.ratio) : "") << ','
        << (r.elapsed_ms ? format_ratio(*r.elapsed_ms) : "") << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<VerificationRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["match"] = r.exact ? nlohmann::ordered_json(r.match) : nlohmann::ordered_json(nullptr);
    j["ratio"] = r.ratio ? nlohmann::ordered_json(*r.ratio) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] =
        r.elapsed_ms ? nlohmann::ordered_json(*r.elapsed_ms) : nlohmann::ordered_json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace ntlab

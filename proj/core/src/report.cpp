#include "qvir/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qvir {

std::string ReportEntry::params_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out << ",";
    first = false;
    out << k << "=" << v;
  }
  return out.str();
}

bool Report::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.pass; });
}

void Report::merge(Report other) {
  for (auto& e : other.entries) entries.push_back(std::move(e));
}

void Report::sort_entries() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     if (a.identity != b.identity) return a.identity < b.identity;
                     return a.params_string() < b.params_string();
                   });
}

std::string Report::to_json_string(bool include_timing) const {
  nlohmann::json j;
  j["tool_version"] = tool_version;
  j["config"] = config;
  j["status"] = all_pass() ? "pass" : "fail";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["suite"] = e.suite;
    je["identity"] = e.identity;
    je["params"] = e.params;
    je["status"] = e.pass ? "pass" : "fail";
    if (e.witness) je["witness"] = *e.witness;
    if (include_timing) je["millis"] = e.millis;
    arr.push_back(std::move(je));
  }
  j["results"] = std::move(arr);
  return j.dump(2);
}

std::string Report::to_markdown() const {
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "- tool version: " << tool_version << "\n";
  for (const auto& [k, v] : config) out << "- " << k << ": " << v << "\n";
  out << "\n| suite | identity | params | status | ms |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    out << "| " << e.suite << " | " << e.identity << " | " << e.params_string()
        << " | " << (e.pass ? "pass" : "FAIL") << " | " << e.millis << " |\n";
    if (e.witness) out << "|  |  | witness: " << *e.witness << " |  |  |\n";
  }
  out << "\noverall: " << (all_pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

ReportEntry run_check(const std::string& suite, const std::string& identity,
                      std::map<std::string, std::string> params,
                      const std::function<bool(std::string& witness)>& body) {
  ReportEntry e;
  e.suite = suite;
  e.identity = identity;
  e.params = std::move(params);
  auto start = std::chrono::steady_clock::now();
  std::string witness;
  try {
    e.pass = body(witness);
  } catch (const std::exception& ex) {
    e.pass = false;
    witness = std::string("exception: ") + ex.what();
  }
  if (!witness.empty()) e.witness = witness;
  auto stop = std::chrono::steady_clock::now();
  e.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return e;
}

}  // namespace qvir

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qvir {

// One verified identity instance.
struct ReportEntry {
  std::string suite;
  std::string identity;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::optional<std::string> witness;  // a differing value, when pass == false
  std::int64_t millis = 0;

  std::string params_string() const;
};

struct Report {
  std::vector<ReportEntry> entries;
  std::string tool_version;
  std::map<std::string, std::string> config;

  bool all_pass() const;
  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  void merge(Report other);
  // Deterministic order: suite, then identity, then params.
  void sort_entries();

  std::string to_json_string(bool include_timing = true) const;
  std::string to_markdown() const;
};

// Builds an entry by timing `body`, which returns pass/fail and may set a
// witness string through its argument.
ReportEntry run_check(const std::string& suite, const std::string& identity,
                      std::map<std::string, std::string> params,
                      const std::function<bool(std::string& witness)>& body);

}  // namespace qvir

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qvir/symfunc.hpp"

namespace qvir {

// On-disk store for computed basis elements. One JSON file per record, named
// by schema version, kind and partition. Writes go through a temporary file
// and an atomic rename, so concurrent readers only ever see complete records;
// unreadable records are dropped with a warning and recomputed.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir, bool read_only = false);

  static constexpr int kSchemaVersion = 1;

  std::optional<SymFunc> get(const std::string& kind, const Partition& la) const;
  bool put(const std::string& kind, const Partition& la, const SymFunc& value);
  void clear();

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path record_path(const std::string& kind,
                                    const Partition& la) const;
  std::filesystem::path dir_;
  bool read_only_;
};

}  // namespace qvir

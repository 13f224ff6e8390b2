#include "qvir/cache.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qvir {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path dir, bool read_only)
    : dir_(std::move(dir)), read_only_(read_only) {
  if (!read_only_) fs::create_directories(dir_);
}

fs::path DiskCache::record_path(const std::string& kind,
                                const Partition& la) const {
  std::ostringstream name;
  name << "v" << kSchemaVersion << "_" << kind;
  for (int p : la.parts()) name << "_" << p;
  name << ".json";
  return dir_ / name.str();
}

std::optional<SymFunc> DiskCache::get(const std::string& kind,
                                      const Partition& la) const {
  fs::path path = record_path(kind, la);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema").get<int>() != kSchemaVersion) return std::nullopt;
    if (j.at("kind").get<std::string>() != kind) return std::nullopt;
    if (Partition(j.at("partition").get<std::vector<int>>()) != la)
      return std::nullopt;
    return SymFunc::from_json_string(j.at("value").dump());
  } catch (const std::exception& ex) {
    std::cerr << "warning: dropping unreadable cache record " << path << ": "
              << ex.what() << "\n";
    return std::nullopt;
  }
}

bool DiskCache::put(const std::string& kind, const Partition& la,
                    const SymFunc& value) {
  if (read_only_) return false;
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  j["partition"] = la.parts();
  j["value"] = nlohmann::json::parse(value.to_json_string());

  static std::mt19937_64 rng(std::random_device{}());
  fs::path tmp = dir_ / (".tmp_" + std::to_string(rng()) + ".json");
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << j.dump();
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, record_path(kind, la), ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

void DiskCache::clear() {
  if (read_only_) return;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.path().extension() == ".json") fs::remove(entry.path(), ec);
  }
}

}  // namespace qvir

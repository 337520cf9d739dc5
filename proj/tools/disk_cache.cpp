#include "disk_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>

#include "sschur/error.hpp"

namespace sschur::cli {
namespace {

constexpr const char* kFormatTag = "superschur-block-v1";

}  // namespace

DiskCache DiskCache::from_environment() {
  DiskCache cache;
  const char* dir = std::getenv("SUPERSCHUR_CACHE_DIR");
  if (dir && *dir) cache.dir_ = std::filesystem::path(dir);
  return cache;
}

std::filesystem::path DiskCache::file_for(SchurType t, Bidegree d) const {
  return *dir_ / (to_string(t) + "_" + std::to_string(d.total) + "_" + std::to_string(d.fermionic) + ".json");
}

bool DiskCache::load(SchurTable& table, SchurType t, Bidegree d) const {
  if (!enabled()) return false;
  std::ifstream in(file_for(t, d));
  if (!in) return false;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("format", "") != kFormatTag || j.at("type").get<std::string>() != to_string(t) ||
        j.at("bidegree") != nlohmann::json::array({d.total, d.fermionic}))
      return false;
    SchurTable::Block block;
    for (const auto& entry : j.at("entries"))
      block.emplace(entry.at("superpartition").get<SuperPartition>(), polynomial_from_json(entry.at("polynomial")));
    table.insert_block(t, d, block);
    return table.has_block(t, d);
  } catch (const std::exception&) {
    // A damaged file is recomputed and overwritten.
    return false;
  }
}

void DiskCache::store(SchurTable& table, SchurType t, Bidegree d) const {
  if (!enabled()) return;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [sp, f] : table.block(t, d))
    entries.push_back({{"superpartition", sp}, {"polynomial", to_json(f)}});
  const nlohmann::json j = {
      {"format", kFormatTag}, {"type", to_string(t)}, {"bidegree", {d.total, d.fermionic}}, {"entries", entries}};

  std::filesystem::create_directories(*dir_);
  const auto target = file_for(t, d);
  auto temp = target;
  temp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(temp);
    out << j.dump() << '\n';
    if (!out) throw Error("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

void DiskCache::ensure(SchurTable& table, SchurType t, Bidegree d) const {
  if (table.has_block(t, d) || load(table, t, d)) return;
  table.populate_block(t, d);
  store(table, t, d);
}

}  // namespace sschur::cli

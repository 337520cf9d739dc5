#pragma once

#include <filesystem>
#include <optional>

#include "sschur/schur_table.hpp"

namespace sschur::cli {

// On-disk copy of SchurTable blocks, one JSON file per (type, bidegree).
// Files carry a format tag; files with another tag are ignored.
class DiskCache {
 public:
  // Reads SUPERSCHUR_CACHE_DIR; disabled when unset or empty.
  static DiskCache from_environment();

  bool enabled() const { return dir_.has_value(); }
  // Seeds the table from disk; true if a block was loaded.
  bool load(SchurTable& table, SchurType t, Bidegree d) const;
  // Writes the (populated) block with an atomic rename.
  void store(SchurTable& table, SchurType t, Bidegree d) const;
  // load, or populate and store.
  void ensure(SchurTable& table, SchurType t, Bidegree d) const;

 private:
  std::filesystem::path file_for(SchurType t, Bidegree d) const;
  std::optional<std::filesystem::path> dir_;
};

}  // namespace sschur::cli

#pragma once

#include <string>

namespace cohomlab {

/// On-disk character-table cache: {"version":1,"tables":{"5":[[...],...]}}.
/// Tables with a foreign version field are ignored and recomputed.
inline constexpr int kCacheFormatVersion = 1;

/// Seed the in-process table cache from a JSON file. Missing or unreadable
/// files are ignored; returns true when anything was loaded.
bool load_table_cache(const std::string& path);

/// Write every table currently needed for m in [1, up_to_m] to the file.
void save_table_cache(const std::string& path, int up_to_m);

}  // namespace cohomlab

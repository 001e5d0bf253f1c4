#pragma once

#include <string>
#include <vector>

namespace hankel {

struct CacheReport {
  long loaded = 0;
  long malformed = 0;
  long evicted = 0;
  std::vector<std::string> notes;
};

// Zeta cache file: one record per line, `s,digits,significand,exponent`,
// sorted by (s, digits). An entry is usable for any request needing at most
// `digits` digits.
CacheReport cache_load(const std::string& path);  // seeds the in-memory store
void cache_save(const std::string& path);         // snapshots the store

// Recompute every record in the file, evict mismatches from the store and
// rewrite the file without them.
CacheReport cache_validate_and_repair(const std::string& path);

}  // namespace hankel

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "genuscount/count_table.hpp"

namespace genuscount {

// JSON cache of count tables keyed by (n, constraint, mode); big integers are
// stored as decimal strings, so the files are portable.

// GENUSCOUNT_CACHE env var, else empty (caching disabled unless a directory
// is passed explicitly).
std::filesystem::path default_cache_dir();

std::string cache_key(int n, const Constraint& constraint, TableMode mode);

std::optional<GenusCountTable> cache_load(const std::filesystem::path& dir,
                                          const std::string& key);
void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const GenusCountTable& table);

}  // namespace genuscount

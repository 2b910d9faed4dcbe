#include "genuscount/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace genuscount {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("GENUSCOUNT_CACHE")) {
    if (*env) return std::filesystem::path(env);
  }
  return {};
}

std::string cache_key(int n, const Constraint& constraint, TableMode mode) {
  std::ostringstream out;
  out << "count_n" << n << "_" << constraint.key() << "_" << table_mode_name(mode);
  return out.str();
}

std::optional<GenusCountTable> cache_load(const std::filesystem::path& dir,
                                          const std::string& key) {
  if (dir.empty()) return std::nullopt;
  const std::filesystem::path file = dir / (key + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return GenusCountTable::from_json(buffer.str());
  } catch (const std::exception&) {
    return std::nullopt;  // treat unreadable cache entries as missing
  }
}

void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const GenusCountTable& table) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  const std::filesystem::path file = dir / (key + ".json");
  const std::filesystem::path tmp = dir / (key + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << table.to_json() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace genuscount

#include "genuscount/partition_type.hpp"

#include <sstream>
#include <stdexcept>

namespace genuscount {

PartitionType::PartitionType(std::map<int, int> multiplicities) {
  for (const auto& [size, count] : multiplicities) {
    if (size < 1) throw std::invalid_argument("PartitionType: block size must be >= 1");
    if (count < 0) throw std::invalid_argument("PartitionType: negative multiplicity");
    if (count > 0) mult_[size] = count;
  }
}

PartitionType PartitionType::from_parts(const std::vector<int>& sizes) {
  std::map<int, int> m;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("PartitionType: block size must be >= 1");
    ++m[s];
  }
  return PartitionType(std::move(m));
}

PartitionType PartitionType::parse(const std::string& key) {
  std::map<int, int> m;
  std::istringstream in(key);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("PartitionType: empty item in '" + key + "'");
    auto caret = item.find('^');
    int size = 0, count = 1;
    try {
      if (caret == std::string::npos) {
        size = std::stoi(item);
      } else {
        size = std::stoi(item.substr(0, caret));
        count = std::stoi(item.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("PartitionType: cannot parse '" + key + "'");
    }
    if (size < 1 || count < 1) throw std::invalid_argument("PartitionType: bad entry in '" + key + "'");
    m[size] += count;
  }
  if (m.empty()) throw std::invalid_argument("PartitionType: empty key");
  return PartitionType(std::move(m));
}

int PartitionType::multiplicity(int block_size) const {
  auto it = mult_.find(block_size);
  return it == mult_.end() ? 0 : it->second;
}

int PartitionType::weight() const {
  int n = 0;
  for (const auto& [size, count] : mult_) n += size * count;
  return n;
}

int PartitionType::parts() const {
  int k = 0;
  for (const auto& [size, count] : mult_) k += count;
  return k;
}

int PartitionType::min_part() const { return mult_.empty() ? 0 : mult_.begin()->first; }

int PartitionType::max_part() const { return mult_.empty() ? 0 : mult_.rbegin()->first; }

std::vector<int> PartitionType::part_list() const {
  std::vector<int> parts;
  for (const auto& [size, count] : mult_) {
    for (int i = 0; i < count; ++i) parts.push_back(size);
  }
  return parts;
}

std::string PartitionType::key() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [size, count] : mult_) {
    if (!first) out << ',';
    first = false;
    out << size;
    if (count > 1) out << '^' << count;
  }
  return out.str();
}

PartitionType PartitionType::without_singletons(int r) const {
  if (r > multiplicity(1)) throw std::invalid_argument("without_singletons: not enough singletons");
  std::map<int, int> m = mult_;
  if (r > 0) {
    m[1] -= r;
    if (m[1] == 0) m.erase(1);
  }
  return PartitionType(std::move(m));
}

bool PartitionType::operator<(const PartitionType& other) const {
  int pa = parts(), pb = other.parts();
  if (pa != pb) return pa < pb;
  return part_list() < other.part_list();
}

}  // namespace genuscount

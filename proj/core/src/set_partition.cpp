#include "genuscount/set_partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genuscount {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1) throw std::invalid_argument("SetPartition: n must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("SetPartition: empty block");
    for (std::size_t i = 0; i < block.size(); ++i) {
      int x = block[i];
      if (x < 1 || x > n_) throw std::invalid_argument("SetPartition: element out of range");
      if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("SetPartition: duplicate element");
      seen[static_cast<std::size_t>(x)] = 1;
      if (i > 0 && block[i - 1] >= x)
        throw std::invalid_argument("SetPartition: block not strictly increasing");
    }
  }
  for (int x = 1; x <= n_; ++x) {
    if (!seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("SetPartition: element missing from all blocks");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  block_index_.assign(static_cast<std::size_t>(n_) + 1, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int x : blocks_[b]) block_index_[static_cast<std::size_t>(x)] = static_cast<int>(b);
  }
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  if (rgs.empty()) throw std::invalid_argument("from_rgs: empty string");
  int max_seen = 0;
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    int b = rgs[i];
    if (b < 1 || b > max_seen + 1) throw std::invalid_argument("from_rgs: not a restricted growth string");
    if (b == max_seen + 1) {
      blocks.emplace_back();
      max_seen = b;
    }
    blocks[static_cast<std::size_t>(b - 1)].push_back(static_cast<int>(i) + 1);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

SetPartition SetPartition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::istringstream in(text);
  std::string block_text;
  int n = 0;
  while (std::getline(in, block_text, '|')) {
    std::vector<int> block;
    std::istringstream bin(block_text);
    std::string item;
    while (std::getline(bin, item, ',')) {
      try {
        block.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("SetPartition: cannot parse '" + text + "'");
      }
      n = std::max(n, block.back());
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

int SetPartition::block_of(int x) const {
  if (x < 1 || x > n_) throw std::out_of_range("block_of: element out of range");
  return block_index_[static_cast<std::size_t>(x)];
}

PartitionType SetPartition::type() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_) sizes.push_back(static_cast<int>(block.size()));
  return PartitionType::from_parts(sizes);
}

std::vector<int> SetPartition::to_rgs() const {
  std::vector<int> rgs(static_cast<std::size_t>(n_));
  for (int x = 1; x <= n_; ++x) rgs[static_cast<std::size_t>(x - 1)] = block_of(x) + 1;
  return rgs;
}

std::string SetPartition::to_text() const {
  std::ostringstream out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out << '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out << ',';
      out << blocks_[b][i];
    }
  }
  return out.str();
}

}  // namespace genuscount

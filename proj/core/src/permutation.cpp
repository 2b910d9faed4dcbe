#include "genuscount/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace genuscount {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw std::invalid_argument("Permutation: empty image list");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int y : images_) {
    if (y < 1 || y > n) throw std::invalid_argument("Permutation: image out of range");
    if (seen[static_cast<std::size_t>(y)]) throw std::invalid_argument("Permutation: not a bijection");
    seen[static_cast<std::size_t>(y)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::full_cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<std::size_t>(x - 1)] = (x % n) + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("from_cycles: empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n) throw std::invalid_argument("from_cycles: element out of range");
      if (images[static_cast<std::size_t>(from - 1)] != 0)
        throw std::invalid_argument("from_cycles: overlapping cycles");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (images[static_cast<std::size_t>(x - 1)] == 0) images[static_cast<std::size_t>(x - 1)] = x;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 1; x <= n(); ++x) inv[static_cast<std::size_t>(apply(x) - 1)] = x;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n() != other.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> images(images_.size());
  for (int x = 1; x <= n(); ++x) images[static_cast<std::size_t>(x - 1)] = apply(other.apply(x));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> visited(static_cast<std::size_t>(n()) + 1, 0);
  for (int x = 1; x <= n(); ++x) {
    if (visited[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cycle;
    int y = x;
    while (!visited[static_cast<std::size_t>(y)]) {
      visited[static_cast<std::size_t>(y)] = 1;
      cycle.push_back(y);
      y = apply(y);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> visited(static_cast<std::size_t>(n()) + 1, 0);
  for (int x = 1; x <= n(); ++x) {
    if (visited[static_cast<std::size_t>(x)]) continue;
    ++count;
    int y = x;
    while (!visited[static_cast<std::size_t>(y)]) {
      visited[static_cast<std::size_t>(y)] = 1;
      y = apply(y);
    }
  }
  return count;
}

}  // namespace genuscount

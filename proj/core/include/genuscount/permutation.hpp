#pragma once

#include <vector>

namespace genuscount {

// A permutation of {1..n}, stored by images.  Cycle decomposition lists each
// cycle starting from its smallest element, cycles ordered by that element.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // images[x-1] = image of x

  static Permutation identity(int n);
  static Permutation full_cycle(int n);  // (1 2 ... n)
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  Permutation inverse() const;
  // Composition this∘other: x -> this(other(x)).
  Permutation compose(const Permutation& other) const;

  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace genuscount

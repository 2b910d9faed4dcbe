#include <doctest.h>

#include <algorithm>
#include <map>

#include "genuscount/enumerate.hpp"
#include "genuscount/genus.hpp"

using namespace genuscount;

namespace {

// Independent oracle: builds sigma∘tau^{-1} from scratch (images only, no
// Permutation helpers) and counts its cycles / fixed points.
struct ProductOracle {
  std::vector<int> images;  // 1-based

  explicit ProductOracle(const SetPartition& p) : images(static_cast<std::size_t>(p.n()) + 1) {
    const int n = p.n();
    std::vector<int> tau(static_cast<std::size_t>(n) + 1);
    for (const auto& block : p.blocks()) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        tau[static_cast<std::size_t>(block[i])] = block[(i + 1) % block.size()];
      }
    }
    std::vector<int> tau_inv(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) tau_inv[static_cast<std::size_t>(tau[static_cast<std::size_t>(x)])] = x;
    for (int x = 1; x <= n; ++x) {
      const int y = tau_inv[static_cast<std::size_t>(x)];
      images[static_cast<std::size_t>(x)] = (y % n) + 1;
    }
  }

  int cycles() const {
    const int n = static_cast<int>(images.size()) - 1;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int count = 0;
    for (int x = 1; x <= n; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      ++count;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = images[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
      }
    }
    return count;
  }
};

// Drops singleton blocks and relabels the surviving elements to 1..m,
// preserving order.
SetPartition without_singleton_blocks(const SetPartition& p) {
  std::vector<int> survivors;
  for (const auto& block : p.blocks()) {
    if (block.size() > 1) survivors.insert(survivors.end(), block.begin(), block.end());
  }
  std::sort(survivors.begin(), survivors.end());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < survivors.size(); ++i) relabel[survivors[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> blocks;
  for (const auto& block : p.blocks()) {
    if (block.size() <= 1) continue;
    std::vector<int> out;
    for (int x : block) out.push_back(relabel.at(x));
    blocks.push_back(std::move(out));
  }
  return SetPartition(static_cast<int>(survivors.size()), std::move(blocks));
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("canonical form and text round trip") {
  const SetPartition p(10, {{2, 5, 9}, {1, 3, 4, 6, 7}, {10}, {8}});
  CHECK(p.block(0) == std::vector<int>{1, 3, 4, 6, 7});  // sorted by minimum
  CHECK(p.to_text() == "1,3,4,6,7|2,5,9|8|10");
  CHECK(SetPartition::parse("1,3,4,6,7|2,5,9|8|10") == p);
  CHECK(SetPartition::from_rgs(p.to_rgs()) == p);

  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);          // missing element
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(SetPartition(3, {{2, 1}, {3}}), std::invalid_argument);     // not increasing
  CHECK_THROWS_AS(SetPartition::parse("1,2|x"), std::invalid_argument);
}

TEST_CASE("tau cycles are the blocks in increasing order") {
  const SetPartition p = SetPartition::parse("1,3,4,6,7|2,5,9|8|10");
  const Permutation tau = tau_of(p);
  CHECK(tau.cycles() ==
        std::vector<std::vector<int>>{{1, 3, 4, 6, 7}, {2, 5, 9}, {8}, {10}});
  CHECK(tau.apply(7) == 1);
  CHECK(tau.apply(9) == 2);

  CHECK(tau_of(SetPartition(1, {{1}})) == Permutation::identity(1));
  CHECK(tau_of(SetPartition(3, {{1, 2}, {3}})).cycles() ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("faces and genus on worked examples") {
  const SetPartition fig1 = SetPartition::parse("1,3,4,6,7|2,5,9|8|10");
  CHECK(faces_of(fig1) == 3);
  CHECK(genus_of(fig1) == 2);
  CHECK(type_of(fig1).key() == "1^2,3,5");

  const SetPartition fig2 = SetPartition::parse("1,4,5,8,10|2,3,6,7,9,11,12");
  CHECK(faces_of(fig2) == 5);
  CHECK(genus_of(fig2) == 3);

  // single block: sigma∘tau^{-1} is the identity
  const SetPartition full(6, {{1, 2, 3, 4, 5, 6}});
  CHECK(faces_of(full) == 6);
  CHECK(genus_of(full) == 0);

  CHECK(genus_of(SetPartition::parse("1,2|3,4")) == 0);
  CHECK(genus_of(SetPartition::parse("1,3|2,4")) == 1);
}

TEST_CASE("genus agrees with the independent cycle-count oracle") {
  for (int n = 1; n <= 8; ++n) {
    visit_partitions(n, Constraint::none(), [&](const SetPartition& p) {
      const ProductOracle oracle(p);
      CHECK(faces_of(p) == oracle.cycles());
      const int twice = p.n() + 1 - p.block_count() - oracle.cycles();
      REQUIRE(twice >= 0);
      REQUIRE(twice % 2 == 0);
      CHECK(genus_of(p) == twice / 2);
      return true;
    });
  }
}

TEST_CASE("two_part_stats") {
  const SetPartition fig2 = SetPartition::parse("1,4,5,8,10|2,3,6,7,9,11,12");
  const TwoPartStats s = two_part_stats(fig2);
  CHECK(s.s1 == 1);
  CHECK(s.s2 == 3);
  CHECK(s.f_prime == 1);

  const TwoPartStats a = two_part_stats(SetPartition::parse("1,2|3,4"));
  CHECK(a.s1 == 1);
  CHECK(a.s2 == 1);
  CHECK(a.f_prime == 1);

  const TwoPartStats b = two_part_stats(SetPartition::parse("1,3|2,4"));
  CHECK(b.s1 == 0);
  CHECK(b.s2 == 0);
  CHECK(b.f_prime == 1);

  CHECK_THROWS_AS(two_part_stats(SetPartition::parse("1,2,3")), std::invalid_argument);
}

TEST_CASE("two-block partitions: f'=1 and s2-s1 = n-2q exhaustively") {
  for (int n = 2; n <= 9; ++n) {
    visit_partitions(n, Constraint::with_parts(2), [&](const SetPartition& p) {
      const TwoPartStats s = two_part_stats(p);
      CHECK(s.f_prime == 1);
      const int q = static_cast<int>(p.block(0).size());
      CHECK(s.s2 - s.s1 == n - 2 * q);
      CHECK(genus_of(p) == q - s.s1 - 1);
      return true;
    });
  }
}

TEST_CASE("deleting singleton blocks preserves the genus") {
  for (int n = 2; n <= 8; ++n) {
    visit_partitions(n, Constraint::none(), [&](const SetPartition& p) {
      bool has_singleton = false;
      bool all_singletons = true;
      for (const auto& block : p.blocks()) {
        if (block.size() == 1) has_singleton = true;
        else all_singletons = false;
      }
      if (has_singleton && !all_singletons) {
        CHECK(genus_of(without_singleton_blocks(p)) == genus_of(p));
      }
      return true;
    });
  }
}

TEST_CASE("permutation algebra") {
  const Permutation sigma = Permutation::full_cycle(5);
  CHECK(sigma.compose(sigma.inverse()) == Permutation::identity(5));
  CHECK(sigma.cycle_count() == 1);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  const Permutation p = Permutation::from_cycles(5, {{1, 3}, {2, 5, 4}});
  CHECK(p.apply(3) == 1);
  CHECK(p.apply(4) == 2);
  CHECK(p.inverse().apply(1) == 3);
}

TEST_CASE("partition types") {
  const PartitionType t = PartitionType::parse("2^2,3");
  CHECK(t.weight() == 7);
  CHECK(t.parts() == 3);
  CHECK(t.key() == "2^2,3");
  CHECK(PartitionType::from_parts({3, 2, 2}) == t);
  CHECK(t.without_singletons(0) == t);
  CHECK(PartitionType::parse("1^2,3,5").without_singletons(2).key() == "3,5");
  CHECK_THROWS_AS(PartitionType::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PartitionType::parse("0^2"), std::invalid_argument);
  // reference-table order: fewer parts first, then ascending part lists
  CHECK(PartitionType::parse("9") < PartitionType::parse("2,7"));
  CHECK(PartitionType::parse("2^2,5") < PartitionType::parse("2,3,4"));
  CHECK(PartitionType::parse("2,3,4") < PartitionType::parse("3^3"));
}

}  // TEST_SUITE

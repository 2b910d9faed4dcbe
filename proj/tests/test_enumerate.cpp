#include <doctest.h>

#include "genuscount/classic.hpp"
#include "genuscount/enumerate.hpp"

using namespace genuscount;

namespace {

// Bell triangle: an oracle for B_n independent of the binomial recurrence.
BigInt bell_triangle(int n) {
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("visit counts match the classical numbers") {
  const auto count_all = [](int n, const Constraint& c) {
    return visit_partitions(n, c, [](const SetPartition&) { return true; });
  };
  CHECK(count_all(4, Constraint::none()) == 15);
  CHECK(bell_triangle(4) == 15);
  for (int n = 1; n <= 9; ++n) {
    CHECK(count_all(n, Constraint::none()) == bell_triangle(n).convert_to<std::uint64_t>());
  }
  CHECK(count_all(6, Constraint::with_type(PartitionType::parse("3^2"))) == 10);
  CHECK(count_all(5, Constraint::no_singletons()) == 11);
  for (int k = 1; k <= 6; ++k) {
    CHECK(BigInt(count_all(6, Constraint::with_parts(k))) == stirling2(6, k));
  }
}

TEST_CASE("visitor order is RGS-lexicographic and stop works") {
  std::vector<std::vector<int>> seen;
  visit_partitions(3, Constraint::none(), [&](const SetPartition& p) {
    seen.push_back(p.to_rgs());
    return true;
  });
  const std::vector<std::vector<int>> expected{
      {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}};
  CHECK(seen == expected);

  std::uint64_t visits = visit_partitions(3, Constraint::none(), [&](const SetPartition& p) {
    return p.to_rgs() != std::vector<int>{1, 2, 1};  // stop at the third one
  });
  CHECK(visits == 3);
}

TEST_CASE("count_by_genus spot values") {
  const GenusCountTable t4 = count_by_genus(4, Constraint::none());
  CHECK(t4.genus_count(0) == 14);
  CHECK(t4.genus_count(1) == 1);

  const GenusCountTable t2 = count_by_genus(2, Constraint::none());
  CHECK(t2.genus_count(0) == 2);
  CHECK(t2.max_genus() == 0);

  const GenusCountTable t6 =
      count_by_genus(6, Constraint::with_type(PartitionType::parse("3^2")));
  CHECK(t6.genus_count(0) == 3);
  CHECK(t6.genus_count(1) == 6);
  CHECK(t6.genus_count(2) == 1);
}

TEST_CASE("count_stirling and count_types spot values") {
  const GenusCountTable s5 = count_stirling(5);
  CHECK(s5.parts_count(2, 0) == 10);
  CHECK(s5.parts_count(2, 1) == 5);
  const GenusCountTable s8 = count_stirling(8);
  CHECK(s8.parts_count(4, 2) == 161);
  const GenusCountTable sh6 = count_stirling(6, true);
  CHECK(sh6.parts_count(3, 0) == 5);
  CHECK(sh6.parts_count(3, 1) == 10);

  const GenusCountTable types10 = count_types(10);
  CHECK(types10.type_count(PartitionType::parse("2,3,5"), 1) == 830);
  const GenusCountTable types7 = count_types(7, 2);
  CHECK(types7.type_count(PartitionType::parse("2^2,3"), 2) == 14);
}

TEST_CASE("sum rules over the genus split") {
  for (int n = 1; n <= 9; ++n) {
    const GenusCountTable types = count_types(n);
    CHECK(types.total() == bell(n));
    for (const auto& [key, value] : types.counts) {
      (void)value;
      BigInt type_total = 0;
      for (int g = 0; 2 * g <= n; ++g) type_total += types.type_count(key.type, g);
      CHECK(type_total == faa_di_bruno(n, key.type));
    }
  }
  const GenusCountTable sh = count_stirling(9, true);
  BigInt total = 0;
  for (const auto& [key, value] : sh.counts) total += value;
  CHECK(total == assoc_bell(9));
}

TEST_CASE("split_workload covers the space exactly once") {
  CHECK(split_workload(5, Constraint::none(), 1).size() == 1);
  CHECK(split_workload(5, Constraint::none(), 2).size() == 2);
  CHECK_THROWS_AS(split_workload(5, Constraint::none(), 0), std::invalid_argument);
  CHECK_THROWS_AS(split_workload(5, Constraint::none(), 5), std::invalid_argument);

  const Constraint none = Constraint::none();
  const GenusCountTable whole = count_partitions(10, none, TableMode::ByGenus, 1);
  for (int depth : {1, 4, 7}) {
    GenusCountTable merged;
    merged.n = 10;
    merged.mode = TableMode::ByGenus;
    for (const auto& unit : split_workload(10, none, depth)) {
      merged.merge(count_unit(unit, TableMode::ByGenus));
    }
    CHECK(merged.same_counts(whole));
  }
}

TEST_CASE("parallel equals serial for every mode") {
  for (const TableMode mode : {TableMode::ByGenus, TableMode::ByParts, TableMode::ByType}) {
    const GenusCountTable serial = count_partitions(9, Constraint::none(), mode, 1);
    const GenusCountTable parallel = count_partitions(9, Constraint::none(), mode, 8);
    CHECK(serial.same_counts(parallel));
  }
  const Constraint ns = Constraint::no_singletons();
  CHECK(count_partitions(10, ns, TableMode::ByParts, 1)
            .same_counts(count_partitions(10, ns, TableMode::ByParts, 3)));
}

TEST_CASE("singleton-removal identity via enumeration") {
  // C^(g)_{n,[1^r a']} = binom(n,r) C^(g)_{n-r,[a']}
  for (int n = 4; n <= 9; ++n) {
    const GenusCountTable big = count_types(n);
    const GenusCountTable small = count_types(n - 2);
    for (const auto& [key, value] : big.counts) {
      if (key.type.multiplicity(1) != 2) continue;
      const PartitionType stripped = key.type.without_singletons(2);
      if (stripped.empty()) continue;
      CHECK(value == binomial(n, 2) * small.type_count(stripped, key.genus));
    }
  }
}

TEST_CASE("constraint validation") {
  Constraint c;
  c.parts = 3;
  c.ctype = PartitionType::parse("2^2");
  CHECK_THROWS_AS(c.validate(4), std::invalid_argument);  // parts != |ctype|
  c.parts = 2;
  CHECK_NOTHROW(c.validate(4));
  c.min_block_size = 2;
  c.ctype = PartitionType::parse("1,3");
  c.parts.reset();
  CHECK_THROWS_AS(c.validate(4), std::invalid_argument);  // singleton type vs min 2
  CHECK_THROWS_AS(visit_partitions(0, Constraint::none(), [](const SetPartition&) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      visit_partitions(26, Constraint::none(), [](const SetPartition&) { return true; }),
      std::invalid_argument);
}

TEST_CASE("table JSON round trip") {
  const GenusCountTable table = count_types(7, 2, 2);
  const GenusCountTable back = GenusCountTable::from_json(table.to_json());
  CHECK(back.n == table.n);
  CHECK(back.mode == table.mode);
  CHECK(back.constraint == table.constraint);
  CHECK(back.same_counts(table));

  const GenusCountTable parts = count_stirling(6);
  CHECK(GenusCountTable::from_json(parts.to_json()).same_counts(parts));
}

}  // TEST_SUITE

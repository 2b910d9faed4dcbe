#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "genuscount/cache.hpp"
#include "genuscount/classic.hpp"
#include "genuscount/enumerate.hpp"
#include "genuscount/golden.hpp"
#include "genuscount/oeis.hpp"
#include "genuscount/tables.hpp"
#include "genuscount/verify.hpp"

using namespace genuscount;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("genuscount_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("app") {

TEST_CASE("golden tables load and answer lookups") {
  const GoldenData& golden = GoldenData::instance();
  CHECK(golden.c_tables().size() == 14);   // n = 2..15
  CHECK(golden.s_tables().size() == 15);   // n = 1..15
  CHECK(golden.shat_tables().size() == 14);

  CHECK(golden.c_value(10, PartitionType::parse("2,3,5"), 1) == 830);
  CHECK(golden.c_value(12, PartitionType::parse("4^3"), 2) == 2007);
  CHECK(golden.c_value(7, PartitionType::parse("2^2,3"), 2) == 14);
  CHECK(golden.c_value(15, PartitionType::parse("2^6,3"), 4) == 450450);
  CHECK(golden.s_value(8, 4, 2) == 161);
  CHECK(golden.s_value(5, 2, 0) == 10);
  CHECK(golden.shat_value(6, 3, 1) == 10);
  CHECK(golden.shat_value(8, 3, 2) == 154);
  CHECK(golden.c_value(10, PartitionType::parse("2,3,5"), 5) == 0);  // trimmed zero

  const GoldenPkCell* partial = golden.find_pk(7, 3);
  REQUIRE(partial != nullptr);
  CHECK(partial->partial);
  CHECK(partial->counts[0] == 70);
  const GoldenPkCell* complete = golden.find_pk(4, 4);
  REQUIRE(complete != nullptr);
  CHECK(!complete->partial);
  CHECK(complete->counts.back() == 50701);

  CHECK(golden.pairings_table().at(8).back() == 225225);
  CHECK(golden.twopart_table().at(12) == std::vector<BigInt>{12, 144, 360, 240, 36});

  // row order: by part count, then lexicographic
  const GoldenCTable* c9 = golden.find_c(9);
  REQUIRE(c9 != nullptr);
  REQUIRE(c9->rows.size() == 8);
  CHECK(c9->rows[0].type.key() == "9");
  CHECK(c9->rows[4].type.key() == "2^2,5");
  CHECK(c9->rows[5].type.key() == "2,3,4");
  CHECK(c9->rows[6].type.key() == "3^3");
  CHECK(c9->rows[7].type.key() == "2^3,3");
}

TEST_CASE("b-file parsing") {
  std::istringstream good("# comment\n0 1\n1 1\n2 2\n\n3 5\n");
  const auto entries = parse_bfile(good);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].index == 0);
  CHECK(entries[3].value == 5);

  std::istringstream bad_value("0 1\n1 x\n");
  CHECK_THROWS_WITH_AS(parse_bfile(bad_value), "b-file: bad integer on line 2",
                       std::invalid_argument);
  std::istringstream missing("42\n");
  CHECK_THROWS_AS(parse_bfile(missing), std::invalid_argument);
  std::istringstream trailing("0 1 junk\n");
  CHECK_THROWS_AS(parse_bfile(trailing), std::invalid_argument);
}

TEST_CASE("oeis_check matches and pinpoints divergences") {
  const OeisBinding* catalan_binding = find_oeis_binding("A000108");
  REQUIRE(catalan_binding != nullptr);
  std::vector<BFileEntry> entries;
  for (long i = 0; i <= 10; ++i) entries.push_back({i, catalan(i)});
  OeisReport report = oeis_check(entries, catalan_binding->generator, "A000108");
  CHECK(!report.diverged);
  CHECK(report.compared == 11);

  entries[7].value += 1;
  report = oeis_check(entries, catalan_binding->generator, "A000108");
  CHECK(report.diverged);
  CHECK(report.first_divergence_index == 7);

  // offset shift: epsilon_1(k) = B^(1)_{k+2+4-2}; the A002802 binding indexes
  // from 0 with a(i) = B^(1)_{i+4}
  const OeisBinding* b1 = find_oeis_binding("A002802");
  REQUIRE(b1 != nullptr);
  std::vector<BFileEntry> eps;
  const GoldenData& golden = GoldenData::instance();
  for (const auto& [k, counts] : golden.pairings_table()) {
    if (counts.size() >= 2) eps.push_back({k, counts[1]});  // genus-1 column, index k
  }
  // file index k corresponds to binding index k-2
  report = oeis_check(eps, b1->generator, "A002802", -2);
  CHECK(!report.diverged);
  CHECK(report.compared >= 6);

  // generator domain: negative indices are skipped, not failed
  std::vector<BFileEntry> with_negative{{-1, BigInt(99)}, {0, catalan(0)}};
  report = oeis_check(with_negative, catalan_binding->generator, "A000108");
  CHECK(!report.diverged);
  CHECK(report.skipped == 1);
  CHECK(report.compared == 1);
}

TEST_CASE("bundled b-file fixtures match") {
  const char* fixture_dir = std::getenv("GENUSCOUNT_FIXTURES");
  const std::filesystem::path dir =
      fixture_dir ? std::filesystem::path(fixture_dir) : std::filesystem::path(GENUSCOUNT_OEIS_DIR);
  for (const auto& [file, seq] :
       std::vector<std::pair<std::string, std::string>>{{"bA000108.txt", "A000108"},
                                                        {"bA000110.txt", "A000110"},
                                                        {"bA005043.txt", "A005043"},
                                                        {"bA002802.txt", "A002802"},
                                                        {"bA035319.txt", "A035319"},
                                                        {"bA245551.txt", "A245551"}}) {
    std::ifstream in(dir / file);
    REQUIRE(in);
    const auto entries = parse_bfile(in);
    const OeisBinding* binding = find_oeis_binding(seq);
    REQUIRE(binding != nullptr);
    const OeisReport report = oeis_check(entries, binding->generator, seq);
    INFO(report.to_text());
    CHECK(!report.diverged);
    CHECK(report.compared > 3);
  }
}

TEST_CASE("cache round trip") {
  const auto dir = temp_dir("cache");
  const GenusCountTable table = count_types(7, 1, 2);
  const std::string key = cache_key(7, table.constraint, table.mode);
  CHECK(!cache_load(dir, key).has_value());
  cache_store(dir, key, table);
  const auto loaded = cache_load(dir, key);
  REQUIRE(loaded.has_value());
  CHECK(loaded->same_counts(table));
  CHECK(loaded->n == 7);
  CHECK(loaded->mode == TableMode::ByType);
  std::filesystem::remove_all(dir);
}

TEST_CASE("emit and reparse tables") {
  const GenusCountTable types = count_types(7, 1, 1);
  for (const TableKind kind : {TableKind::CTable, TableKind::STable, TableKind::ShatTable}) {
    const EmittedTable table = table_from_counts(kind, types);
    const EmittedTable back = parse_table_csv(render_table(table, EmitFormat::Csv));
    CHECK(back.n == table.n);
    REQUIRE(back.rows.size() == table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      CHECK(back.rows[i].key == table.rows[i].key);
      CHECK(back.rows[i].counts == table.rows[i].counts);
    }
  }

  // regenerated C-table equals the embedded golden rows
  const GoldenData& golden = GoldenData::instance();
  const EmittedTable c7 = table_from_counts(TableKind::CTable, types);
  const GoldenCTable* want = golden.find_c(7);
  REQUIRE(want != nullptr);
  REQUIRE(c7.rows.size() == want->rows.size());
  for (std::size_t i = 0; i < c7.rows.size(); ++i) {
    CHECK(c7.rows[i].key == want->rows[i].type.key());
    CHECK(c7.rows[i].counts == want->rows[i].counts);
  }
  // markdown/json renderings are nonempty and mention the rows
  CHECK(render_table(c7, EmitFormat::Markdown).find("2^2,3") != std::string::npos);
  CHECK(render_table(c7, EmitFormat::Json).find("\"2^2,3\"") != std::string::npos);
}

TEST_CASE("fast verification is reproducible") {
  const VerificationReport first = run_verification(Scope::Fast, 2);
  const VerificationReport second = run_verification(Scope::Fast, 2);
  CHECK(first.ok());
  CHECK(first.to_json() == second.to_json());
  CHECK(first.to_text() == second.to_text());
  // text and JSON agree on every status
  std::size_t mismatches_in_text = 0;
  std::string::size_type pos = 0;
  const std::string text = first.to_text();
  while ((pos = text.find("[MISMATCH]", pos)) != std::string::npos) {
    ++mismatches_in_text;
    ++pos;
  }
  std::size_t mismatches_in_records = 0;
  for (const auto& r : first.records) {
    if (r.status == CheckStatus::Mismatch) ++mismatches_in_records;
  }
  CHECK(mismatches_in_text == mismatches_in_records);
}

TEST_CASE("verification report plumbing") {
  // The full runs live in the acceptance suite; here only report mechanics.
  VerificationReport report;
  report.records.push_back({"g", "subject", "a", "b", "r", CheckStatus::ExactMatch, ""});
  CHECK(report.ok());
  report.records.push_back(
      {"g", "subject2", "a", "b", "r", CheckStatus::Mismatch, "cell (1,2)"});
  CHECK(!report.ok());
  CHECK(report.to_text().find("MISMATCH") != std::string::npos);
  CHECK(report.to_json().find("cell (1,2)") != std::string::npos);
  CHECK(scope_n_max(Scope::Standard) == 12);
  CHECK(scope_from_name("extended") == Scope::Extended);
  CHECK_THROWS_AS(scope_from_name("bogus"), std::invalid_argument);
}

}  // TEST_SUITE

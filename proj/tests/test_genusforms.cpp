#include <doctest.h>

#include "genuscount/chi.hpp"
#include "genuscount/classic.hpp"
#include "genuscount/enumerate.hpp"
#include "genuscount/genus_forms.hpp"

using namespace genuscount;

TEST_SUITE("genusforms") {

TEST_CASE("bell_genus closed forms") {
  CHECK(bell_genus(4, 0).value == 14);
  CHECK(bell_genus(4, 0).status == Status::Exact);
  CHECK(bell_genus(6, 2).value == 1);
  CHECK(bell_genus(7, 2).value == 28);  // sum of the n=7 S-table genus-2 column (7 + 21)
  CHECK(bell_genus(8, 3).value == 1);
  CHECK(bell_genus(8, 3).status == Status::Conjectured);
  CHECK(bell_genus(11, 4).value == 352);
  CHECK(bell_genus(15, 4).value == 162718556);
  CHECK(bell_genus(9, 4).value == 0);  // below the genus bound
  CHECK(bell_genus(9, 4).status == Status::Exact);
  CHECK(!bell_genus(16, 4).available());
  CHECK(!bell_genus(12, 5).available());

  // genus split of the Bell numbers, against brute force
  for (int n = 1; n <= 9; ++n) {
    const GenusCountTable t = count_by_genus(n, Constraint::none());
    for (int g = 0; g <= 3; ++g) CHECK(bell_genus(n, g).value == t.genus_count(g));
  }
}

TEST_CASE("assoc_bell_genus recurrence and the direct genus-1 sum") {
  CHECK(assoc_bell_genus(5, 0).value == 6);
  CHECK(assoc_bell_genus(0, 0).value == 1);
  CHECK(assoc_bell_genus(7, 1).value == 105);
  CHECK(assoc_bell_genus(7, 2).value == 21);
  CHECK(assoc_bell_genus(8, 2).value == 203);
  CHECK(assoc_bell_genus(11, 4).value == 341);
  CHECK(assoc_bell_genus(12, 4).value == 15103);
  for (int n = 0; n <= 16; ++n) {
    CHECK(assoc_bell_genus(n, 1).value == assoc_bell_genus1_direct(n));
  }
  // sums over genus recover the associated Bell numbers
  for (int n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for (int g = 0; g <= 3; ++g) {
      const FormulaResult r = assoc_bell_genus(n, g);
      REQUIRE(r.available());
      total += r.value;
    }
    if (n < 10) CHECK(total == assoc_bell(n));  // genus >= 4 needs n >= 10
  }
}

TEST_CASE("stirling_genus across genus") {
  CHECK(stirling_genus(4, 2, 0).value == 6);
  CHECK(stirling_genus(6, 3, 1).value == 40);
  CHECK(stirling_genus(8, 4, 2).value == 161);
  CHECK(stirling_genus(9, 3, 3).value == 85);
  CHECK(stirling_genus(9, 3, 3).status == Status::Conjectured);
  CHECK(stirling_genus(12, 4, 4).value == 14421);
  CHECK(!stirling_genus(15, 5, 4).available());  // needs UNKNOWN chi(4) cells
  CHECK(stirling_genus(7, 1, 1).value == 0);     // one-part partitions are planar
  CHECK(!stirling_genus(12, 3, 5).available());

  // Narayana symmetry
  for (long n = 1; n <= 15; ++n) {
    for (long k = 1; k <= n; ++k) {
      CHECK(stirling_genus(n, k, 0).value == stirling_genus(n, n + 1 - k, 0).value);
    }
  }
}

TEST_CASE("stirling k=2 and the k=3 ansatz") {
  CHECK(stirling_k2(8, 3) == 1);
  CHECK(stirling_k2(12, 4) == 66);
  CHECK(stirling_k2(5, 1) == 5);
  CHECK(stirling_k3_conjecture(9, 3).value == 85);
  CHECK(stirling_k3_conjecture(7, 1).value == 175);
  CHECK(stirling_k3_conjecture(8, 2).value == 210);
  // lowest case S^(g)_{2g+3,3} = (4^{g+1}-1)/3
  for (int g = 0; g <= 6; ++g) {
    CHECK(stirling_k3_conjecture(2 * g + 3, g).value ==
          (pow_int(BigInt(4), static_cast<unsigned long>(g) + 1) - 1) / 3);
  }
}

TEST_CASE("chi arrays and structure checks") {
  const ChiArray c2 = chi_array(2);
  CHECK(c2.row_count() == 5);
  CHECK(c2.value(4, 0) == 1);
  CHECK(c2.value(4, 1) == 10);
  CHECK(c2.value(4, 2) == -15);
  CHECK(c2.value(4, 3) == -4);
  CHECK(c2.value(4, 4) == 8);
  CHECK(c2.entry_sum() == 9);

  const ChiArray c3 = chi_array(3);
  CHECK(c3.value(0, 0) == 1);
  CHECK(c3.value(1, 0) == -8);
  CHECK(c3.value(1, 1) == 68);

  const ChiArray c4 = chi_array(4);
  const std::vector<long> last_line{1,      318,    6831,   6072,   -99693, 103950, 196581,
                                    -413820, 155628, 146168, -117876, 7776,   8064};
  for (int s = 0; s <= 12; ++s) {
    CHECK(c4.value(12, s) == last_line[static_cast<std::size_t>(s)]);
  }
  CHECK(!c4.known(5, 2));
  CHECK_THROWS_AS(c4.value(5, 2), std::logic_error);

  CHECK(chi_structure_checks(chi_array(1)).all_pass());
  CHECK(chi_structure_checks(c2).all_pass());
  CHECK(chi_structure_checks(c3).all_pass());
  CHECK(chi_structure_checks(c4).all_pass());

  CHECK(chi_column_two_factor(2) == 10);
  CHECK(chi_column_two_factor(3) == 68);
  CHECK(chi_column_two_factor(4) == 318);
  CHECK(stirling_genus_denominator(1) == 12);
  CHECK(stirling_genus_denominator(2) == 30240);
  CHECK(stirling_genus_denominator(3) == 518918400);

  // a corrupted copy must fail the checks
  const std::string json = c2.to_json();
  ChiArray tampered = ChiArray::from_json(json);
  CHECK(tampered.value(4, 4) == 8);
  std::string bad_json = json;
  const auto pos = bad_json.find("\"8\"");
  REQUIRE(pos != std::string::npos);
  bad_json.replace(pos, 3, "\"9\"");
  CHECK(!chi_structure_checks(ChiArray::from_json(bad_json)).all_pass());
}

TEST_CASE("contract") {
  const std::vector<std::vector<BigInt>> single{{BigInt(1)}};
  const std::vector<std::vector<BigInt>> seven{{BigInt(7)}};
  CHECK(contract(single, seven, 0) == 7);

  const ChiArray c2 = chi_array(2);
  std::vector<std::vector<BigInt>> chi_rows, ones;
  for (int t = 0; t <= 4; ++t) {
    std::vector<BigInt> row, one_row;
    for (int s = 0; s <= t; ++s) {
      row.push_back(c2.value(t, s));
      one_row.push_back(1);
    }
    chi_rows.push_back(row);
    ones.push_back(one_row);
  }
  CHECK(contract(chi_rows, ones, 4) == 9);
  CHECK_THROWS_AS(contract(single, seven, 1), std::invalid_argument);
}

TEST_CASE("kreweras") {
  CHECK(kreweras(10, PartitionType::parse("2,3,5")) == 90);
  CHECK(kreweras(6, PartitionType::parse("2^3")) == 5);
  for (int n = 1; n <= 10; ++n) {
    CHECK(kreweras(n, PartitionType::parse(std::to_string(n))) == 1);
  }
  // matches the full genus-0 enumeration
  for (int n = 1; n <= 9; ++n) {
    const GenusCountTable types = count_types(n);
    for (const auto& [key, value] : types.counts) {
      if (key.genus == 0) CHECK(value == kreweras(n, key.type));
    }
  }
}

TEST_CASE("two_part closed form vs transfer oracle") {
  CHECK(two_part(12, 5, 3) == 240);
  CHECK(two_part(9, 4, 2) == 54);
  CHECK(two_part(8, 4, 1) == 18);
  CHECK(two_part_transfer(10, 5, 4) == 1);

  const Polynomial<RationalPolynomial> t2 = transfer_trace(2);
  // t2 = 1 + 2z + z^2 u^2
  CHECK(t2.coeff(0) == RationalPolynomial{Rational(1)});
  CHECK(t2.coeff(1) == RationalPolynomial{Rational(2)});
  CHECK(t2.coeff(2) == RationalPolynomial{Rational(0), Rational(0), Rational(1)});
  const Polynomial<RationalPolynomial> t3 = transfer_trace(3);
  CHECK(t3.coeff(1) == RationalPolynomial{Rational(3)});
  CHECK(t3.coeff(2) == RationalPolynomial{Rational(0), Rational(3)});
  CHECK(t3.coeff(3) == RationalPolynomial{Rational(0), Rational(0), Rational(0), Rational(1)});

  for (long n = 2; n <= 14; ++n) {
    for (long p = 1; p < n; ++p) {
      for (int g = 0; g <= static_cast<int>(n) / 2; ++g) {
        CHECK(two_part(n, p, g) == two_part_transfer(n, p, g));
      }
      CHECK(two_part(n, p, 1) == two_part(n, n - p, 1));
    }
  }
}

TEST_CASE("two_part generating function") {
  for (int g = 0; g <= 2; ++g) {
    const LaurentBiSeries gf = two_part_gf(g, 12);
    for (long n = 2; n <= 12; ++n) {
      for (long p = 1; p < n; ++p) CHECK(two_part_gf_count(gf, n, p) == two_part(n, p, g));
    }
    // v = 1 specialization: row sums give S_{n,2}
    for (long n = 2 * g + 2; n <= 12; ++n) {
      Rational total = 0;
      for (const auto& [w, c] : gf.by_x[static_cast<std::size_t>(n)]) total += c;
      CHECK(total == Rational(stirling_k2(n, g)));
    }
  }
  const LaurentBiSeries gf0 = two_part_gf(0, 8);
  CHECK(two_part_gf_count(gf0, 5, 3) == 5);
  const LaurentBiSeries gf1 = two_part_gf(1, 8);
  CHECK(two_part_gf_count(gf1, 7, 5) == 14);
}

TEST_CASE("three_part") {
  CHECK(three_part(9, 2, 3, 1).value == 531);
  CHECK(three_part(6, 2, 2, 1).value == 10);
  CHECK(three_part(9, 2, 3, 0).value == 72);
  CHECK(three_part(9, 2, 3, 0).status == Status::Exact);
  CHECK(!three_part(9, 2, 3, 2).available());
  CHECK_THROWS_AS(three_part(5, 2, 3, 0), std::invalid_argument);  // r = 0
  // symmetry in p <-> q
  for (int g = 0; g <= 1; ++g) {
    CHECK(three_part(12, 3, 4, g).value == three_part(12, 4, 3, g).value);
    CHECK(three_part(12, 3, 4, g).value == three_part(12, 5, 4, g).value);
  }
}

TEST_CASE("p_squared and pk families") {
  CHECK(p_squared(5, 4) == 1);
  for (long p = 2; p <= 10; ++p) {
    CHECK(p_squared(p, static_cast<int>(p) - 2) == p * (p - 1));
    BigInt total = 0;
    for (int g = 0; g < static_cast<int>(p); ++g) total += p_squared(p, g);
    CHECK(total == binomial(2 * p - 1, p));
    for (int g = 0; g < static_cast<int>(p); ++g) {
      CHECK(p_squared(p, g) == two_part(2 * p, p, g));
    }
  }

  CHECK(pk_genus1(3, 3).value == 102);
  CHECK(pk_genus1(4, 2).value == 18);
  CHECK(pk_genus1(3, 4).value == 1212);
  CHECK(pk_genus1(3, 4).status == Status::Conjectured);
  CHECK(pk_genus1(3, 3).status == Status::Exact);
  CHECK(!pk_genus1(3, 8).available());

  CHECK(pk_genus2(3, 3).value == 144);
  CHECK(pk_genus2(4, 4).value == 108090);
  CHECK(pk_genus2(2, 4).value == 21);
  CHECK(!pk_genus2(3, 6).available());

  // k = 2 reduces to the pentagonal pyramidal numbers p(p-1)^2/2
  for (long p = 2; p <= 9; ++p) {
    CHECK(pk_genus1(p, 2).value == BigInt(p) * (p - 1) * (p - 1) / 2);
    CHECK(pk_genus1(p, 2).value == p_squared(p, 1));
  }
  // k = 3 agrees with the proved three-part formula
  for (long p = 2; p <= 9; ++p) {
    CHECK(pk_genus1(p, 3).value == three_part(3 * p, p, p, 1).value);
  }
}

TEST_CASE("assoc_stirling_genus") {
  CHECK(assoc_stirling_genus(6, 3, 0).value == 5);
  CHECK(assoc_stirling_genus(6, 2, 1).value == 15);
  CHECK(assoc_stirling_genus(8, 2, 0).value == 20);
  CHECK(!assoc_stirling_genus(8, 2, 2).available());
  // Shat_{n,2}^{(0)} = S_{n,2}^{(0)} - n and Shat = S for g = 1
  for (long n = 4; n <= 12; ++n) {
    CHECK(assoc_stirling_genus(n, 2, 0).value == stirling_genus(n, 2, 0).value - n);
    CHECK(assoc_stirling_genus(n, 2, 1).value == stirling_genus(n, 2, 1).value);
  }
}

}  // TEST_SUITE

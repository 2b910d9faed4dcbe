#include <doctest.h>

#include "genuscount/classic.hpp"
#include "genuscount/enumerate.hpp"
#include "genuscount/pairings.hpp"

using namespace genuscount;

TEST_SUITE("pairings") {

TEST_CASE("epsilon via coefficient extraction") {
  CHECK(epsilon(4, 1) == 70);
  CHECK(epsilon(6, 2) == 6468);
  CHECK(epsilon(8, 4) == 225225);
  CHECK(epsilon(3, 2) == 0);  // 2g > k
  for (int k = 1; k <= 8; ++k) CHECK(epsilon(k, 0) == catalan(k));
}

TEST_CASE("recurrence route agrees everywhere") {
  CHECK(epsilon_recurrence_hz(5, 2) == 483);
  CHECK(epsilon_recurrence_hz(2, 1) == 1);
  for (int k = 1; k <= 12; ++k) {
    for (int g = 0; g <= 6; ++g) CHECK(epsilon_recurrence_hz(k, g) == epsilon(k, g));
  }
}

TEST_CASE("brute force route for small pairings") {
  for (int k = 1; k <= 5; ++k) {
    const GenusCountTable t =
        count_by_genus(2 * k, Constraint::with_type(PartitionType{{std::map<int, int>{{2, k}}}}));
    for (int g = 0; 2 * g <= k; ++g) CHECK(t.genus_count(g) == epsilon(k, g));
  }
}

TEST_CASE("row sums are odd double factorials") {
  for (int k = 1; k <= 12; ++k) {
    BigInt total = 0;
    for (int g = 0; 2 * g <= k; ++g) total += epsilon(k, g);
    CHECK(total == double_factorial_odd(k));
  }
}

TEST_CASE("genus-1 column closed form") {
  // epsilon(k, 1) = binom(2k-1, 3) * C_{k-2}
  for (int k = 2; k <= 12; ++k) {
    CHECK(epsilon(k, 1) == binomial(2 * k - 1, 3) * catalan(k - 2));
  }
}

TEST_CASE("genus-descent identity") {
  CHECK(epsilon_recurrence_in_genus(4, 1));
  CHECK(epsilon_recurrence_in_genus(6, 3));
  for (int k = 1; k <= 10; ++k) {
    for (int g = 1; 2 * g <= k; ++g) CHECK(epsilon_recurrence_in_genus(k, g));
  }
}

TEST_CASE("R polynomial") {
  CHECK(R_eval(1, 4) == 10);
  CHECK(R_eval(1, 4) * catalan(4) / 2 == 70);
  CHECK(R_eval(0, 7) == 1);
  // e_g(k) = C_k R_g(k) / 2^g
  for (int g = 0; g <= 4; ++g) {
    for (long k = 0; k <= 10; ++k) {
      const Rational expected =
          Rational(catalan(k) * R_eval(g, k), pow_int(BigInt(2), static_cast<unsigned long>(g)));
      CHECK(Rational(epsilon(std::max<long>(k, 1), g)) ==
            (k == 0 ? (g == 0 ? Rational(1) : Rational(0)) : expected));
    }
  }
  // recurrence R_g(k) = R_g(k-1) + binom(k,2) R_{g-1}(k-2)
  for (int g = 1; g <= 4; ++g) {
    for (long k = 2; k <= 12; ++k) {
      CHECK(R_eval(g, k) == R_eval(g, k - 1) + binomial(k, 2) * R_eval(g - 1, k - 2));
    }
  }
  // interpolated polynomial: degree 3g, roots at -1, 0, ..., 2g-1
  for (int g = 1; g <= 3; ++g) {
    const RationalPolynomial r = R_poly(g);
    CHECK(r.degree() == 3 * g);
    for (long k = -1; k <= 2 * g - 1; ++k) CHECK(r.eval(Rational(k)) == 0);
    for (long k = 0; k <= 3 * g + 4; ++k) CHECK(r.eval(Rational(k)) == Rational(R_eval(g, k)));
  }
}

TEST_CASE("Q polynomials reproduce the published factored forms") {
  CHECK(Q_poly(1) == RationalPolynomial{Rational(1)});
  CHECK(Q_poly(2) == RationalPolynomial{Rational(21), Rational(21)});
  const RationalPolynomial q3 = Q_poly(3);
  CHECK(q3.coeff(0) == Rational(11 * 135));
  CHECK(q3.coeff(1) == Rational(11 * 558));
  CHECK(q3.coeff(2) == Rational(11 * 158));
  const RationalPolynomial q4 = Q_poly(4);
  const BigInt f4 = BigInt(11) * 13;
  CHECK(q4.coeff(0) == Rational(f4 * 1575));
  CHECK(q4.coeff(1) == Rational(f4 * 13689));
  CHECK(q4.coeff(2) == Rational(f4 * 18378));
  CHECK(q4.coeff(3) == Rational(f4 * 2339));
  const RationalPolynomial q5 = Q_poly(5);
  const BigInt f5 = BigInt(3) * 13 * 17 * 19;
  CHECK(q5.coeff(0) == Rational(f5 * 4725));
  CHECK(q5.coeff(4) == Rational(f5 * 9478));
  // Q^(g)(0) values and integer coefficients
  CHECK(pairings_q0(2) == 21);
  CHECK(pairings_q0(4) == 225225);
  for (int g = 1; g <= 8; ++g) {
    const RationalPolynomial q = Q_poly(g);
    CHECK(q.degree() == g - 1);
    CHECK(q.coeff(0) == Rational(pairings_q0(g)));
    for (int r = 0; r <= q.degree(); ++r) {
      CHECK(boost::multiprecision::denominator(q.coeff(r)) == 1);
    }
  }
}

TEST_CASE("pairings generating function") {
  const RationalSeries g1 = pairings_gf(1, 10);
  CHECK(g1.coeff(5) == 420);
  const RationalSeries g2 = pairings_gf(2, 10);
  CHECK(g2.coeff(4) == 21);
  const RationalSeries g3 = pairings_gf(3, 10);
  CHECK(g3.coeff(6) == 1485);
  for (int g = 1; g <= 5; ++g) {
    const RationalSeries gf = pairings_gf(g, 20);
    for (int k = 1; k <= 20; ++k) CHECK(gf.coeff(k) == Rational(epsilon(k, g)));
  }
}

}  // TEST_SUITE

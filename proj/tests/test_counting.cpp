#include "qslab/counting.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace qslab;

TEST_CASE("elementary quantities") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(derangement(0) == 1);
  CHECK(derangement(1) == 0);
  CHECK(derangement(4) == 9);
  CHECK(derangement(6) == 265);
}

TEST_CASE("multiset coefficient counts weak compositions") {
  CHECK(multiset_coeff(3, 2) == 6);
  CHECK(multiset_coeff(1, 5) == 1);
  CHECK(multiset_coeff(4, 0) == 1);
  CHECK(multiset_coeff(0, 0) == 1);
  CHECK(multiset_coeff(0, 3) == 0);
  CHECK(multiset_coeff(2, 2) == binomial(3, 2));
}

TEST_CASE("first ballot triangle rows") {
  std::vector<std::vector<int>> rows = {
      {1}, {1, 1}, {1, 2, 2}, {1, 3, 5, 5}, {1, 4, 9, 14, 14}, {1, 5, 14, 28, 42, 42}};
  for (std::size_t n = 1; n <= rows.size(); ++n)
    for (std::size_t i = 1; i <= n; ++i) CHECK(ballot_b(n, i) == rows[n - 1][i - 1]);
  CHECK(ballot_b(4, 3) == 5);
  CHECK_THROWS_AS(ballot_b(4, 5), std::out_of_range);
  CHECK_THROWS_AS(ballot_b(0, 1), std::out_of_range);
}

TEST_CASE("second ballot triangle values and boundaries") {
  CHECK(ballot_g(4, 2) == 5);
  CHECK(ballot_g(4, 3) == 5);
  CHECK(ballot_g(4, 4) == 3);
  CHECK(ballot_g(4, 5) == 1);
  for (std::size_t n = 2; n <= 12; ++n) {
    CHECK(ballot_g(n, 2) == catalan(n - 1));
    CHECK(ballot_g(n, n) == BigInt(n) - 1);
    CHECK(ballot_g(n, n + 1) == 1);
  }
  CHECK_THROWS_AS(ballot_g(4, 1), std::out_of_range);
  CHECK_THROWS_AS(ballot_g(4, 6), std::out_of_range);
}

TEST_CASE("the two triangles mirror each other") {
  for (std::size_t n = 1; n <= 15; ++n)
    for (std::size_t i = 2; i <= n + 1; ++i) CHECK(ballot_g(n, i) == ballot_b(n, n + 2 - i));
}

TEST_CASE("collapsing an entry against an earlier row reproduces it") {
  for (std::size_t n = 2; n <= 15; ++n)
    for (std::size_t i = 2; i <= n; ++i) CHECK(ballot_collapse(n, i) == ballot_b(n, i));
}

TEST_CASE("alternating Catalan sums collapse into the first triangle") {
  CHECK(ballot_to_catalan(2, 1) == 3);
  CHECK(ballot_to_catalan(3, 2) == 14);
  for (std::size_t m1 = 1; m1 <= 10; ++m1)
    for (std::size_t j = 0; j <= 10; ++j) CHECK(ballot_to_catalan(m1, j) == ballot_b(m1 + j + 1, m1));
}

TEST_CASE("preimage count sequences") {
  std::vector<BigInt> q0_expect = {0, 1, 4, 18, 96, 600, 4320};
  for (std::size_t n = 1; n <= q0_expect.size(); ++n) CHECK(count_q0(n) == q0_expect[n - 1]);

  std::vector<BigInt> q1_expect = {1, 0, 1, 2, 9, 44, 265};
  for (std::size_t n = 1; n <= q1_expect.size(); ++n) {
    CHECK(count_q1(n) == q1_expect[n - 1]);
    CHECK(count_q1(n) == derangement(n - 1));
  }

  std::vector<BigInt> q2_expect = {0, 0, 1, 0, 2, 6, 32, 190};
  for (std::size_t n = 0; n < q2_expect.size(); ++n) CHECK(count_q2(n) == q2_expect[n]);
  for (std::size_t n = 2; n <= 20; ++n) CHECK(count_q2(n) == factorial(n - 1) - 2 * count_q1(n));
}

TEST_CASE("words with the k largest values outside the maxima prefix") {
  CHECK(count_k_largest_ltr(2, 1) == 5);
  CHECK(count_k_largest_ltr(2, 2) == 9);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(count_k_largest_ltr(n, 0) == catalan(n));
}

TEST_CASE("run-gap-run counts, both forms") {
  CHECK(mpm_simple(1, 1, 2) == 4);
  CHECK(mpm_simple(2, 1, 2) == 9);
  CHECK(mpm_simple(2, 1, 3) == 34);
  for (std::size_t m1 = 1; m1 <= 6; ++m1)
    for (std::size_t p1 = 1; p1 <= 4; ++p1) {
      CHECK(mpm_simple(m1, p1, 1) == catalan(m1));
      for (std::size_t m2 = 1; m2 <= 5; ++m2) CHECK(mpm_full(m1, p1, m2) == mpm_simple(m1, p1, m2));
    }
}

TEST_CASE("small closed forms in the final run length") {
  for (std::size_t m1 = 1; m1 <= 7; ++m1)
    for (std::size_t p1 = 1; p1 <= 5; ++p1) {
      BigInt p(p1);
      CHECK(mpm_simple(m1, p1, 2) == catalan(m1 + 1) + (p + 1) * catalan(m1));
      CHECK(mpm_simple(m1, p1, 3) ==
            catalan(m1 + 2) + (p + 1) * catalan(m1 + 1) + (p + 1) * (p + 4) / 2 * catalan(m1));
    }
}

TEST_CASE("rational polynomials interpolate and print") {
  RationalPolynomial zero(std::vector<Rational>{});
  CHECK(zero.degree() == -1);
  CHECK(zero.eval(5) == 0);
  CHECK(zero.str() == "0");

  RationalPolynomial c({Rational(3)});
  CHECK(c.degree() == 0);
  CHECK(c.str() == "3");

  std::vector<std::pair<Rational, Rational>> pts = {{1, 2}, {2, 3}, {3, 6}};
  auto f = RationalPolynomial::interpolate(pts);  // x^2 - 2x + 3
  CHECK(f.degree() == 2);
  CHECK(f.eval(1) == 2);
  CHECK(f.eval(2) == 3);
  CHECK(f.eval(3) == 6);
  CHECK(f.eval(10) == 83);

  RationalPolynomial g({Rational(2), Rational(5, 2), Rational(1, 2)});
  CHECK(g.str() == "1/2*p1^2 + 5/2*p1 + 2");
  RationalPolynomial one({Rational(1)});
  CHECK(one.str() == "1");
  RationalPolynomial line({Rational(1), Rational(1)});
  CHECK(line.str() == "p1 + 1");
}

TEST_CASE("Catalan decompositions of the run-gap-run counts") {
  for (std::size_t p1 = 1; p1 <= 6; ++p1) {
    auto c1 = catalan_decomposition(1, p1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == 1);

    auto c2 = catalan_decomposition(2, p1);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == BigInt(p1) + 1);
    CHECK(c2[1] == 1);

    auto c3 = catalan_decomposition(3, p1);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0] == BigInt(p1 + 1) * BigInt(p1 + 4) / 2);
    CHECK(c3[1] == BigInt(p1) + 1);
    CHECK(c3[2] == 1);
  }
}

TEST_CASE("decomposition coefficients as polynomials in the gap length") {
  CHECK(omega_poly(1, 0).str() == "1");
  CHECK(omega_poly(2, 0).str() == "p1 + 1");
  CHECK(omega_poly(2, 1).str() == "1");
  CHECK(omega_poly(3, 0).str() == "1/2*p1^2 + 5/2*p1 + 2");
  CHECK(omega_poly(3, 1).str() == "p1 + 1");
  CHECK(omega_poly(3, 2).str() == "1");
}

#pragma once

// Exact counting: factorials, Catalan and derangement numbers, the ballot
// triangles b and g, multiset coefficients, preimage-count formulas for the
// census classes and the M1-P1-M2 shape, and the expansion of those counts
// in the Catalan basis.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qslab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::size_t n);
BigInt binomial(long long n, long long k);  // 0 outside the triangle
BigInt catalan(std::size_t n);
BigInt derangement(std::size_t n);

/// Multisets of size v over u symbols: binom(u+v-1, v). By convention
/// (u, 0) -> 1 and (0, v>0) -> 0.
BigInt multiset_coeff(std::size_t u, std::size_t v);

/// Memoized ballot triangles, grown row by row on demand.
///
/// b(n, i) counts 321-avoiding permutations of length n whose maximum sits
/// at position i (rows satisfy b(n+1, i) = sum of b(n, 1..i), seeded by
/// b(1, 1) = 1; this is A009766 read by rows). g(n, i) counts 321-avoiding
/// permutations of length n whose first non-left-to-right-maximum is at
/// position i (2 <= i <= n+1, where i = n+1 marks the identity), computed
/// here by the closed form (i-1) * binom(2n-i+1, n) / (2n-i+1).
class BallotTable {
 public:
  BigInt b(std::size_t n, std::size_t i);  // 1 <= i <= n
  BigInt g(std::size_t n, std::size_t i);  // 2 <= i <= n+1

 private:
  void grow(std::size_t n);
  std::vector<std::vector<BigInt>> rows_;
};

/// Shared-table accessors; thread-safe.
BigInt ballot_b(std::size_t n, std::size_t i);
BigInt ballot_g(std::size_t n, std::size_t i);

/// Rewrites b(n, i) against an earlier row:
/// sum over h < i of binom(n-h, n-i) * b(i-1, h), for 2 <= i <= n.
BigInt ballot_collapse(std::size_t n, std::size_t i);

/// Alternating Catalan expansion of the ballot entry b(m1+j+1, m1):
/// sum over h of (-1)^(h-1) * binom(j+2-h, h-1) * C(m1+j+1-h).
BigInt ballot_to_catalan(std::size_t m1, std::size_t j);

/// Permutations of length n that Queuesort never produces: (n-1)! * (n-1).
BigInt count_q0(std::size_t n);

/// Permutations of length n with exactly one preimage: derangement(n-1).
BigInt count_q1(std::size_t n);

/// Permutations of length n with exactly two preimages; recurrence
/// t(n+1) = (n-1) * (t(n) + t(n-1)) with t(0)=t(1)=t(3)=0, t(2)=1.
BigInt count_q2(std::size_t n);

/// 321-avoiding permutations of length n+k whose k largest values are all
/// left-to-right maxima: sum over i of multiset(n-i+1, k) * b(n, i+1).
BigInt count_k_largest_ltr(std::size_t n, std::size_t k);

/// Preimage count for a word shaped as an initial run of m1 maxima, a gap of
/// p1 elements and a final run of m2 maxima; full double-sum form. Empty
/// inner index ranges contribute a factor of 1.
BigInt mpm_full(std::size_t m1, std::size_t p1, std::size_t m2);

/// Same count collapsed into ballot entries:
/// sum over 1<=i<=m2, 0<=j<i of binom(i-1,j) * b(m1+j+1, m1) * b(m2+p1-j, m2-i+1).
BigInt mpm_simple(std::size_t m1, std::size_t p1, std::size_t m2);

/// Polynomial with exact rational coefficients, stored lowest degree first.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);

  /// Unique interpolating polynomial of degree < points.size().
  static RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

  int degree() const noexcept;  // -1 for the zero polynomial
  Rational eval(const Rational& x) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::string str(std::string_view var = "p1") const;

  bool operator==(const RationalPolynomial&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficients c_0..c_{m2-1} with mpm_simple(m1, p1, m2) equal to
/// sum of c_t * catalan(m1 + t) for every m1 >= 1. Solved exactly from
/// m1 = 1..m2 and cross-checked at m1 = m2+1..m2+3.
std::vector<BigInt> catalan_decomposition(std::size_t m2, std::size_t p1);

/// The t-th Catalan coefficient as a polynomial in p1 (degree m2-t-1),
/// interpolated from catalan_decomposition and verified at one extra point.
RationalPolynomial omega_poly(std::size_t m2, std::size_t t);

}  // namespace qslab

#include "qslab/counting.hpp"

#include <mutex>
#include <stdexcept>

namespace qslab {

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(std::size_t n) {
  return binomial(2 * static_cast<long long>(n), static_cast<long long>(n)) / (n + 1);
}

BigInt derangement(std::size_t n) {
  BigInt prev2 = 1, prev1 = 0;  // d(0), d(1)
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  BigInt cur;
  for (std::size_t m = 2; m <= n; ++m) {
    cur = (m - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

BigInt multiset_coeff(std::size_t u, std::size_t v) {
  if (v == 0) return 1;
  if (u == 0) return 0;
  return binomial(static_cast<long long>(u + v) - 1, static_cast<long long>(v));
}

void BallotTable::grow(std::size_t n) {
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() < n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(rows_.size() + 1);
    BigInt acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i < prev.size()) acc += prev[i];
      row[i] = acc;
    }
    rows_.push_back(std::move(row));
  }
}

BigInt BallotTable::b(std::size_t n, std::size_t i) {
  if (n < 1 || i < 1 || i > n) throw std::out_of_range("ballot_b index outside the triangle");
  grow(n);
  return rows_[n - 1][i - 1];
}

BigInt BallotTable::g(std::size_t n, std::size_t i) {
  if (n < 1 || i < 2 || i > n + 1) throw std::out_of_range("ballot_g index outside the triangle");
  long long u = 2 * static_cast<long long>(n) - static_cast<long long>(i) + 1;
  BigInt t = binomial(u, static_cast<long long>(n)) * (i - 1);
  return t / u;
}

namespace {

BallotTable& shared_table() {
  static BallotTable table;
  return table;
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

BigInt ballot_b(std::size_t n, std::size_t i) {
  std::lock_guard<std::mutex> lock(table_mutex());
  return shared_table().b(n, i);
}

BigInt ballot_g(std::size_t n, std::size_t i) {
  std::lock_guard<std::mutex> lock(table_mutex());
  return shared_table().g(n, i);
}

BigInt ballot_collapse(std::size_t n, std::size_t i) {
  if (i < 2 || i > n) throw std::out_of_range("ballot_collapse needs 2 <= i <= n");
  BigInt total = 0;
  for (std::size_t h = 1; h < i; ++h)
    total += binomial(static_cast<long long>(n - h), static_cast<long long>(n - i)) * ballot_b(i - 1, h);
  return total;
}

BigInt ballot_to_catalan(std::size_t m1, std::size_t j) {
  if (m1 < 1) throw std::out_of_range("ballot_to_catalan needs m1 >= 1");
  BigInt total = 0;
  for (std::size_t h = 1; h <= (j + 1) / 2 + 1; ++h) {
    BigInt term = binomial(static_cast<long long>(j + 2 - h), static_cast<long long>(h - 1)) *
                  catalan(m1 + j + 1 - h);
    total += (h % 2 == 1) ? term : -term;
  }
  return total;
}

BigInt count_q0(std::size_t n) {
  if (n < 1) throw std::out_of_range("count_q0 needs n >= 1");
  return factorial(n - 1) * (n - 1);
}

BigInt count_q1(std::size_t n) {
  if (n < 1) throw std::out_of_range("count_q1 needs n >= 1");
  return derangement(n - 1);
}

BigInt count_q2(std::size_t n) {
  if (n < 2) return 0;
  if (n == 2) return 1;
  if (n == 3) return 0;
  BigInt prev2 = 1, prev1 = 0;  // values at 2 and 3
  BigInt cur;
  for (std::size_t m = 4; m <= n; ++m) {
    cur = (m - 2) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

BigInt count_k_largest_ltr(std::size_t n, std::size_t k) {
  if (n == 0) return 1;  // the k values must appear in increasing order
  BigInt total = 0;
  for (std::size_t i = 0; i < n; ++i) total += multiset_coeff(n - i + 1, k) * ballot_b(n, i + 1);
  return total;
}

BigInt mpm_full(std::size_t m1, std::size_t p1, std::size_t m2) {
  if (m1 < 1 || p1 < 1 || m2 < 1) throw std::out_of_range("mpm shape needs m1, p1, m2 >= 1");
  BigInt total = 0;
  for (std::size_t i = 1; i <= m2; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      BigInt left = 1;  // empty index range contributes 1
      if (m1 >= 2) {
        left = 0;
        for (std::size_t l = 0; l + 2 <= m1; ++l) left += multiset_coeff(m1 - l, j + 1) * ballot_b(m1 - 1, l + 1);
      }
      BigInt right = 1;
      if (m2 - i + 1 >= 2) {
        right = 0;
        for (std::size_t k = 2; k <= m2 - i + 1; ++k)
          right += ballot_g(m2 - i, k) * multiset_coeff(k, p1 + i - j - 1);
      }
      total += binomial(static_cast<long long>(i) - 1, static_cast<long long>(j)) * left * right;
    }
  }
  return total;
}

BigInt mpm_simple(std::size_t m1, std::size_t p1, std::size_t m2) {
  if (m1 < 1 || p1 < 1 || m2 < 1) throw std::out_of_range("mpm shape needs m1, p1, m2 >= 1");
  BigInt total = 0;
  for (std::size_t i = 1; i <= m2; ++i)
    for (std::size_t j = 0; j < i; ++j)
      total += binomial(static_cast<long long>(i) - 1, static_cast<long long>(j)) * ballot_b(m1 + j + 1, m1) *
               ballot_b(m2 + p1 - j, m2 - i + 1);
  return total;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  // Newton form via divided differences, then expanded to the power basis.
  const std::size_t m = points.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  std::vector<Rational> coeffs;
  for (std::size_t i = m; i-- > 0;) {
    // coeffs <- coeffs * (x - x_i) + dd[i]
    coeffs.insert(coeffs.begin(), Rational(0));
    for (std::size_t t = 0; t + 1 < coeffs.size(); ++t) coeffs[t] -= points[i].first * coeffs[t + 1];
    coeffs[0] += dd[i];
  }
  return RationalPolynomial(std::move(coeffs));
}

int RationalPolynomial::degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

std::string RationalPolynomial::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (out.empty()) {
      if (c < 0) out += "-", c = -c;
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (i == 0 || c != 1) out += c.str();
    if (i >= 1) {
      if (c != 1) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<BigInt> catalan_decomposition(std::size_t m2, std::size_t p1) {
  if (m2 < 1 || p1 < 1) throw std::out_of_range("catalan_decomposition needs m2, p1 >= 1");
  const std::size_t d = m2;
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(d + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t t = 0; t < d; ++t) aug[r][t] = Rational(catalan(r + 1 + t));
    aug[r][d] = Rational(mpm_simple(r + 1, p1, m2));
  }

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && aug[pivot][col] == 0) ++pivot;
    if (pivot == d) throw std::logic_error("catalan_decomposition: singular system");
    std::swap(aug[col], aug[pivot]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col] / aug[col][col];
      for (std::size_t t = col; t <= d; ++t) aug[r][t] -= f * aug[col][t];
    }
  }

  std::vector<BigInt> coeffs(d);
  for (std::size_t t = 0; t < d; ++t) {
    Rational c = aug[t][d] / aug[t][t];
    if (denominator(c) != 1) throw std::logic_error("catalan_decomposition: non-integral coefficient");
    coeffs[t] = numerator(c);
  }

  for (std::size_t m1 = m2 + 1; m1 <= m2 + 3; ++m1) {
    BigInt lhs = mpm_simple(m1, p1, m2);
    BigInt rhs = 0;
    for (std::size_t t = 0; t < d; ++t) rhs += coeffs[t] * catalan(m1 + t);
    if (lhs != rhs) throw std::logic_error("catalan_decomposition: cross-check failed at m1 = " + std::to_string(m1));
  }
  return coeffs;
}

RationalPolynomial omega_poly(std::size_t m2, std::size_t t) {
  if (t >= m2) throw std::out_of_range("omega_poly needs t < m2");
  const std::size_t npts = m2 - t;
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(npts);
  for (std::size_t p1 = 1; p1 <= npts; ++p1)
    pts.emplace_back(Rational(p1), Rational(catalan_decomposition(m2, p1)[t]));
  auto poly = RationalPolynomial::interpolate(pts);

  std::size_t extra = npts + 1;
  Rational expected(catalan_decomposition(m2, extra)[t]);
  if (poly.eval(Rational(extra)) != expected)
    throw std::runtime_error("omega_poly: extra-point consistency check failed for m2 = " + std::to_string(m2) +
                             ", t = " + std::to_string(t));
  return poly;
}

}  // namespace qslab

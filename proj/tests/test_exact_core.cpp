#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "jd3/exact/big_rational.hpp"
#include "jd3/exact/qmatrix.hpp"

using jd3::BigInt;
using jd3::BigRational;
using jd3::QMatrix;

namespace {

QMatrix ints(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<BigRational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (long v : r) q.back().emplace_back(BigInt(v));
  }
  return QMatrix::from_rows(q, rows.empty() ? 0 : rows.front().size());
}

// Leibniz expansion, used as an independent determinant oracle.
BigInt leibniz_det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

QMatrix random_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, long span) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = BigRational(BigInt(static_cast<long>(g() % (2 * span + 1)) - span), BigInt(1 + static_cast<long>(g() % 3)));
  return m;
}

}  // namespace

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  const BigRational a(BigInt(6), BigInt(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  const BigRational z(BigInt(0), BigInt(-7));
  CHECK(z.numerator() == 0);
  CHECK(z.denominator() == 1);
  CHECK(z.to_string() == "0");
  CHECK(BigRational::parse("10/-4").to_string() == "-5/2");
  CHECK(BigRational::parse("7").is_integer());
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 200; ++i) {
    const BigRational a(BigInt(static_cast<long>(g() % 2001) - 1000), BigInt(1 + static_cast<long>(g() % 999)));
    const BigRational b(BigInt(static_cast<long>(g() % 2001) - 1000), BigInt(1 + static_cast<long>(g() % 999)));
    CHECK((a + b) - b == a);
    CHECK((a * b) == (b * a));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(BigRational(BigInt(1), BigInt(3)) + BigRational(BigInt(1), BigInt(6)) == BigRational(BigInt(1), BigInt(2)));
  CHECK(pow(BigRational(BigInt(-2), BigInt(3)), 3) == BigRational(BigInt(-8), BigInt(27)));
  CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
}

TEST_CASE("rank of small matrices") {
  CHECK(jd3::rank(QMatrix::identity(3)) == 3);
  CHECK(jd3::rank(ints({{1, 2}, {2, 4}})) == 1);

  std::vector<std::vector<long>> v;
  for (long node = 1; node <= 4; ++node) v.push_back({1, node, node * node, node * node * node});
  REQUIRE(leibniz_det(v) == 12);  // prod_{i<j} (j - i) for nodes 1..4
  CHECK(jd3::rank(ints(v)) == 4);

  CHECK(jd3::rank(QMatrix(0, 5)) == 0);
  CHECK(jd3::rank(QMatrix(4, 0)) == 0);
  CHECK(jd3::rank(QMatrix(3, 3)) == 0);
}

TEST_CASE("rank matches determinant nonvanishing on random square matrices") {
  std::mt19937_64 g(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + g() % 3;
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long>(g() % 5) - 2;
    const bool singular = leibniz_det(m) == 0;
    CHECK((jd3::rank(ints(m)) == n) == !singular);
  }
}

TEST_CASE("rank properties") {
  std::mt19937_64 g(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + g() % 6, c = 1 + g() % 6, k = 1 + g() % 3;
    // Product of r x k and k x c has rank at most k.
    const QMatrix low = random_matrix(g, r, k, 4) * random_matrix(g, k, c, 4);
    CHECK(jd3::rank(low) <= k);
    const QMatrix m = random_matrix(g, r, c, 3);
    const std::size_t rk = jd3::rank(m);
    CHECK(rk == jd3::rank(m.transpose()));
    CHECK(rk + jd3::nullspace_basis(m).size() == c);

    QMatrix permuted(0, c);
    for (std::size_t i = r; i-- > 0;) {
      std::vector<BigRational> row(m.row(i).begin(), m.row(i).end());
      for (auto& x : row) x *= BigRational(BigInt(-3), BigInt(2));
      permuted.append_row(row);
    }
    CHECK(jd3::rank(permuted) == rk);
    CHECK(jd3::row_space_equal(m, permuted));
  }
}

TEST_CASE("row space equality") {
  CHECK(jd3::row_space_equal(ints({{1, 0}}), ints({{2, 0}})));
  CHECK_FALSE(jd3::row_space_equal(ints({{1, 0}}), ints({{0, 1}})));
  CHECK(jd3::row_space_equal(ints({{1, 1}, {1, -1}}), QMatrix::identity(2)));
  CHECK_FALSE(jd3::row_space_equal(ints({{1, 1}}), QMatrix::identity(2)));
  CHECK_THROWS_AS(jd3::row_space_equal(ints({{1, 0}}), ints({{1, 0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(jd3::stack(ints({{1, 0}}), ints({{1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("nullspace bases") {
  const auto zero = jd3::nullspace_basis(QMatrix(2, 2));
  REQUIRE(zero.size() == 2);
  CHECK(zero[0] == std::vector<BigRational>{1, 0});
  CHECK(zero[1] == std::vector<BigRational>{0, 1});

  const auto line = jd3::nullspace_basis(ints({{1, 1}}));
  REQUIRE(line.size() == 1);
  CHECK(line[0] == std::vector<BigRational>{1, -1});

  // x1 - x2 - x6, x1 - x3 + x5, x4 + x5 + x6 in x1..x6.
  const QMatrix rel = ints({{1, -1, 0, 0, 0, -1}, {1, 0, -1, 0, 1, 0}, {0, 0, 0, 1, 1, 1}});
  const auto ns = jd3::nullspace_basis(rel);
  REQUIRE(ns.size() == 3);
  for (const auto& v : ns)
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      BigRational dot;
      for (std::size_t c = 0; c < 6; ++c) dot += rel(r, c) * v[c];
      CHECK(dot.is_zero());
    }
}

TEST_CASE("reduced echelon form and inverse") {
  const auto e = jd3::row_echelon(ints({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}}));
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced.row(0)[2] == BigRational(-1));
  CHECK(e.reduced.row(1)[2] == BigRational(2));

  const QMatrix m = ints({{2, 1}, {7, 4}});
  CHECK(jd3::inverse(m) * m == QMatrix::identity(2));
  CHECK_THROWS_AS(jd3::inverse(ints({{1, 2}, {2, 4}})), std::domain_error);
}

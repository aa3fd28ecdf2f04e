#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jd3/exact/big_rational.hpp"

namespace jd3 {

/// Dense row-major matrix of exact rationals.  0xN and Nx0 shapes are legal.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix from_rows(const std::vector<std::vector<BigRational>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<const BigRational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<BigRational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const BigRational> values) {
    if (rows_ == 0 && entries_.empty() && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("QMatrix::append_row: width mismatch");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  [[nodiscard]] QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> entries_;
};

/// Rows of `a` followed by rows of `b`.
inline QMatrix stack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("stack: column counts differ (" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.cols()) + ")");
  QMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) std::ranges::copy(a.row(r), m.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r) std::ranges::copy(b.row(r), m.row(a.rows() + r).begin());
  return m;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("QMatrix product: shape mismatch");
  QMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

namespace detail {

inline bool make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return false;
  // leading entry positive
  const auto lead = std::ranges::find_if(v, [](const BigInt& x) { return x != 0; });
  if (*lead < 0) g = -g;
  if (g != 1)
    for (auto& x : v)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return true;
}

inline std::vector<BigInt> integer_row(std::span<const BigRational> row) {
  BigInt l = 1;
  for (const auto& x : row)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  std::vector<BigInt> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero()) continue;
    BigInt scale;
    mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), row[i].raw().get_den_mpz_t());
    out[i] = row[i].raw().get_num() * scale;
  }
  return out;
}

}  // namespace detail

/// Reduced row echelon form of a row space: `reduced` holds one row per pivot,
/// each with a leading 1 at `pivots[i]` and zeros in every other pivot column.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const noexcept { return pivots.size(); }
};

/// Incremental fraction-free echelon basis over the integers.  Rows are kept
/// primitive (content 1, positive leading entry) and sorted by pivot column.
class IntegerEchelon {
public:
  explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }

  /// Returns true iff the row was independent of the rows inserted so far.
  bool insert(std::vector<BigInt> r) {
    if (r.size() != cols_) throw std::invalid_argument("IntegerEchelon: width mismatch");
    if (!detail::make_primitive(r)) return false;
    BigInt bp, f, g, t;
    for (const auto& b : basis_) {
      const BigInt& rp = r[b.pivot];
      if (rp == 0) continue;
      mpz_gcd(g.get_mpz_t(), b.v[b.pivot].get_mpz_t(), rp.get_mpz_t());
      mpz_divexact(bp.get_mpz_t(), b.v[b.pivot].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(f.get_mpz_t(), rp.get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = 0; j < cols_; ++j) {
        if (r[j] != 0 && bp != 1) r[j] *= bp;
        if (j >= b.pivot && b.v[j] != 0) {
          mpz_mul(t.get_mpz_t(), f.get_mpz_t(), b.v[j].get_mpz_t());
          r[j] -= t;
        }
      }
      if (!detail::make_primitive(r)) return false;
    }
    const auto lead = static_cast<std::size_t>(
        std::ranges::find_if(r, [](const BigInt& x) { return x != 0; }) - r.begin());
    const auto pos = std::ranges::upper_bound(basis_, lead, {}, &Row::pivot);
    basis_.insert(pos, Row{lead, std::move(r)});
    return true;
  }

  bool insert(std::span<const BigRational> row) { return insert(detail::integer_row(row)); }

  [[nodiscard]] Echelon reduced() const {
    Echelon e{QMatrix(basis_.size(), cols_), {}};
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& b = basis_[i];
      for (std::size_t j = b.pivot; j < cols_; ++j)
        if (b.v[j] != 0) e.reduced(i, j) = BigRational(b.v[j], b.v[b.pivot]);
      e.pivots.push_back(b.pivot);
    }
    for (std::size_t i = basis_.size(); i-- > 0;) {
      const std::size_t p = e.pivots[i];
      for (std::size_t k = 0; k < i; ++k) {
        const BigRational f = e.reduced(k, p);
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < cols_; ++j)
          if (!e.reduced(i, j).is_zero()) e.reduced(k, j) -= f * e.reduced(i, j);
      }
    }
    return e;
  }

private:
  struct Row {
    std::size_t pivot;
    std::vector<BigInt> v;
  };
  std::size_t cols_;
  std::vector<Row> basis_;
};

/// Row echelon data of the row space of `m`; pivots are chosen as the first
/// nonzero column, so the result is independent of row order.
inline Echelon row_echelon(const QMatrix& m) {
  IntegerEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.reduced();
}

inline std::size_t rank(const QMatrix& m) {
  IntegerEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.rank();
}

inline bool row_space_equal(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("row_space_equal: column counts differ (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.cols()) + ")");
  IntegerEchelon ech(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) ech.insert(a.row(r));
  const std::size_t ra = ech.rank();
  for (std::size_t r = 0; r < b.rows(); ++r)
    if (ech.insert(b.row(r))) return false;
  return rank(b) == ra;
}

/// Basis of {v : m v = 0}, returned as the rows of a reduced echelon matrix.
inline std::vector<std::vector<BigRational>> nullspace_basis(const QMatrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  QMatrix raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    raw.append_row(v);
  }
  if (raw.rows() == 0) return {};
  const Echelon n = row_echelon(raw);
  std::vector<std::vector<BigRational>> out;
  for (std::size_t i = 0; i < n.rank(); ++i) out.emplace_back(n.reduced.row(i).begin(), n.reduced.row(i).end());
  return out;
}

/// Inverse of a square matrix; throws std::domain_error if singular.
inline QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const BigRational s = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= s;
      inv(c, j) /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const BigRational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace jd3

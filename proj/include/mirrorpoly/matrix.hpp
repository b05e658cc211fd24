#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "mirrorpoly/rational.hpp"

namespace mirrorpoly {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

/// Dense row-major matrix with an explicit shape. Used with `Int` for lattice
/// work and with `Rational` for exact elimination.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Rows must all have length `cols`; `cols` is only consulted when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> row_vec(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  std::vector<T> col_vec(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if constexpr (std::is_same_v<T, Int>)
            out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
          else
            out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline RatVec to_rational(std::span<const Int> v) { return RatVec(v.begin(), v.end()); }

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

inline Rational dot(std::span<const Int> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * Rational(a[i]);
  return s;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Matrix times column vector.
inline IntVec mat_vec(const IntMatrix& m, std::span<const Int> v) {
  IntVec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
  return out;
}

inline RatVec mat_vec(const RatMatrix& m, std::span<const Rational> v) {
  RatVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
  return out;
}

inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = gcd(g, x);
  return g;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

/// Smallest positive multiple of `v` with integer entries.
inline IntVec clear_denominators(std::span<const Rational> v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(checked::mul(x.num(), l / x.den()));
  return out;
}

inline std::optional<IntVec> to_integer(std::span<const Rational> v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) return std::nullopt;
    out.push_back(x.num());
  }
  return out;
}

template <class T>
std::string to_string(std::span<const T> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, Rational>)
      s += v[i].str();
    else
      s += std::to_string(v[i]);
  }
  return s + ")";
}

template <class T>
std::string to_string(const std::vector<T>& v) {
  return to_string(std::span<const T>(v));
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination over the rationals.

struct Echelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  Rational det_factor{1};            // product of scalings/swaps (square inputs)
};

inline Echelon row_reduce(RatMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      e.det_factor = -e.det_factor;
    }
    Rational piv = m(r, c);
    e.det_factor *= piv;
    for (auto& x : m.row(r)) x /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

inline Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  auto e = row_reduce(m);
  if (e.pivots.size() < m.rows()) return Rational(0);
  return e.det_factor;
}

inline Int determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.num();
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  auto e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Basis of { x : m x = 0 } over the rationals.
inline std::vector<RatVec> nullspace(const RatMatrix& m) {
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves x * B = v, where the rows of B are the (independent) basis vectors.
/// Returns nullopt when v is outside their rational span.
inline std::optional<RatVec> solve_in_row_span(const RatMatrix& basis, std::span<const Rational> v) {
  const std::size_t r = basis.rows(), n = basis.cols();
  RatMatrix aug(n, r + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug(j, i) = basis(i, j);
    aug(j, r) = v[j];
  }
  auto e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == r) return std::nullopt;
  if (e.pivots.size() < r) throw DomainError("basis vectors are linearly dependent");
  RatVec x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = e.reduced(i, r);
  return x;
}

}  // namespace mirrorpoly

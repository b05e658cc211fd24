#pragma once

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <vector>

#include "mirrorpoly/matrix.hpp"

namespace mirrorpoly {

namespace detail {

/// Nearest integer to a / b, b != 0.
inline Int round_div_impl(Int a, Int b) {
  Int q = a / b, r = a % b;
  if (2 * std::abs(r) > std::abs(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
  return q;
}

/// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, checked::sub(old_r, checked::mul(q, r)));
    std::tie(old_s, s) = std::make_tuple(s, checked::sub(old_s, checked::mul(q, s)));
    std::tie(old_t, t) = std::make_tuple(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// row_dst += k * row_src
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked::add(m(dst, c), checked::mul(k, m(src, c)));
}

inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked::add(m(r, dst), checked::mul(k, m(r, src)));
}

inline void negate_row(IntMatrix& m, std::size_t r) {
  for (auto& x : m.row(r)) x = checked::neg(x);
}

// (row_i, row_j) <- (x row_i + y row_j, u row_i + v row_j)
inline void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, Int x, Int y, Int u, Int v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int a = m(i, c), b = m(j, c);
    m(i, c) = checked::add(checked::mul(x, a), checked::mul(y, b));
    m(j, c) = checked::add(checked::mul(u, a), checked::mul(v, b));
  }
}

}  // namespace detail

struct HermiteForm {
  IntMatrix h;        // row-style Hermite normal form
  IntMatrix u;        // unimodular, h = u * input
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: h = u * m with u unimodular, the nonzero
/// rows of h on top in echelon form, pivots positive, and entries above each
/// pivot reduced into [0, pivot).
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on the column: the smallest nonzero entry becomes the pivot and
    // reduces the others by rounded quotients. Keeps u far smaller than
    // pairwise gcd combinations do.
    while (true) {
      std::size_t p = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (p == h.rows() || std::abs(h(i, c)) < std::abs(h(p, c)))) p = i;
      if (p == h.rows()) break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = detail::round_div_impl(h(i, c), h(r, c));
        detail::add_row(h, i, r, -q);
        detail::add_row(u, i, r, -q);
        done = done && h(i, c) == 0;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      detail::negate_row(h, r);
      detail::negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      detail::add_row(h, i, r, -q);
      detail::add_row(u, i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

struct SmithForm {
  IntMatrix s;  // diagonal, s_ii >= 0, s_ii | s_(i+1)(i+1)
  IntMatrix u;  // unimodular, rows
  IntMatrix v;  // unimodular, columns; s = u * m * v
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = out.s;
  const std::size_t rows = s.rows(), cols = s.cols();

  auto move_min_to = [&](std::size_t t, bool whole_block) {
    std::size_t bi = rows, bj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (!whole_block && i != t && j != t) continue;
        Int v = std::abs(s(i, j));
        if (v != 0 && (best == 0 || v < best)) best = v, bi = i, bj = j;
      }
    if (best == 0) return false;
    s.swap_rows(t, bi);
    out.u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    out.v.swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!move_min_to(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = s(i, t) / s(t, t);
        detail::add_row(s, i, t, -q);
        detail::add_row(out.u, i, t, -q);
        clean = clean && s(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = s(t, j) / s(t, t);
        detail::add_col(s, j, t, -q);
        detail::add_col(out.v, j, t, -q);
        clean = clean && s(t, j) == 0;
      }
      if (!clean) {
        move_min_to(t, false);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            detail::add_row(s, t, i, 1);
            detail::add_row(out.u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      detail::negate_row(s, t);
      detail::negate_row(out.u, t);
    }
  }
  return out;
}

/// Hermite-reduced basis (rows) of the lattice spanned by `generators` in Z^n.
inline IntMatrix lattice_basis(const std::vector<IntVec>& generators, std::size_t n) {
  auto hf = hermite_normal_form(IntMatrix::from_rows(generators, n));
  IntMatrix b(hf.rank, n);
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = hf.h(i, j);
  return b;
}

/// Hermite-reduced basis (rows) of { x in Z^cols : e x = 0 }.
inline IntMatrix integer_kernel(const IntMatrix& e) {
  auto hf = hermite_normal_form(e.transpose());
  std::vector<IntVec> kernel;
  for (std::size_t i = hf.rank; i < hf.u.rows(); ++i) kernel.push_back(hf.u.row_vec(i));
  return lattice_basis(kernel, e.cols());
}

}  // namespace mirrorpoly

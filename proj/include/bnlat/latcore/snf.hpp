#pragma once

#include <optional>
#include <vector>

#include "bnlat/latcore/linalg.hpp"

namespace bnlat {

/// left * M * right == diag(diagonal) padded with zeros, d_i | d_{i+1}.
struct SNFResult {
  IntVector diagonal;  // length min(rows, cols), nonnegative
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal) r += d != 0;
    return r;
  }
};

inline SNFResult smith_normal_form(const IntMatrix& matrix) {
  const std::size_t m = matrix.rows();
  const std::size_t n = matrix.cols();
  IntMatrix d = matrix;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (!piv || abs(d(i, j)) < abs(d(piv->first, piv->second))))
            piv = std::make_pair(i, j);
      if (!piv) goto finished;
      d.swap_rows(t, piv->first);
      left.swap_rows(t, piv->first);
      d.swap_cols(t, piv->second);
      right.swap_cols(t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        left.add_row(i, t, -q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        right.add_col(j, t, -q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n && divisible; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, Integer(1));
            left.add_row(t, i, Integer(1));
            divisible = false;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }
finished:
  SNFResult res{IntVector(steps), std::move(left), std::move(right)};
  for (std::size_t i = 0; i < steps; ++i) res.diagonal[i] = d(i, i);
  return res;
}

/// Row Hermite normal form of a full-row-rank integer matrix: echelon
/// with positive pivots and entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_normal_form(const IntMatrix& rows) {
  IntMatrix h = rows;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
        done = done && h(i, c) == 0;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
    pivot_cols.push_back(c);
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i) out.set_row(i, h.row(i));
  return out;
}

/// Basis (as rows, in Hermite normal form) of {x in Z^n : A x = 0}.
/// The result is automatically saturated in Z^n.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  const SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix k(n - r, n);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(j - r, i) = snf.right(i, j);
  return hermite_normal_form(k);
}

/// Extends a primitive set of rows to a unimodular matrix whose leading
/// rows are exactly the given ones. Throws InputError if the rows do not
/// span a primitive sublattice.
inline IntMatrix complete_to_basis(const IntMatrix& rows) {
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  const SNFResult snf = smith_normal_form(rows);
  for (std::size_t i = 0; i < k; ++i)
    if (snf.diagonal[i] != 1)
      throw InputError("rows do not span a primitive sublattice");
  // rows = left^{-1} [I 0] right^{-1}; the trailing rows of right^{-1}
  // complete the basis.
  const IntMatrix rinv = inverse_unimodular(snf.right);
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < k; ++i) out.set_row(i, rows.row(i));
  for (std::size_t i = k; i < n; ++i) out.set_row(i, rinv.row(i));
  return out;
}

}  // namespace bnlat

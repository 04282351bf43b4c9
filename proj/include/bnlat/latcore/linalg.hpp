#pragma once

#include <optional>
#include <vector>

#include "bnlat/latcore/matrix.hpp"

namespace bnlat {

/// Fraction-free Bareiss elimination. Every intermediate division is exact.
inline Integer determinant(IntMatrix m) {
  if (!m.is_square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact inverse over the rationals; nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.is_square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = -m(i, k);
      m.add_row(i, k, f);
      inv.add_row(i, k, f);
    }
  }
  return inv;
}

inline std::optional<RatMatrix> inverse(const IntMatrix& a) {
  return inverse(to_rational(a));
}

/// Inverse of a unimodular integer matrix, checked to be integral.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  auto inv = inverse(a);
  if (!inv) throw InvariantError("matrix is singular, expected unimodular");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_integer((*inv)(i, j));
  return out;
}

inline std::size_t matrix_rank(const IntMatrix& a) {
  RatMatrix m = to_rational(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (m(i, c) != 0) m.add_row(i, r, -m(i, c) / m(r, c));
    ++r;
  }
  return r;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by symmetric elimination over the rationals.
/// When every remaining diagonal entry vanishes, a congruence
/// e_i -> e_i + e_j creates the nonzero pivot 2 g_ij.
inline Signature signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw InputError("signature: Gram not symmetric");
  RatMatrix m = to_rational(gram);
  const std::size_t n = m.rows();
  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (m(i, j) != 0) off = std::make_pair(i, j);
      if (!off) {
        sig.zero += n - k;
        break;
      }
      m.add_row(off->first, off->second, Rational(1));
      m.add_col(off->first, off->second, Rational(1));
      p = off->first;
    }
    m.swap_rows(k, p);
    m.swap_cols(k, p);
    const Rational pivot = m(k, k);
    (pivot > 0 ? sig.positive : sig.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = -m(i, k) / pivot;
      m.add_row(i, k, f);
      m.add_col(i, k, f);
    }
    ++k;
  }
  return sig;
}

/// Completed-square decomposition of a positive definite form:
/// x^T G x = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
struct CompletedSquares {
  RatVector d;
  RatMatrix mu;  // strictly upper triangular part is meaningful
};

inline CompletedSquares completed_squares(const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix m = gram;
  CompletedSquares cs{RatVector(n), RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) <= 0) throw NotDefiniteError("form is not positive definite");
    cs.d[i] = m(i, i);
    for (std::size_t j = i + 1; j < n; ++j) cs.mu(i, j) = m(i, j) / m(i, i);
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c)
        m(r, c) -= m(r, i) * m(i, c) / m(i, i);
  }
  return cs;
}

}  // namespace bnlat

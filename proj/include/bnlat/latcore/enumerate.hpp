#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "bnlat/latcore/lattice.hpp"
#include "bnlat/latcore/snf.hpp"

namespace bnlat {

namespace detail {

/// Visits every integer vector k with (k - center)^T P (k - center) == target,
/// P positive definite. Branch and bound over the completed squares with
/// exact rational budgets; each coordinate range comes from an integer
/// square root and is then filtered exactly.
inline void for_each_ellipsoid_point(const RatMatrix& p, const RatVector& center,
                                     const Rational& target,
                                     const std::function<void(const IntVector&)>& visit) {
  const std::size_t n = p.rows();
  if (target < 0) return;
  if (n == 0) {
    if (target == 0) visit({});
    return;
  }
  const CompletedSquares cs = completed_squares(p);
  IntVector k(n);
  RatVector y(n);  // k - center

  std::function<void(std::size_t, const Rational&)> level =
      [&](std::size_t i, const Rational& used) {
        Rational shift = 0;
        for (std::size_t j = i + 1; j < n; ++j) shift += cs.mu(i, j) * y[j];
        const Rational mid = center[i] - shift;
        const Rational room = (target - used) / cs.d[i];
        const Integer reach = isqrt(floor(room)) + 1;
        const Integer base = floor(mid);
        for (Integer x = base - reach; x <= base + reach + 1; ++x) {
          const Rational z = Rational(x) - mid;
          const Rational term = cs.d[i] * z * z;
          if (used + term > target) continue;
          k[i] = x;
          y[i] = Rational(x) - center[i];
          if (i == 0) {
            if (used + term == target) visit(k);
          } else {
            level(i - 1, used + term);
          }
        }
      };
  level(n - 1, Rational(0));
}

inline void require_definite_rank(const IntegralLattice& l, const char* op) {
  l.require_nondegenerate(op);
  if (!is_positive_definite(l))
    throw NotDefiniteError(std::string(op) + ": lattice is not positive definite");
}

}  // namespace detail

/// All v with v.v == norm, one representative of each {v, -v} (positive
/// leading coordinate), sorted lexicographically. norm == 0 yields just
/// the zero vector.
inline std::vector<LatticeVector> enumerate_vectors(const IntegralLattice& l,
                                                    const Integer& norm) {
  detail::require_definite_rank(l, "enumerate_vectors");
  if (norm < 0) throw InputError("enumerate_vectors: negative norm");
  if (norm == 0) return {LatticeVector(IntVector(l.rank(), Integer(0)))};
  std::vector<LatticeVector> out;
  detail::for_each_ellipsoid_point(
      to_rational(l.gram()), RatVector(l.rank(), Rational(0)), Rational(norm),
      [&](const IntVector& k) {
        LatticeVector v(k);
        if (v.leading_sign() > 0) out.push_back(std::move(v));
      });
  std::sort(out.begin(), out.end());
  return out;
}

/// All v with v.f == pairing and v.v == norm, sorted lexicographically.
/// Requires the orthogonal complement of f to be definite (of either
/// sign); this is what makes the solution set finite. Writing
/// v = v0 + K k with K a basis of the integer solutions of v.f = 0, the
/// condition becomes an inhomogeneous definite quadratic equation in k,
/// which is completed to a centred ellipsoid and enumerated exactly.
inline std::vector<LatticeVector> vectors_with_pairing(const IntegralLattice& l,
                                                       const LatticeVector& f,
                                                       const Integer& pairing,
                                                       const Integer& norm) {
  l.require_nondegenerate("vectors_with_pairing");
  l.check(f);
  const std::size_t n = l.rank();
  IntMatrix row(1, n);
  row.set_row(0, mul(f.coords, l.gram()));
  const SNFResult snf = smith_normal_form(row);
  const Integer g = snf.diagonal.empty() ? Integer(0) : snf.diagonal[0];
  if (g == 0) throw InputError("vectors_with_pairing: fixed vector is zero");
  if (pairing % g != 0) return {};

  // row * right = left^{-1} [g 0 ... 0], left = +-1.
  const Integer scale = pairing / g * snf.left(0, 0);
  IntVector v0(n);
  for (std::size_t i = 0; i < n; ++i) v0[i] = snf.right(i, 0) * scale;
  IntMatrix kernel(n, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) kernel(i, j - 1) = snf.right(i, j);

  const IntMatrix kt = kernel.transpose();
  IntMatrix q = kt * l.gram() * kernel;
  IntVector lin = mul(kt * l.gram(), v0);
  Integer rhs = norm - bilinear(l.gram(), v0, v0);
  if (n > 1) {
    const Signature sig = signature(q);
    if (sig.negative == n - 1) {
      q = -q;
      for (auto& x : lin) x = -x;
      rhs = -rhs;
    } else if (sig.positive != n - 1) {
      throw NotDefiniteError(
          "vectors_with_pairing: complement of the fixed vector is not definite");
    }
  }

  std::vector<LatticeVector> out;
  if (n == 1) {
    if (rhs == 0) out.emplace_back(v0);
    return out;
  }
  // q(k) + 2 lin.k == rhs  <=>  q(k - c) == rhs + lin^T q^{-1} lin, c = -q^{-1} lin
  const RatMatrix qr = to_rational(q);
  const RatMatrix qinv = *inverse(qr);
  RatVector linr(lin.begin(), lin.end());
  RatVector centre = mul(qinv, linr);
  for (auto& c : centre) c = -c;
  const Rational target = Rational(rhs) + dot(linr, mul(qinv, linr));
  detail::for_each_ellipsoid_point(qr, centre, target, [&](const IntVector& k) {
    IntVector v = v0;
    const IntVector add = mul(kernel, k);
    for (std::size_t i = 0; i < n; ++i) v[i] += add[i];
    out.emplace_back(std::move(v));
  });
  for (const auto& v : out)
    if (l.norm(v) != norm || l.pair(v, f) != pairing)
      throw InvariantError("vectors_with_pairing produced a wrong vector");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bnlat

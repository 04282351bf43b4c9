#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bnlat/latcore/enumerate.hpp"

namespace bnlat {

inline constexpr std::size_t kMaxIsometryRank = 4;

struct IsometryResult {
  bool isometric = false;
  /// Row i is the image of basis vector i of the first lattice, written in
  /// the basis of the second: witness * G2 * witness^T == G1.
  std::optional<IntMatrix> witness;
};

/// Isometry test by matching basis images among short vectors.
///
/// Without marked vectors both lattices must be definite. With a marked
/// pair (m1, m2) the witness must send m1 to m2; then only the orthogonal
/// complement of m2 has to be definite, which also covers rank-2
/// hyperbolic lattices with a distinguished class of positive norm.
inline IsometryResult is_isometric_definite(
    const IntegralLattice& a, const IntegralLattice& b,
    const std::optional<std::pair<LatticeVector, LatticeVector>>& marked = std::nullopt) {
  const std::size_t n = a.rank();
  if (n > kMaxIsometryRank || b.rank() > kMaxIsometryRank)
    throw BoundExceededError("is_isometric_definite: rank above 4 is not supported");
  a.require_nondegenerate("is_isometric_definite");
  b.require_nondegenerate("is_isometric_definite");
  if (n != b.rank() || a.det() != b.det() || signature(a) != signature(b)) return {};
  if (n == 0) return {true, IntMatrix(0, 0)};

  std::vector<std::vector<LatticeVector>> candidates(n);
  if (marked) {
    const auto& [m1, m2] = *marked;
    a.check(m1);
    b.check(m2);
    if (a.norm(m1) != b.norm(m2)) return {};
    for (std::size_t i = 0; i < n; ++i) {
      const LatticeVector e = LatticeVector::basis(n, i);
      candidates[i] = vectors_with_pairing(b, m2, a.pair(e, m1), a(i, i));
    }
  } else {
    const bool negative = is_negative_definite(b);
    if (!negative && !is_positive_definite(b))
      throw NotDefiniteError("is_isometric_definite: lattices are indefinite");
    const IntegralLattice bp = negative ? IntegralLattice(-b.gram()) : b;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer target = negative ? Integer(-a(i, i)) : a(i, i);
      for (const auto& v : enumerate_vectors(bp, target)) {
        candidates[i].push_back(v);
        candidates[i].push_back(-v);
      }
    }
  }

  std::vector<const LatticeVector*> chosen(n, nullptr);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (const auto& c : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = b.pair(*chosen[j], c) == a(j, i);
      if (!ok) continue;
      chosen[i] = &c;
      if (search(i + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return {};

  IntMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) w.set_row(i, chosen[i]->coords);
  if (congruence(w, b.gram()) != a.gram())
    throw InvariantError("isometry witness does not preserve the Gram matrix");
  if (marked && LatticeVector(mul(marked->first.coords, w)) != marked->second)
    throw InvariantError("isometry witness does not respect the marked vectors");
  return {true, std::move(w)};
}

}  // namespace bnlat

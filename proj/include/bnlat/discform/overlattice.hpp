#pragma once

#include <vector>

#include "bnlat/discform/isotropic.hpp"

namespace bnlat {

/// Finite-index overlattice M ⊇ L. `basis` holds the rows of an M-basis in
/// the rational coordinates of L; `embedding` writes the L-basis in the
/// M-basis (embedding * basis == I).
struct Overlattice {
  IntegralLattice lattice;
  Integer index = 1;
  RatMatrix basis;
  IntMatrix embedding;
  Subgroup subgroup;

  /// Whether the rational vector v (L-coordinates) lies in M.
  bool contains(const RatVector& v) const {
    const auto inv = inverse(basis);
    const RatVector c = mul(v, *inv);
    for (const auto& x : c)
      if (!is_integer(x)) return false;
    return true;
  }
};

/// Overlattice L + <lifts of H> for a subgroup H of the discriminant group.
inline Overlattice overlattice_from_subgroup(const IntegralLattice& l,
                                             const DiscriminantGroup& g,
                                             const Subgroup& h) {
  const std::size_t n = l.rank();
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  for (const auto& gen : h.generators) rows.push_back(g.lift(gen));
  Integer denom = 1;
  for (const auto& r : rows)
    for (const auto& x : r) denom = lcm(denom, boost::multiprecision::denominator(x));
  IntMatrix scaled(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = to_integer(rows[i][j] * Rational(denom));
  const IntMatrix hnf = hermite_normal_form(scaled);
  if (hnf.rows() != n) throw InvariantError("overlattice basis has wrong rank");

  Overlattice m;
  m.basis = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.basis(i, j) = Rational(hnf(i, j), denom);
  const RatMatrix gm = m.basis * to_rational(l.gram()) * m.basis.transpose();
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = to_integer(gm(i, j));
  m.lattice = IntegralLattice(gram);
  m.index = h.order();
  const RatMatrix emb = *inverse(m.basis);
  m.embedding = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.embedding(i, j) = to_integer(emb(i, j));
  m.subgroup = h;
  if (m.lattice.det() * m.index * m.index != l.det())
    throw InvariantError("overlattice determinant does not match the index");
  return m;
}

/// One even overlattice per isotropic subgroup, trivial one first.
inline std::vector<Overlattice> even_overlattices(const IntegralLattice& l,
                                                  long long bound = kDefaultSubgroupBound) {
  const FiniteQuadraticForm f = discriminant_quadratic_form(l);
  std::vector<Overlattice> out;
  for (const Subgroup& h : isotropic_subgroups(f, bound)) {
    Overlattice m = overlattice_from_subgroup(l, f.group, h);
    if (!is_even(m.lattice)) throw InvariantError("isotropic subgroup gave an odd overlattice");
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace bnlat

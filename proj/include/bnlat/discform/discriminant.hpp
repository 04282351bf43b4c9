#pragma once

#include <optional>
#include <vector>

#include "bnlat/latcore.hpp"

namespace bnlat {

/// Finite abelian group L^vee / L as the cokernel of the Gram matrix,
/// decomposed as Z/d_1 + ... + Z/d_k with d_i > 1 and d_i | d_{i+1}.
///
/// Generator lifts are rational vectors in the coordinates of the lattice
/// basis, so pairings are plain x^T G y. An element is represented by its
/// coefficient vector a with 0 <= a_i < d_i.
struct DiscriminantGroup {
  IntVector invariants;
  std::vector<RatVector> generators;
  IntMatrix gram;                  // of the source lattice
  IntMatrix cokernel_transform;    // maps G*y to generator coefficients

  std::size_t ngens() const { return invariants.size(); }

  Integer order() const {
    Integer o = 1;
    for (const auto& d : invariants) o *= d;
    return o;
  }
  Integer exponent() const { return invariants.empty() ? Integer(1) : invariants.back(); }

  /// Rational lift of the element with coefficients a.
  RatVector lift(const IntVector& a) const {
    RatVector v(gram.rows(), Rational(0));
    for (std::size_t i = 0; i < ngens(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rational(a[i]) * generators[i][j];
    return v;
  }

  /// Coefficients of a dual vector y (G y integral).
  IntVector coordinates(const RatVector& y) const {
    const RatVector gy = mul(to_rational(gram), y);
    IntVector z(gy.size());
    for (std::size_t i = 0; i < gy.size(); ++i) z[i] = to_integer(gy[i]);
    const std::size_t n = gram.rows();
    const std::size_t offset = n - ngens();
    IntVector a(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += cokernel_transform(offset + i, j) * z[j];
      a[i] = mod(s, invariants[i]);
    }
    return a;
  }

  IntVector add(const IntVector& a, const IntVector& b) const {
    IntVector c(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) c[i] = mod(Integer(a[i] + b[i]), invariants[i]);
    return c;
  }
  IntVector scale(const IntVector& a, const Integer& k) const {
    IntVector c(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) c[i] = mod(Integer(a[i] * k), invariants[i]);
    return c;
  }

  /// Mixed-radix index of an element, 0 <= index < order().
  std::size_t index(const IntVector& a) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < ngens(); ++i)
      idx = idx * static_cast<std::size_t>(invariants[i]) + static_cast<std::size_t>(a[i]);
    return idx;
  }
  IntVector element(std::size_t idx) const {
    IntVector a(ngens());
    for (std::size_t i = ngens(); i-- > 0;) {
      const auto d = static_cast<std::size_t>(invariants[i]);
      a[i] = idx % d;
      idx /= d;
    }
    return a;
  }
};

inline DiscriminantGroup discriminant_group(const IntegralLattice& l) {
  l.require_nondegenerate("discriminant_group");
  const SNFResult snf = smith_normal_form(l.gram());
  DiscriminantGroup g;
  g.gram = l.gram();
  g.cokernel_transform = snf.left;
  const std::size_t n = l.rank();
  std::size_t first = 0;
  while (first < n && snf.diagonal[first] == 1) ++first;
  for (std::size_t i = first; i < n; ++i) {
    const Integer& d = snf.diagonal[i];
    g.invariants.push_back(d);
    RatVector lift(n);
    for (std::size_t j = 0; j < n; ++j) lift[j] = Rational(snf.right(j, i), d);
    g.generators.push_back(std::move(lift));
  }
  if (g.order() != abs(l.det()))
    throw InvariantError("discriminant group order differs from |det|");
  return g;
}

/// Bilinear form b with values in Q/Z and, for even lattices, quadratic
/// refinement q with values in Q/2Z, both on generator lifts.
struct FiniteQuadraticForm {
  DiscriminantGroup group;
  RatMatrix bilinear;                   // entries in [0, 1)
  std::optional<RatVector> quadratic;   // entries in [0, 2)

  bool has_quadratic() const { return quadratic.has_value(); }

  Rational b(const IntVector& x, const IntVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (x[i] != 0 && y[j] != 0) s += Rational(x[i] * y[j]) * bilinear(i, j);
    return mod(s, Integer(1));
  }

  Rational q(const IntVector& x) const {
    if (!quadratic) throw InputError("quadratic form undefined on an odd lattice");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      s += Rational(x[i] * x[i]) * (*quadratic)[i];
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[j] != 0) s += 2 * Rational(x[i] * x[j]) * bilinear(i, j);
    }
    return mod(s, Integer(2));
  }
};

namespace detail {
inline FiniteQuadraticForm build_form(const IntegralLattice& l, bool with_quadratic) {
  FiniteQuadraticForm f{discriminant_group(l), RatMatrix(), std::nullopt};
  const std::size_t k = f.group.ngens();
  const RatMatrix g = to_rational(l.gram());
  f.bilinear = RatMatrix(k, k);
  RatVector quad(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rational v = bilinear(g, f.group.generators[i], f.group.generators[j]);
      f.bilinear(i, j) = mod(v, Integer(1));
      if (i == j) quad[i] = mod(v, Integer(2));
    }
  if (with_quadratic) f.quadratic = std::move(quad);
  return f;
}
}  // namespace detail

/// Bilinear-only discriminant form; valid for odd lattices too.
inline FiniteQuadraticForm discriminant_bilinear_form(const IntegralLattice& l) {
  return detail::build_form(l, false);
}

inline FiniteQuadraticForm discriminant_quadratic_form(const IntegralLattice& l) {
  if (!is_even(l))
    throw InputError("discriminant_quadratic_form: lattice is odd, only the bilinear form exists");
  return detail::build_form(l, true);
}

}  // namespace bnlat

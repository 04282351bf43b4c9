#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnlat/latcore.hpp"

namespace bnlat {

/// Positive definite lattice with a class h2 of norm 3 and optionally a
/// marking T spanning a primitive copy of (3,4;4,10) together with h2.
struct MarkedCubicLattice {
  IntegralLattice lattice;
  LatticeVector h2;
  std::optional<LatticeVector> marking;

  MarkedCubicLattice() = default;
  MarkedCubicLattice(IntegralLattice l, LatticeVector h, std::optional<LatticeVector> t = {})
      : lattice(std::move(l)), h2(std::move(h)), marking(std::move(t)) {
    lattice.require_nondegenerate("MarkedCubicLattice");
    if (!is_positive_definite(lattice))
      throw NotDefiniteError("cubic fourfold lattice must be positive definite");
    lattice.check(h2);
    if (lattice.norm(h2) != 3) throw InputError("h2 must have norm 3");
    if (marking) {
      lattice.check(*marking);
      if (lattice.norm(*marking) != 10 || lattice.pair(h2, *marking) != 4)
        throw InputError("marking must satisfy T.T = 10 and T.h2 = 4");
      if (!is_primitive(lattice, {h2, *marking}))
        throw InputError("marking does not span a primitive sublattice with h2");
    }
  }

  std::size_t rank() const { return lattice.rank(); }

  const LatticeVector& require_marking(const char* op) const {
    if (!marking) throw InputError(std::string(op) + ": lattice has no marking");
    return *marking;
  }
};

/// The marked lattice with Gram (3,4,0; 4,10,b; 0,b,c) in basis (h2, T, J).
/// Only positive definiteness is enforced here; see bc_in_range().
inline MarkedCubicLattice lattice_from_bc(long long b, long long c) {
  if (b < 0 || b > 7) throw InputError("lattice_from_bc: b must lie in [0, 7]");
  if (c % 2 != 0) throw InputError("lattice_from_bc: c must be even");
  if (14 * c - 3 * b * b <= 0)
    throw NotDefiniteError("lattice_from_bc: 14c - 3b^2 must be positive");
  IntMatrix g{{3, 4, 0}, {4, 10, b}, {0, b, c}};
  return {IntegralLattice(std::move(g), {"h2", "T", "J"}), LatticeVector{1, 0, 0},
          LatticeVector{0, 1, 0}};
}

/// The normal-form constraint c > max(2, 3b^2/14).
inline bool bc_in_range(long long b, long long c) { return c > 2 && 14 * c > 3 * b * b; }

// ---------------------------------------------------------------------------
// Short and long roots

enum class RootKind { Short, Long };

inline std::string to_string(RootKind k) { return k == RootKind::Short ? "short" : "long"; }

struct RootCertificate {
  RootKind kind = RootKind::Short;
  LatticeVector vector;
  /// Long roots only: (vector + sign * h2) / 3, and the sign used.
  std::optional<LatticeVector> witness;
  int witness_sign = 0;

  /// Recomputes every defining equation from the Gram matrix.
  bool verify(const MarkedCubicLattice& m) const {
    const auto& l = m.lattice;
    if (vector.size() != l.rank() || l.pair(vector, m.h2) != 0) return false;
    if (kind == RootKind::Short) return l.norm(vector) == 2 && !witness;
    if (l.norm(vector) != 6 || !witness || (witness_sign != 1 && witness_sign != -1)) return false;
    return *witness * Integer(3) == vector + m.h2 * Integer(witness_sign);
  }
  friend bool operator==(const RootCertificate&, const RootCertificate&) = default;
};

namespace detail {

/// Vectors of the given norm in h2^perp, one per sign, in ambient coordinates.
inline std::vector<LatticeVector> perp_vectors(const MarkedCubicLattice& m, long long norm) {
  const SublatticeBasis perp = orthogonal_complement(m.lattice, {m.h2});
  const IntegralLattice pl(restrict_to(m.lattice, perp).gram());
  const IntMatrix basis = perp.matrix(m.rank());
  std::vector<LatticeVector> out;
  for (const auto& k : enumerate_vectors(pl, norm))
    out.push_back(LatticeVector(mul(k.coords, basis)).canonical_sign());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool divisible_by(const LatticeVector& v, const Integer& n) {
  for (const auto& x : v.coords)
    if (x % n != 0) return false;
  return true;
}

}  // namespace detail

/// Norm 2 classes orthogonal to h2, up to sign.
inline std::vector<RootCertificate> find_short_roots(const MarkedCubicLattice& m) {
  std::vector<RootCertificate> out;
  for (auto& v : detail::perp_vectors(m, 2)) out.push_back({RootKind::Short, std::move(v), {}, 0});
  return out;
}

/// Norm 6 classes orthogonal to h2 with v + h2 or v - h2 divisible by 3,
/// up to sign.
inline std::vector<RootCertificate> find_long_roots(const MarkedCubicLattice& m) {
  std::vector<RootCertificate> out;
  for (auto& v : detail::perp_vectors(m, 6)) {
    for (int sign : {-1, 1}) {
      const LatticeVector s = v + m.h2 * Integer(sign);
      if (!detail::divisible_by(s, 3)) continue;
      IntVector w = s.coords;
      for (auto& x : w) x /= 3;
      out.push_back({RootKind::Long, v, LatticeVector(std::move(w)), sign});
      break;
    }
  }
  for (const auto& r : out)
    if (!r.verify(m)) throw InvariantError("long root certificate failed to verify");
  return out;
}

// ---------------------------------------------------------------------------
// K14 markings

inline constexpr std::size_t kMaxMarkingRank = 4;

/// All T with T.T = 10, T.h2 = 4 and <h2, T> primitive, sorted.
inline std::vector<LatticeVector> find_k14_markings(const MarkedCubicLattice& m) {
  if (m.rank() > kMaxMarkingRank)
    throw BoundExceededError("find_k14_markings: rank above 4 is not supported");
  std::vector<LatticeVector> out;
  for (auto& t : vectors_with_pairing(m.lattice, m.h2, 4, 10))
    if (is_primitive(m.lattice, {m.h2, t})) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Rank-three normal form

struct NormalFormBC {
  Integer b;
  Integer c;
  IntMatrix basis_change;  // rows h2, T, J in the original coordinates

  Integer discriminant() const { return 14 * c - 3 * b * b; }
  IntMatrix gram() const {
    return IntMatrix{{3, 4, 0}, {4, 10, b}, {0, b, c}};
  }
};

/// Completes (h2, T) to a basis, clears J.h2 with J - a(T - h2), then moves
/// b = J.T into [0, 7] with +-J - m(3T - 4h2), using (3T - 4h2).T = 14.
inline NormalFormBC normal_form(const MarkedCubicLattice& m) {
  if (m.rank() != 3) throw InputError("normal_form: rank must be 3");
  const LatticeVector& t = m.require_marking("normal_form");
  const auto& l = m.lattice;
  IntMatrix rows(2, 3);
  rows.set_row(0, m.h2.coords);
  rows.set_row(1, t.coords);
  const LatticeVector j0(complete_to_basis(rows).row(2));
  const LatticeVector j1 = j0 - l.pair(j0, m.h2) * (t - m.h2);
  const LatticeVector shift = Integer(3) * t - Integer(4) * m.h2;
  const Integer b1 = l.pair(j1, t);
  const Integer r = mod(b1, Integer(14));
  const Integer q = (b1 - r) / 14;
  const LatticeVector j = r <= 7 ? j1 - q * shift : -j1 + (q + 1) * shift;

  NormalFormBC nf;
  nf.b = l.pair(j, t);
  nf.c = l.norm(j);
  nf.basis_change = IntMatrix(3, 3);
  nf.basis_change.set_row(0, m.h2.coords);
  nf.basis_change.set_row(1, t.coords);
  nf.basis_change.set_row(2, j.coords);
  if (abs(determinant(nf.basis_change)) != 1 || congruence(nf.basis_change, l.gram()) != nf.gram())
    throw InvariantError("normal_form produced an inconsistent basis");
  return nf;
}

}  // namespace bnlat

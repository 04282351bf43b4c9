#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnlat/latcore.hpp"

namespace bnlat {

inline constexpr long long kK3Degree = 14;
inline constexpr std::size_t kMaxK3SearchRank = 4;

/// Even hyperbolic lattice with a distinguished primitive class H of
/// positive norm (the polarization).
struct PolarizedK3Lattice {
  IntegralLattice lattice;
  LatticeVector H;

  PolarizedK3Lattice() = default;
  PolarizedK3Lattice(IntegralLattice l, LatticeVector h, long long degree = kK3Degree)
      : lattice(std::move(l)), H(std::move(h)) {
    lattice.require_nondegenerate("PolarizedK3Lattice");
    lattice.check(H);
    if (!is_even(lattice)) throw InputError("polarized K3 lattice must be even");
    const Signature s = signature(lattice);
    if (s.positive != 1) throw InputError("polarized K3 lattice must have signature (1, rho-1)");
    if (lattice.norm(H) != degree)
      throw InputError("polarization class has norm " + lattice.norm(H).str() + ", expected " +
                       std::to_string(degree));
    if (!is_primitive(lattice, {H})) throw InputError("polarization class is not primitive");
  }

  std::size_t rank() const { return lattice.rank(); }
  Integer degree() const { return lattice.norm(H); }
};

/// The orthogonal complement of H, which is negative definite.
inline IntegralLattice polarization_complement(const PolarizedK3Lattice& s) {
  return complement_lattice(s.lattice, {s.H});
}

// ---------------------------------------------------------------------------
// Rank-two normal form

struct Rank2Form {
  Integer alpha;       // H.L in [0, H.H/2]
  Integer beta;        // L.L
  IntMatrix basis;     // rows H and L in the original coordinates
};

/// Chooses L with H.L in [0, H.H/2] by L -> +-L + kH. For a fixed determinant
/// this pins down (alpha, beta) uniquely.
inline Rank2Form canonical_rank2_form(const PolarizedK3Lattice& s) {
  if (s.rank() != 2) throw InputError("canonical_rank2_form: rank must be 2");
  IntMatrix rows(1, 2);
  rows.set_row(0, s.H.coords);
  const IntMatrix basis0 = complete_to_basis(rows);
  const LatticeVector l0(basis0.row(1));
  const Integer n = s.degree();
  const Integer a0 = s.lattice.pair(s.H, l0);
  const Integer r = mod(a0, n);
  LatticeVector l = r * 2 <= n ? l0 - ((a0 - r) / n) * s.H : -l0 + ((a0 - r) / n + 1) * s.H;
  Rank2Form out;
  out.alpha = s.lattice.pair(s.H, l);
  out.beta = s.lattice.norm(l);
  out.basis = IntMatrix(2, 2);
  out.basis.set_row(0, s.H.coords);
  out.basis.set_row(1, l.coords);
  if (out.beta * n - out.alpha * out.alpha != s.lattice.det())
    throw InvariantError("canonical_rank2_form changed the determinant");
  return out;
}

inline PolarizedK3Lattice rank2_lattice(const Integer& alpha, const Integer& beta,
                                        std::vector<std::string> labels = {"H", "L"}) {
  return {IntegralLattice(IntMatrix{{Integer(kK3Degree), alpha}, {alpha, beta}}, std::move(labels)),
          LatticeVector{1, 0}};
}

// ---------------------------------------------------------------------------
// Table 1 lattices

enum class Table1Column { Gamma0, Gamma1, Gamma2E, Gamma2L, Gamma3 };

inline const std::vector<Table1Column>& table1_columns() {
  static const std::vector<Table1Column> all{Table1Column::Gamma0, Table1Column::Gamma1,
                                             Table1Column::Gamma2E, Table1Column::Gamma2L,
                                             Table1Column::Gamma3};
  return all;
}

inline std::string to_string(Table1Column c) {
  switch (c) {
    case Table1Column::Gamma0: return "0";
    case Table1Column::Gamma1: return "1";
    case Table1Column::Gamma2E: return "2E";
    case Table1Column::Gamma2L: return "2L";
    case Table1Column::Gamma3: return "3";
  }
  return "?";
}

inline Table1Column parse_table1_column(const std::string& s) {
  for (Table1Column c : table1_columns())
    if (to_string(c) == s) return c;
  throw InputError("unknown Table 1 column '" + s + "' (expected 0, 1, 2E, 2L or 3)");
}

inline int column_gamma(Table1Column c) {
  switch (c) {
    case Table1Column::Gamma0: return 0;
    case Table1Column::Gamma1: return 1;
    case Table1Column::Gamma2E:
    case Table1Column::Gamma2L: return 2;
    case Table1Column::Gamma3: return 3;
  }
  return -1;
}

inline PolarizedK3Lattice table1_lattice(Table1Column c) {
  switch (c) {
    case Table1Column::Gamma0: return rank2_lattice(2, 0, {"H", "E"});
    case Table1Column::Gamma1: return rank2_lattice(3, 0, {"H", "E"});
    case Table1Column::Gamma2E: return rank2_lattice(4, 0, {"H", "E"});
    case Table1Column::Gamma2L: return rank2_lattice(6, 2, {"H", "L"});
    case Table1Column::Gamma3: return rank2_lattice(7, 2, {"H", "L"});
  }
  throw InputError("invalid Table 1 column");
}

// ---------------------------------------------------------------------------
// Class search

struct ClassMatch {
  LatticeVector vector;
  bool primitive_span = false;  // <H, v> saturated
  friend bool operator==(const ClassMatch&, const ClassMatch&) = default;
};

/// All v with v.v == norm and v.H == degree. Finite because H^perp is
/// negative definite.
inline std::vector<ClassMatch> find_classes(const PolarizedK3Lattice& s, const Integer& norm,
                                            const Integer& degree) {
  if (s.rank() > kMaxK3SearchRank)
    throw BoundExceededError("find_classes: rank above 4 is not supported");
  std::vector<ClassMatch> out;
  for (auto& v : vectors_with_pairing(s.lattice, s.H, degree, norm)) {
    const bool independent = matrix_rank(SublatticeBasis{s.H, v}.matrix(s.rank())) == 2;
    const bool primitive = independent && is_primitive(s.lattice, {s.H, v});
    out.push_back({std::move(v), primitive});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brill-Noether classification

enum class MarkerKind { EllipticSection, Gamma0, Gamma1, Gamma2E, Gamma2L, Gamma3 };

struct MarkerSpec {
  MarkerKind kind;
  const char* name;
  long long norm;
  long long degree;
  int gamma;  // -1 for the section class, which has no Clifford index
};

/// Search order matters: a section class preempts every gamma bound.
inline const std::vector<MarkerSpec>& marker_specs() {
  static const std::vector<MarkerSpec> specs{
      {MarkerKind::EllipticSection, "EllipticSection", 0, 1, -1},
      {MarkerKind::Gamma0, "Gamma0", 0, 2, 0},
      {MarkerKind::Gamma1, "Gamma1", 0, 3, 1},
      {MarkerKind::Gamma2E, "Gamma2E", 0, 4, 2},
      {MarkerKind::Gamma2L, "Gamma2L", 2, 6, 2},
      {MarkerKind::Gamma3, "Gamma3", 2, 7, 3},
  };
  return specs;
}

inline const MarkerSpec& marker_spec(MarkerKind k) {
  for (const auto& s : marker_specs())
    if (s.kind == k) return s;
  throw InvariantError("unknown marker kind");
}

inline std::string to_string(MarkerKind k) { return marker_spec(k).name; }

struct BNMarker {
  MarkerKind kind;
  LatticeVector witness;
  bool primitive_span = false;
  friend bool operator==(const BNMarker&, const BNMarker&) = default;
};

enum class BNVerdict { General, Special, EllipticWithSection };

struct BNReport {
  std::vector<BNMarker> markers;   // primitive, counted
  std::vector<BNMarker> excluded;  // non-primitive span, reported only
  BNVerdict verdict = BNVerdict::General;
  std::optional<int> gamma_bound;
};

inline std::string to_string(const BNReport& r) {
  switch (r.verdict) {
    case BNVerdict::General: return "General";
    case BNVerdict::EllipticWithSection: return "EllipticWithSection";
    case BNVerdict::Special: return "Special(" + std::to_string(*r.gamma_bound) + ")";
  }
  return "?";
}

/// Lattice-level classifier: reports which Table 1 marker classes embed
/// primitively together with H. It says nothing about geometry.
inline BNReport bn_classify(const PolarizedK3Lattice& s) {
  if (s.rank() > kMaxK3SearchRank)
    throw BoundExceededError("bn_classify: rank above 4 is not supported");
  if (s.degree() != kK3Degree) throw InputError("bn_classify: polarization must have degree 14");
  BNReport r;
  for (const auto& spec : marker_specs()) {
    for (auto& m : find_classes(s, spec.norm, spec.degree)) {
      BNMarker marker{spec.kind, std::move(m.vector), m.primitive_span};
      (marker.primitive_span ? r.markers : r.excluded).push_back(std::move(marker));
    }
  }
  bool section = false;
  for (const auto& m : r.markers) {
    const int g = marker_spec(m.kind).gamma;
    if (g < 0)
      section = true;
    else if (!r.gamma_bound || g < *r.gamma_bound)
      r.gamma_bound = g;
  }
  if (section) {
    r.verdict = BNVerdict::EllipticWithSection;
    r.gamma_bound.reset();
  } else if (r.gamma_bound) {
    r.verdict = BNVerdict::Special;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Brill-Noether numbers

inline long long brill_noether_rho(long long g, long long r, long long d) {
  if (g < 0 || r < 0 || d < 0) throw InputError("brill_noether_rho: arguments must be nonnegative");
  return g - (r + 1) * (g - d + r);
}

struct DivisorRow {
  int gamma;
  int r;
  int d;
  long long rho;
  friend bool operator==(const DivisorRow&, const DivisorRow&) = default;
};

/// Special linear series g^r_d on a genus 8 curve, grouped by Clifford
/// index d - 2r from 3 down to 0.
inline std::vector<DivisorRow> genus8_divisor_table() {
  const int series[][2] = {{1, 5}, {2, 7}, {1, 4}, {2, 6}, {1, 3},
                           {2, 5}, {3, 7}, {1, 2}, {2, 4}, {3, 6}};
  std::vector<DivisorRow> rows;
  for (const auto& [r, d] : series) rows.push_back({d - 2 * r, r, d, brill_noether_rho(8, r, d)});
  return rows;
}

}  // namespace bnlat

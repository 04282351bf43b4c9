#pragma once

#include <string>
#include <vector>

#include "bnlat/cubic/marked.hpp"
#include "bnlat/k3/polarized.hpp"

namespace bnlat {

/// Rank-two even lattice (14, alpha; alpha, beta) with 0 <= alpha <= 7.
struct SigmaLattice {
  PolarizedK3Lattice polarized;
  Integer alpha;
  Integer beta;

  const IntegralLattice& lattice() const { return polarized.lattice; }
  const IntMatrix& gram() const { return polarized.lattice.gram(); }
  const LatticeVector& H() const { return polarized.H; }
};

inline SigmaLattice sigma_from_discriminant(const Integer& d) {
  for (long long a = 0; a <= 7; ++a) {
    if (mod(Integer(a * a - d), Integer(14)) != 0) continue;
    const Integer beta = (a * a - d) / 14;
    if (beta % 2 != 0) throw InvariantError("sigma: beta = " + beta.str() + " is odd");
    return {rank2_lattice(a, beta), Integer(a), beta};
  }
  throw InvariantError("sigma: discriminant " + d.str() + " is not a square modulo 14");
}

/// The rank-two even lattice with H^2 = 14 and determinant -d, for a
/// marked lattice of rank 3 and determinant d.
inline SigmaLattice sigma(const MarkedCubicLattice& m) {
  if (m.rank() != 3) throw InputError("sigma: rank must be 3");
  m.require_marking("sigma");
  return sigma_from_discriminant(m.lattice.det());
}

struct SigmaClosedForm {
  IntMatrix raw;
  SigmaLattice canonical;
};

/// Closed-form Gram for (b, c), then reduced to the (alpha, beta) form.
inline SigmaClosedForm sigma_closed_form(long long b, long long c) {
  lattice_from_bc(b, c);  // validates
  Integer x, y;
  if (b % 2 == 0) {
    x = 2 * b;
    y = Integer(b * b / 2 - c);
  } else {
    x = 7 - 2 * b;
    y = Integer((b * b - 4 * b + 7) / 2 - c);
  }
  SigmaClosedForm out;
  out.raw = IntMatrix{{Integer(14), x}, {x, y}};
  const Rank2Form f = canonical_rank2_form({IntegralLattice(out.raw), LatticeVector{1, 0}});
  out.canonical = {rank2_lattice(f.alpha, f.beta), f.alpha, f.beta};
  return out;
}

// ---------------------------------------------------------------------------
// Scanning the (b, c) plane

struct ScanRow {
  long long b;
  long long c;
  Integer discriminant;
  Integer alpha;
  Integer beta;
  bool in_range;  // c > max(2, 3b^2/14)
  std::size_t short_roots;
  std::size_t long_roots;

  bool rooted() const { return short_roots + long_roots > 0; }
};

inline std::vector<ScanRow> scan_bc(long long b_max, long long c_max) {
  if (b_max < 0 || c_max < 0) throw InputError("scan_bc: bounds must be nonnegative");
  std::vector<ScanRow> rows;
  for (long long b = 0; b <= std::min<long long>(7, b_max); ++b) {
    for (long long c = 2; c <= c_max; c += 2) {
      if (14 * c - 3 * b * b <= 0) continue;
      const MarkedCubicLattice m = lattice_from_bc(b, c);
      const SigmaLattice s = sigma(m);
      rows.push_back({b, c, m.lattice.det(), s.alpha, s.beta, bc_in_range(b, c),
                      find_short_roots(m).size(), find_long_roots(m).size()});
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Associated K3 lattices

struct SubCheck {
  std::string name;
  bool passed = false;
  bool required = true;
  std::string detail;
};

struct K3CheckResult {
  std::vector<SubCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.required && !c.passed) return false;
    return true;
  }
  const SubCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Verifies that s is a candidate associated K3 lattice for the marked
/// lattice m: s must be even of signature (1, r-2) with H^2 = 14, and the
/// complement of the marking twisted by -1 must match the complement of H.
/// Equal determinants are required in rank 3 and reported in rank 4.
inline K3CheckResult associated_k3_check(const MarkedCubicLattice& m, const PolarizedK3Lattice& s) {
  const std::size_t r = m.rank();
  if (r != 3 && r != 4) throw InputError("associated_k3_check: cubic lattice rank must be 3 or 4");
  if (s.rank() + 1 != r)
    throw InputError("associated_k3_check: K3 lattice rank must be one less than the cubic rank");
  const LatticeVector& t = m.require_marking("associated_k3_check");
  K3CheckResult out;

  const Signature sig = signature(s.lattice);
  const bool shape = is_even(s.lattice) && sig.positive == 1 && sig.negative == r - 2 &&
                     s.degree() == kK3Degree;
  out.checks.push_back({"parity_signature", shape, true,
                        "even, signature (" + std::to_string(sig.positive) + "," +
                            std::to_string(sig.negative) + "), H.H = " + s.degree().str()});

  const IntegralLattice kperp = twist(complement_lattice(m.lattice, {m.h2, t}), -1);
  const IntegralLattice hperp = polarization_complement(s);
  const bool iso = kperp.is_nondegenerate() && hperp.is_nondegenerate() &&
                   is_isometric_definite(IntegralLattice(kperp.gram()), IntegralLattice(hperp.gram()))
                       .isometric;
  out.checks.push_back({"complement_isometry", iso, true,
                        "det " + kperp.det().str() + " vs " + hperp.det().str()});

  const bool dets = abs(s.lattice.det()) == abs(m.lattice.det());
  out.checks.push_back({"determinant", dets, r == 3,
                        "|det| " + abs(s.lattice.det()).str() + " vs " + abs(m.lattice.det()).str()});

  if (r == 3) {
    const SigmaLattice expected = sigma(m);
    bool same = false;
    std::string detail = "sigma (" + expected.alpha.str() + "," + expected.beta.str() + ")";
    if (s.degree() == kK3Degree && shape) {
      const Rank2Form f = canonical_rank2_form(s);
      same = f.alpha == expected.alpha && f.beta == expected.beta;
      detail += " vs (" + f.alpha.str() + "," + f.beta.str() + ")";
    }
    out.checks.push_back({"sigma_form", same, true, detail});
  }
  return out;
}

}  // namespace bnlat

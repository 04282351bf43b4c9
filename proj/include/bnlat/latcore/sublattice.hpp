#pragma once

#include "bnlat/latcore/lattice.hpp"
#include "bnlat/latcore/snf.hpp"

namespace bnlat {

struct Saturation {
  SublatticeBasis basis;  // Hermite normal form rows
  Integer index = 1;      // [saturation : span(S)]
};

/// span_Q(S) ∩ L, i.e. the primitive closure of S. Independent of the
/// Gram matrix; only the coordinates matter.
inline Saturation saturation(const IntegralLattice& l, const SublatticeBasis& s) {
  const std::size_t n = l.rank();
  if (s.empty()) return {};
  const IntMatrix rows = s.matrix(n);
  const SNFResult snf = smith_normal_form(rows);
  if (snf.rank() != rows.rows())
    throw InputError("saturation: vectors are linearly dependent");
  // left * S * right = [D 0] so span_Q(S) ∩ Z^n is spanned by the first
  // k rows of right^{-1}.
  const IntMatrix rinv = inverse_unimodular(snf.right);
  IntMatrix sat(rows.rows(), n);
  for (std::size_t i = 0; i < rows.rows(); ++i) sat.set_row(i, rinv.row(i));
  Saturation out;
  out.basis = SublatticeBasis::from_rows(hermite_normal_form(sat));
  for (const auto& d : snf.diagonal) out.index *= d;
  return out;
}

inline bool is_primitive(const IntegralLattice& l, const SublatticeBasis& s) {
  return saturation(l, s).index == 1;
}

/// Saturated basis of {v : v.s = 0 for all s in S}, canonical HNF rows.
inline SublatticeBasis orthogonal_complement(const IntegralLattice& l,
                                             const SublatticeBasis& s) {
  l.require_nondegenerate("orthogonal_complement");
  const IntMatrix pairing = s.matrix(l.rank()) * l.gram();
  if (matrix_rank(s.matrix(l.rank())) != s.size())
    throw InputError("orthogonal_complement: vectors are linearly dependent");
  return SublatticeBasis::from_rows(integer_kernel(pairing));
}

/// The complement as a lattice in its own right (Gram of the basis).
inline IntegralLattice complement_lattice(const IntegralLattice& l,
                                          const SublatticeBasis& s) {
  return restrict_to(l, orthogonal_complement(l, s));
}

}  // namespace bnlat

#pragma once

#include "bnlat/discform/cyclotomic.hpp"
#include "bnlat/discform/discriminant.hpp"

namespace bnlat {

/// Order of the roots of unity needed for sum_x exp(pi i q(x)) and the
/// eighth-root phase: lcm(8, 2 * exponent).
inline std::size_t gauss_sum_order(const FiniteQuadraticForm& f) {
  return static_cast<std::size_t>(lcm(Integer(8), 2 * f.group.exponent()));
}

/// sum over the group of exp(pi i q(x)) as an exact cyclotomic integer.
inline CyclotomicInteger gauss_sum(const FiniteQuadraticForm& f) {
  if (!f.has_quadratic()) throw InputError("gauss_sum needs a quadratic refinement");
  const std::size_t n = gauss_sum_order(f);
  const auto order = static_cast<std::size_t>(f.group.order());
  CyclotomicInteger sum(n);
  for (std::size_t idx = 0; idx < order; ++idx) {
    // exp(pi i q) = zeta_n^(q n / 2)
    const Rational e = f.q(f.group.element(idx)) * Rational(n / 2);
    sum.add_root(static_cast<std::size_t>(to_integer(e)));
  }
  return sum;
}

/// sigma in [0, 8) with gauss_sum = sqrt(|A|) * exp(2 pi i sigma / 8).
///
/// The modulus is checked exactly (S * conj(S) == |A|). The phase is the
/// unique sigma for which S * zeta_8^-sigma is a positive real number; realness
/// is exact and the sign of that real number is decided by
/// CyclotomicInteger::real_sign.
inline int gauss_milgram_signature(const FiniteQuadraticForm& f) {
  const CyclotomicInteger s = gauss_sum(f);
  const std::size_t n = s.order();
  const Integer size = f.group.order();
  if (!(s * s.conj() == CyclotomicInteger::integer(n, size)))
    throw InvariantError("Gauss sum modulus is not sqrt(|A|)");
  const std::size_t eighth = n / 8;
  for (int sigma = 0; sigma < 8; ++sigma) {
    const CyclotomicInteger t = s.rotated(n - static_cast<std::size_t>(sigma) * eighth);
    if (!t.is_real()) continue;
    if (!(t * t == CyclotomicInteger::integer(n, size)))
      throw InvariantError("Gauss sum phase is not an eighth root of unity");
    if (t.real_sign() > 0) return sigma;
  }
  throw InvariantError("Gauss sum phase is not an eighth root of unity");
}

}  // namespace bnlat

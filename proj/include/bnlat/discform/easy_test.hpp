#pragma once

#include <string>

#include "bnlat/latcore.hpp"

namespace bnlat {

/// Outcome of the necessary-condition screen for intersection lattices of
/// smooth cubic fourfolds. A pass certifies nothing.
struct EasyTestVerdict {
  enum class Criterion { None = 0, Unimodular = 1, PrimeDiscriminant = 2, TwoExactlyDivides = 3 };

  Criterion criterion = Criterion::None;
  std::string reason;

  bool passed() const { return criterion == Criterion::None; }
  int number() const { return static_cast<int>(criterion); }
};

inline std::string to_string(const EasyTestVerdict& v) {
  return v.passed() ? "Pass" : "Reject(" + std::to_string(v.number()) + ")";
}

/// Rejects (1) unimodular lattices, (2) odd rank <= 11 with |det| a prime
/// p = rank mod 4, (3) odd rank <= 11 with |det| = 2 mod 4. Purely
/// arithmetic in (rank, det).
inline EasyTestVerdict easy_test(const IntegralLattice& l) {
  using C = EasyTestVerdict::Criterion;
  const Integer d = abs(l.det());
  const auto rank = static_cast<long long>(l.rank());
  if (d == 1) return {C::Unimodular, "unimodular lattice"};
  if (rank % 2 == 1 && rank <= 11) {
    if (is_prime(d) && d % 4 == rank % 4)
      return {C::PrimeDiscriminant, "odd rank " + std::to_string(rank) + " and prime discriminant " +
                                        d.str() + " congruent to the rank mod 4"};
    if (d % 4 == 2)
      return {C::TwoExactlyDivides,
              "odd rank " + std::to_string(rank) + " and discriminant " + d.str() +
                  " exactly divisible by 2"};
  }
  return {};
}

}  // namespace bnlat

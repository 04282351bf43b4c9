#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "bnlat/discform/discriminant.hpp"

namespace bnlat {

inline constexpr long long kDefaultSubgroupBound = 10000;

/// Subgroup of a discriminant group, given by generators and its full
/// sorted list of element indices.
struct Subgroup {
  std::vector<IntVector> generators;
  std::vector<std::size_t> elements;

  Integer order() const { return Integer(elements.size()); }
  bool is_trivial() const { return elements.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements;
  }
};

namespace detail {

inline void require_bound(const DiscriminantGroup& g, long long bound) {
  if (g.order() > bound)
    throw BoundExceededError("discriminant group of order " + g.order().str() +
                             " exceeds the subgroup enumeration bound " +
                             std::to_string(bound));
}

/// Elements of <H, x> where H is given by its element list.
inline std::vector<std::size_t> extend_subgroup(const DiscriminantGroup& g,
                                                const std::vector<std::size_t>& h,
                                                const IntVector& x) {
  std::set<std::size_t> out(h.begin(), h.end());
  IntVector multiple = x;
  std::vector<IntVector> base;
  for (std::size_t e : h) base.push_back(g.element(e));
  while (g.index(multiple) != 0) {
    for (const auto& e : base) out.insert(g.index(g.add(e, multiple)));
    multiple = g.add(multiple, x);
  }
  return {out.begin(), out.end()};
}

inline void sort_subgroups(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
}

}  // namespace detail

/// All subgroups H with q|_H == 0 (mod 2Z), including the trivial one,
/// sorted by order and then by element indices.
///
/// Built by closure: an isotropic subgroup extended by an isotropic
/// element orthogonal to it stays isotropic, and every isotropic subgroup
/// arises this way from the trivial one.
inline std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticForm& f,
                                                 long long bound = kDefaultSubgroupBound) {
  const DiscriminantGroup& g = f.group;
  detail::require_bound(g, bound);
  const auto order = static_cast<std::size_t>(g.order());
  std::vector<IntVector> isotropic;
  for (std::size_t idx = 1; idx < order; ++idx) {
    IntVector x = g.element(idx);
    if (f.q(x) == 0) isotropic.push_back(std::move(x));
  }

  std::set<std::vector<std::size_t>> seen{{0}};
  std::vector<Subgroup> subs{Subgroup{{}, {0}}};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subgroup h = subs[i];
    for (const auto& x : isotropic) {
      if (std::binary_search(h.elements.begin(), h.elements.end(), g.index(x))) continue;
      bool orthogonal = true;
      for (const auto& gen : h.generators) orthogonal = orthogonal && f.b(gen, x) == 0;
      if (!orthogonal) continue;
      std::vector<std::size_t> elems = detail::extend_subgroup(g, h.elements, x);
      if (!seen.insert(elems).second) continue;
      std::vector<IntVector> gens = h.generators;
      gens.push_back(x);
      subs.push_back(Subgroup{std::move(gens), std::move(elems)});
    }
  }
  detail::sort_subgroups(subs);
  return subs;
}

}  // namespace bnlat

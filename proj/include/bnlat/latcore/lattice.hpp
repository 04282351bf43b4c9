#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bnlat/latcore/linalg.hpp"

namespace bnlat {

/// Coordinates of a lattice element in the basis of some IntegralLattice.
/// Carries no metric of its own.
struct LatticeVector {
  IntVector coords;

  LatticeVector() = default;
  explicit LatticeVector(IntVector c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<long long> c) {
    coords.reserve(c.size());
    for (long long x : c) coords.emplace_back(x);
  }

  static LatticeVector basis(std::size_t rank, std::size_t index) {
    IntVector c(rank, Integer(0));
    c.at(index) = 1;
    return LatticeVector(std::move(c));
  }

  std::size_t size() const { return coords.size(); }
  const Integer& operator[](std::size_t i) const { return coords[i]; }
  Integer& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }

  LatticeVector operator-() const {
    LatticeVector v = *this;
    for (auto& c : v.coords) c = -c;
    return v;
  }
  LatticeVector operator+(const LatticeVector& o) const {
    if (o.size() != size()) throw InputError("vector length mismatch");
    LatticeVector v = *this;
    for (std::size_t i = 0; i < size(); ++i) v.coords[i] += o.coords[i];
    return v;
  }
  LatticeVector operator-(const LatticeVector& o) const { return *this + (-o); }
  LatticeVector operator*(const Integer& s) const {
    LatticeVector v = *this;
    for (auto& c : v.coords) c *= s;
    return v;
  }
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v) {
    return v * s;
  }

  /// Sign of the leading nonzero coordinate (0 for the zero vector).
  int leading_sign() const {
    for (const auto& c : coords)
      if (c != 0) return c > 0 ? 1 : -1;
    return 0;
  }
  /// Representative of {v, -v} with positive leading coordinate.
  LatticeVector canonical_sign() const {
    return leading_sign() < 0 ? -*this : *this;
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords < b.coords;
  }
};

inline std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

/// Symmetric integer Gram matrix with optional basis labels.
///
/// The default constructor path rejects degenerate Gram matrices; use
/// IntegralLattice::allowing_degenerate() to build one anyway. Metric operations
/// that need a nondegenerate form call require_nondegenerate().
class IntegralLattice {
 public:
  IntegralLattice() : IntegralLattice(IntMatrix(0, 0)) {}

  explicit IntegralLattice(IntMatrix gram, std::vector<std::string> labels = {})
      : IntegralLattice(std::move(gram), std::move(labels), false) {}

  static IntegralLattice allowing_degenerate(IntMatrix gram,
                                    std::vector<std::string> labels = {}) {
    return IntegralLattice(std::move(gram), std::move(labels), true);
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Integer& det() const { return det_; }
  bool is_nondegenerate() const { return det_ != 0; }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return gram_(i, j);
  }

  void require_nondegenerate(const char* op) const {
    if (det_ == 0)
      throw DegenerateLatticeError(std::string(op) +
                                   ": lattice has a degenerate Gram matrix");
  }

  Integer pair(const LatticeVector& u, const LatticeVector& v) const {
    check(u);
    check(v);
    return bilinear(gram_, u.coords, v.coords);
  }
  Integer norm(const LatticeVector& v) const { return pair(v, v); }

  void check(const LatticeVector& v) const {
    if (v.size() != rank())
      throw InputError("vector has " + std::to_string(v.size()) +
                       " coordinates, lattice has rank " + std::to_string(rank()));
  }

  std::string label(std::size_t i) const {
    return i < labels_.size() ? labels_[i] : "e" + std::to_string(i);
  }

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntegralLattice(IntMatrix gram, std::vector<std::string> labels,
                  bool allow_degenerate)
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (!gram_.is_square()) throw InputError("Gram matrix is not square");
    if (!gram_.is_symmetric()) throw InputError("Gram matrix is not symmetric");
    if (!labels_.empty() && labels_.size() != gram_.rows())
      throw InputError("label count does not match rank");
    det_ = determinant(gram_);
    if (det_ == 0 && !allow_degenerate)
      throw DegenerateLatticeError("Gram matrix is degenerate (det = 0)");
  }

  IntMatrix gram_;
  std::vector<std::string> labels_;
  Integer det_ = 1;
};

/// Linearly independent vectors of an ambient lattice, stored as rows.
struct SublatticeBasis {
  std::vector<LatticeVector> vectors;

  SublatticeBasis() = default;
  explicit SublatticeBasis(std::vector<LatticeVector> v) : vectors(std::move(v)) {}
  SublatticeBasis(std::initializer_list<LatticeVector> v) : vectors(v) {}

  std::size_t size() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
  const LatticeVector& operator[](std::size_t i) const { return vectors[i]; }

  /// Rows of the coordinate matrix; ambient rank n must be supplied for
  /// the empty basis.
  IntMatrix matrix(std::size_t n) const {
    IntMatrix m(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != n) throw InputError("sublattice vector length mismatch");
      m.set_row(i, vectors[i].coords);
    }
    return m;
  }

  static SublatticeBasis from_rows(const IntMatrix& m) {
    SublatticeBasis b;
    for (std::size_t i = 0; i < m.rows(); ++i) b.vectors.emplace_back(m.row(i));
    return b;
  }

  friend bool operator==(const SublatticeBasis&, const SublatticeBasis&) = default;
};

// ---- elementary lattice operations ------------------------------------

inline Integer determinant(const IntegralLattice& l) { return l.det(); }

inline Signature signature(const IntegralLattice& l) { return signature(l.gram()); }

inline bool is_even(const IntegralLattice& l) {
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l(i, i) % 2 != 0) return false;
  return true;
}

inline bool is_positive_definite(const IntegralLattice& l) {
  return signature(l).positive == l.rank();
}
inline bool is_negative_definite(const IntegralLattice& l) {
  return signature(l).negative == l.rank();
}

/// Gram scaled entrywise by n.
inline IntegralLattice twist(const IntegralLattice& l, const Integer& n) {
  if (n == 0) throw InputError("twist by zero");
  return IntegralLattice::allowing_degenerate(l.gram().scaled(n), l.labels());
}

/// Lattice spanned by the given vectors with the induced Gram matrix.
inline IntegralLattice restrict_to(const IntegralLattice& l, const SublatticeBasis& s) {
  return IntegralLattice::allowing_degenerate(congruence(s.matrix(l.rank()), l.gram()));
}

}  // namespace bnlat

#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "bnlat/latcore/integer.hpp"

namespace bnlat {

namespace detail {

using Poly = std::vector<Integer>;  // coefficient of x^i at index i

inline int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline Poly multiply_by_xd_minus_one(const Poly& p, std::size_t d) {
  Poly out(p.size() + d, Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  return out;
}

/// Exact quotient p / (x^d - 1).
inline Poly divide_by_xd_minus_one(const Poly& p, std::size_t d) {
  if (p.size() <= d) throw InvariantError("cyclotomic: division degree underflow");
  Poly q(p.size() - d, Integer(0));
  Poly r = p;
  for (std::size_t i = r.size(); i-- > d;) {
    const Integer c = r[i];
    q[i - d] = c;
    r[i] -= c;
    r[i - d] += c;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (r[i] != 0) throw InvariantError("cyclotomic: inexact division");
  return q;
}

/// Phi_n via the Moebius product over divisors of n, memoised.
inline const Poly& cyclotomic_polynomial(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, Poly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p{Integer(1)};
  std::vector<std::size_t> denominators;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(static_cast<int>(n / d));
    if (mu == 1) p = multiply_by_xd_minus_one(p, d);
    if (mu == -1) denominators.push_back(d);
  }
  for (std::size_t d : denominators) p = divide_by_xd_minus_one(p, d);
  return cache.emplace(n, std::move(p)).first->second;
}

/// Fixed-point approximations scaled by 2^bits; absolute error well below
/// 2^(guard - bits) for the guard bits used by the callers.
inline Integer fixed_atan_inverse(unsigned x, unsigned bits) {
  const Integer one = Integer(1) << bits;
  const Integer x2 = Integer(x) * x;
  Integer power = one / x;  // 1 / x^(2k+1)
  Integer sum = 0;
  for (unsigned k = 0; power != 0; ++k) {
    const Integer term = power / (2 * k + 1);
    sum += (k % 2 == 0) ? term : Integer(-term);
    power /= x2;
  }
  return sum;
}

inline Integer fixed_pi(unsigned bits) {
  return 16 * fixed_atan_inverse(5, bits) - 4 * fixed_atan_inverse(239, bits);
}

/// cos(2 pi k / n) scaled by 2^bits.
inline Integer fixed_cos_root(std::size_t k, std::size_t n, const Integer& pi, unsigned bits) {
  k %= n;
  if (2 * k > n) k = n - k;  // cos is even; keeps the angle in [0, pi]
  const Integer one = Integer(1) << bits;
  const Integer theta = 2 * pi * k / n;
  const Integer theta2 = (theta * theta) >> bits;
  Integer term = one;
  Integer sum = one;
  for (unsigned j = 1; term != 0; ++j) {
    term = -((term * theta2) >> bits) / ((2 * j - 1) * (2 * j));
    sum += term;
  }
  return sum;
}

}  // namespace detail

/// Element of Z[zeta_N] stored as a coefficient vector modulo x^N - 1.
/// Equality and zero tests reduce modulo the cyclotomic polynomial, so
/// they are exact.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::size_t order) : coeffs_(order, Integer(0)) {
    if (order == 0) throw InputError("cyclotomic order must be positive");
  }

  static CyclotomicInteger root(std::size_t order, std::size_t k) {
    CyclotomicInteger z(order);
    z.coeffs_[k % order] = 1;
    return z;
  }
  static CyclotomicInteger integer(std::size_t order, const Integer& value) {
    CyclotomicInteger z(order);
    z.coeffs_[0] = value;
    return z;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  void add_root(std::size_t k, const Integer& count = 1) { coeffs_[k % order()] += count; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const {
    same_order(o);
    CyclotomicInteger r = *this;
    for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  CyclotomicInteger operator-(const CyclotomicInteger& o) const {
    same_order(o);
    CyclotomicInteger r = *this;
    for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  CyclotomicInteger operator*(const CyclotomicInteger& o) const {
    same_order(o);
    const std::size_t n = order();
    CyclotomicInteger r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (o.coeffs_[j] != 0) r.coeffs_[(i + j) % n] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
  }

  /// Multiplication by zeta^k.
  CyclotomicInteger rotated(std::size_t k) const {
    const std::size_t n = order();
    CyclotomicInteger r(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[(i + k) % n] = coeffs_[i];
    return r;
  }

  /// Complex conjugate: zeta^k -> zeta^-k.
  CyclotomicInteger conj() const {
    const std::size_t n = order();
    CyclotomicInteger r(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[(n - i) % n] = coeffs_[i];
    return r;
  }

  /// Canonical remainder modulo Phi_N, length phi(N).
  std::vector<Integer> reduced() const {
    const detail::Poly& phi = detail::cyclotomic_polynomial(order());
    const std::size_t deg = phi.size() - 1;
    std::vector<std::pair<std::size_t, Integer>> terms;
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) terms.emplace_back(j, phi[j]);
    std::vector<Integer> r = coeffs_;
    for (std::size_t i = r.size(); i-- > deg;) {
      if (r[i] == 0) continue;
      const Integer c = r[i];
      r[i] = 0;
      for (const auto& [j, a] : terms) r[i - deg + j] -= c * a;
    }
    r.resize(deg);
    return r;
  }

  bool is_zero() const {
    for (const auto& c : reduced())
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return (a - b).is_zero();
  }

  bool is_real() const { return *this == conj(); }

  /// Sign of a real element: exact zero test first, then rigorous
  /// fixed-point evaluation of sum c_k cos(2 pi k / N) with increasing
  /// precision until the error bound excludes zero.
  int real_sign() const {
    if (!is_real()) throw InputError("real_sign of a non-real cyclotomic integer");
    const std::vector<Integer> r = reduced();
    bool zero = true;
    for (const auto& c : r) zero = zero && c == 0;
    if (zero) return 0;
    Integer weight = 0;
    for (const auto& c : r) weight += abs(c);
    constexpr unsigned kGuard = 48;
    for (unsigned bits = 64; bits <= 1u << 14; bits *= 2) {
      const unsigned w = bits + kGuard;
      const Integer pi = detail::fixed_pi(w);
      Integer approx = 0;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) approx += r[k] * detail::fixed_cos_root(k, order(), pi, w);
      // each cosine is within 2^(w - bits) ulps of the truth
      const Integer error = weight << kGuard;
      if (abs(approx) > error) return approx > 0 ? 1 : -1;
    }
    throw InvariantError("real_sign: precision limit reached on a nonzero element");
  }

 private:
  void same_order(const CyclotomicInteger& o) const {
    if (o.order() != order()) throw InputError("cyclotomic order mismatch");
  }

  std::vector<Integer> coeffs_;
};

}  // namespace bnlat

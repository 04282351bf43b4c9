#include <gtest/gtest.h>

#include <random>

#include "bnlat/cubic.hpp"
#include "oracles.hpp"

namespace bnlat {
namespace {

const IntMatrix kPiHTP{{3, 4, 1}, {4, 10, -1}, {1, -1, 3}};
const IntMatrix kPiHPP{{3, 1, 1}, {1, 3, 0}, {1, 0, 3}};
const IntMatrix kExampleA2{{3, 4, 1, 1}, {4, 10, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}};

MarkedCubicLattice pi_htp() {
  return {IntegralLattice(kPiHTP), LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}};
}
MarkedCubicLattice pi_hpp() {
  return {IntegralLattice(kPiHPP), LatticeVector{1, 0, 0}, LatticeVector{2, -1, -1}};
}
MarkedCubicLattice example_a2(const LatticeVector& t) {
  return {IntegralLattice(kExampleA2), LatticeVector{1, 0, 0, 0}, t};
}
PolarizedK3Lattice polarized(const IntMatrix& g) {
  LatticeVector h(IntVector(g.rows(), Integer(0)));
  h[0] = 1;
  return {IntegralLattice(g), h};
}

std::vector<LatticeVector> vectors_of(const std::vector<RootCertificate>& roots) {
  std::vector<LatticeVector> out;
  for (const auto& r : roots) out.push_back(r.vector);
  return out;
}

TEST(MarkedCubicLattice, Validation) {
  EXPECT_NO_THROW(pi_htp());
  EXPECT_THROW(MarkedCubicLattice(IntegralLattice(IntMatrix{{3, 0}, {0, -1}}), LatticeVector{1, 0}),
               NotDefiniteError);
  EXPECT_THROW(MarkedCubicLattice(IntegralLattice(IntMatrix{{2}}), LatticeVector{1}), InputError);
  EXPECT_THROW(MarkedCubicLattice(IntegralLattice(kPiHTP), LatticeVector{1, 0, 0}, LatticeVector{0, 0, 1}),
               InputError);
  // <h2, T> has squarefree determinant 14, so it is primitive in every
  // integral lattice and the saturation check cannot fail on valid Grams.
}

TEST(LatticeFromBC, Examples) {
  EXPECT_EQ(lattice_from_bc(7, 12).lattice.det(), 21);
  EXPECT_EQ(lattice_from_bc(0, 4).lattice.det(), 56);
  EXPECT_EQ(lattice_from_bc(1, 2).lattice.gram(), (IntMatrix{{3, 4, 0}, {4, 10, 1}, {0, 1, 2}}));
  EXPECT_THROW(lattice_from_bc(8, 12), InputError);
  EXPECT_THROW(lattice_from_bc(-1, 12), InputError);
  EXPECT_THROW(lattice_from_bc(3, 5), InputError);
  EXPECT_THROW(lattice_from_bc(7, 10), NotDefiniteError);  // 140 - 147 < 0
  EXPECT_FALSE(bc_in_range(1, 2));
  EXPECT_FALSE(bc_in_range(6, 6));  // 84 < 108
  EXPECT_TRUE(bc_in_range(6, 8));
  EXPECT_TRUE(bc_in_range(7, 12));
}

TEST(Roots, CertificatesNamedForTable1) {
  using V = LatticeVector;
  struct Row {
    long long b, c;
    std::vector<V> short_roots;
    std::vector<V> long_roots;  // empty means "not asserted"
    bool long_exact;
  };
  // (6, 8) also carries the long root 4h2-3T+3J; only the named kind is
  // compared exactly there.
  const std::vector<Row> rows{
      {6, 8, {V{4, -3, 2}}, {V{4, -3, 3}}, true},
      {5, 6, {}, {V{4, -3, 3}}, true},
      {2, 2, {V{0, 0, 1}}, {}, true},
      {4, 4, {}, {V{4, -3, 3}}, true},
      {1, 2, {V{0, 0, 1}}, {}, true},
      {7, 12, {}, {}, true},
  };
  for (const auto& r : rows) {
    const MarkedCubicLattice m = lattice_from_bc(r.b, r.c);
    const auto s = find_short_roots(m);
    const auto l = find_long_roots(m);
    EXPECT_EQ(vectors_of(s), r.short_roots) << r.b << "," << r.c;
    EXPECT_EQ(vectors_of(l), r.long_roots) << r.b << "," << r.c;
    for (const auto& c : s) {
      EXPECT_EQ(c.kind, RootKind::Short);
      EXPECT_TRUE(c.verify(m));
    }
    for (const auto& c : l) {
      EXPECT_EQ(c.kind, RootKind::Long);
      EXPECT_TRUE(c.verify(m));
    }
  }
  const auto five = find_long_roots(lattice_from_bc(5, 6));
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].witness_sign, -1);
  EXPECT_EQ(*five[0].witness, (LatticeVector{1, -1, 1}));  // h2 - T + J
}

TEST(Roots, TamperedCertificatesFailVerification) {
  const MarkedCubicLattice m = lattice_from_bc(5, 6);
  RootCertificate c = find_long_roots(m).at(0);
  c.witness_sign = 1;
  EXPECT_FALSE(c.verify(m));
  RootCertificate s{RootKind::Short, LatticeVector{0, 0, 1}, {}, 0};
  EXPECT_FALSE(s.verify(m));  // J.J = 6
}

TEST(NormalForm, Examples) {
  const NormalFormBC a = normal_form(pi_htp());
  EXPECT_EQ(a.b, 7);
  EXPECT_EQ(a.c, 12);
  const NormalFormBC b = normal_form(pi_hpp());
  EXPECT_EQ(b.b, 7);
  EXPECT_EQ(b.c, 12);
  EXPECT_EQ(congruence(b.basis_change, kPiHPP), b.gram());
  for (long long bb = 0; bb <= 7; ++bb)
    for (long long c = 2; c <= 20; c += 2) {
      if (14 * c <= 3 * bb * bb) continue;
      const NormalFormBC f = normal_form(lattice_from_bc(bb, c));
      EXPECT_EQ(f.b, bb);
      EXPECT_EQ(f.c, c);
    }
  EXPECT_THROW(normal_form(MarkedCubicLattice(IntegralLattice(kPiHTP), LatticeVector{1, 0, 0})),
               InputError);
  EXPECT_THROW(normal_form(example_a2(LatticeVector{0, 1, 0, 0})), InputError);
}

TEST(NormalForm, InvariantUnderBaseChange) {
  std::mt19937_64 rng(testing::test_seed() + 20);
  for (int t = 0; t < 150; ++t) {
    const long long b = static_cast<long long>(rng() % 8);
    long long c = 2 * static_cast<long long>(1 + rng() % 15);
    if (14 * c <= 3 * b * b) c += 12;
    const MarkedCubicLattice base = lattice_from_bc(b, c);
    const IntMatrix u = testing::random_unimodular(rng, 3);
    const IntMatrix uinv = inverse_unimodular(u);
    // new basis rows u; a class with old coordinates x has new ones x u^{-1}
    const MarkedCubicLattice moved(IntegralLattice(congruence(u, base.lattice.gram())),
                                   LatticeVector(mul(base.h2.coords, uinv)),
                                   LatticeVector(mul(base.marking->coords, uinv)));
    const NormalFormBC f = normal_form(moved);
    EXPECT_EQ(f.b, b);
    EXPECT_EQ(f.c, c);
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(pi_htp()).gram(), (IntMatrix{{14, 7}, {7, 2}}));
  EXPECT_EQ(sigma(pi_hpp()).gram(), (IntMatrix{{14, 7}, {7, 2}}));
  EXPECT_EQ(sigma(lattice_from_bc(6, 8)).gram(), (IntMatrix{{14, 2}, {2, 0}}));
  EXPECT_EQ(sigma(lattice_from_bc(4, 4)).gram(), (IntMatrix{{14, 6}, {6, 2}}));
  EXPECT_THROW(sigma(example_a2(LatticeVector{0, 1, 0, 0})), InputError);
  EXPECT_THROW(sigma_from_discriminant(3), InvariantError);  // 3 is not a square mod 14
}

TEST(SigmaClosedForm, Examples) {
  const auto a = sigma_closed_form(6, 8);
  EXPECT_EQ(a.raw, (IntMatrix{{14, 12}, {12, 10}}));
  EXPECT_EQ(a.canonical.gram(), (IntMatrix{{14, 2}, {2, 0}}));
  const auto b = sigma_closed_form(7, 12);
  EXPECT_EQ(b.raw, (IntMatrix{{14, -7}, {-7, 2}}));
  EXPECT_EQ(b.canonical.gram(), (IntMatrix{{14, 7}, {7, 2}}));
  const auto c = sigma_closed_form(5, 6);
  EXPECT_EQ(c.raw, (IntMatrix{{14, -3}, {-3, 0}}));
  EXPECT_EQ(c.canonical.gram(), (IntMatrix{{14, 3}, {3, 0}}));
  EXPECT_THROW(sigma_closed_form(8, 12), InputError);
}

TEST(Sigma, PropertiesOverScanRange) {
  for (long long b = 0; b <= 7; ++b)
    for (long long c = 2; c <= 40; c += 2) {
      if (14 * c <= 3 * b * b) continue;
      const MarkedCubicLattice m = lattice_from_bc(b, c);
      const SigmaLattice s = sigma(m);
      const Integer d = m.lattice.det();
      EXPECT_EQ(s.lattice().det(), -d);
      EXPECT_GE(s.alpha, 0);
      EXPECT_LE(s.alpha, 7);
      EXPECT_EQ(s.beta % 2, 0);
      const auto closed = sigma_closed_form(b, c);
      EXPECT_EQ(closed.canonical.gram(), s.gram()) << b << "," << c;
      EXPECT_EQ(testing::cofactor_det(closed.raw), -d);
      const Integer gb = gcd(Integer(b), Integer(14));
      EXPECT_EQ(gb, gcd(s.alpha, Integer(14)));
      const IntegralLattice kperp = complement_lattice(m.lattice, {m.h2, *m.marking});
      const IntegralLattice hperp = polarization_complement(s.polarized);
      EXPECT_EQ(kperp(0, 0), 14 * d / (gb * gb));
      EXPECT_EQ(hperp(0, 0), -14 * d / (gb * gb));
    }
}

TEST(K14Markings, Examples) {
  const auto marks = find_k14_markings(example_a2(LatticeVector{0, 1, 0, 0}));
  const std::vector<LatticeVector> expected{
      {0, 1, 0, 0}, {2, 0, -1, -1}, {3, -1, -1, 0}, {3, -1, 0, -1}};
  std::vector<LatticeVector> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(marks, sorted);
  const MarkedCubicLattice k14(IntegralLattice(IntMatrix{{3, 4}, {4, 10}}), LatticeVector{1, 0});
  EXPECT_EQ(find_k14_markings(k14), (std::vector<LatticeVector>{{0, 1}}));
  const MarkedCubicLattice none(IntegralLattice(IntMatrix{{3, 0}, {0, 2}}), LatticeVector{1, 0});
  EXPECT_TRUE(find_k14_markings(none).empty());
  // Pi carries T and the marking T' = 2h2 - P - P' of the other presentation
  for (const auto& t : find_k14_markings(pi_htp())) {
    EXPECT_EQ(pi_htp().lattice.norm(t), 10);
    EXPECT_TRUE(is_primitive(pi_htp().lattice, {pi_htp().h2, t}));
  }
}

TEST(ScanBC, Flags) {
  const auto rows = scan_bc(7, 12);
  auto find = [&](long long b, long long c) -> const ScanRow& {
    for (const auto& r : rows)
      if (r.b == b && r.c == c) return r;
    throw std::runtime_error("row missing");
  };
  for (auto [b, c] : {std::pair{6LL, 8LL}, {5, 6}, {2, 2}, {4, 4}}) EXPECT_TRUE(find(b, c).rooted());
  EXPECT_FALSE(find(7, 12).rooted());
  EXPECT_GT(find(1, 2).short_roots, 0u);
  EXPECT_FALSE(find(1, 2).in_range);
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_TRUE(std::pair(rows[i - 1].b, rows[i - 1].c) < std::pair(rows[i].b, rows[i].c));
  for (const auto& r : rows) EXPECT_EQ(r.discriminant, 14 * r.c - 3 * r.b * r.b);
  EXPECT_TRUE(scan_bc(0, 0).empty());
  EXPECT_THROW(scan_bc(-1, 4), InputError);
}

TEST(ScanBC, EveryCertificateVerifies) {
  for (long long b = 0; b <= 7; ++b)
    for (long long c = 2; c <= 24; c += 2) {
      if (14 * c <= 3 * b * b) continue;
      const MarkedCubicLattice m = lattice_from_bc(b, c);
      for (const auto& r : find_short_roots(m)) EXPECT_TRUE(r.verify(m));
      for (const auto& r : find_long_roots(m)) EXPECT_TRUE(r.verify(m));
    }
}

TEST(AssociatedK3Check, Examples) {
  EXPECT_TRUE(associated_k3_check(pi_htp(), polarized({{14, 7}, {7, 2}})).passed());
  EXPECT_TRUE(associated_k3_check(pi_hpp(), polarized({{14, -7}, {-7, 2}})).passed());
  const K3CheckResult bad = associated_k3_check(pi_htp(), polarized({{14, 3}, {3, 0}}));
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.find("determinant")->passed);

  const K3CheckResult a2 = associated_k3_check(example_a2(LatticeVector{2, 0, -1, -1}),
                                               polarized({{14, 7, 4}, {7, 2, 2}, {4, 2, -2}}));
  EXPECT_TRUE(a2.passed());
  EXPECT_TRUE(a2.find("determinant")->passed);
  EXPECT_FALSE(a2.find("determinant")->required);

  EXPECT_THROW(associated_k3_check(pi_htp(), polarized({{14}})), InputError);
  // twisting the wrong complement is detected
  EXPECT_FALSE(associated_k3_check(example_a2(LatticeVector{0, 1, 0, 0}),
                                   polarized({{14, 7, 4}, {7, 2, 2}, {4, 2, -2}}))
                   .passed());
}

TEST(AssociatedK3Check, Rank3AgreesWithSigma) {
  for (long long b = 0; b <= 7; ++b)
    for (long long c = 2; c <= 30; c += 2) {
      if (14 * c <= 3 * b * b) continue;
      const MarkedCubicLattice m = lattice_from_bc(b, c);
      EXPECT_TRUE(associated_k3_check(m, sigma(m).polarized).passed()) << b << "," << c;
      EXPECT_TRUE(associated_k3_check(m, {IntegralLattice(sigma_closed_form(b, c).raw),
                                          LatticeVector{1, 0}})
                      .passed());
    }
}

}  // namespace
}  // namespace bnlat

#pragma once

#include <string>
#include <vector>

#include "bnlat/cubic.hpp"
#include "bnlat/discform.hpp"
#include "bnlat/k3.hpp"
#include "bnlat/repro/report.hpp"

namespace bnlat::repro {

using io::to_json;

namespace detail {

inline Json bc_json(long long b, long long c) { return Json{{"b", b}, {"c", c}}; }

inline Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json roots_json(const std::vector<RootCertificate>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(to_json(r.vector));
  return a;
}

inline Json check_result_json(const K3CheckResult& r) {
  Json j = Json::object();
  for (const auto& c : r.checks) j[c.name] = c.passed;
  return j;
}

inline PolarizedK3Lattice first_basis_polarized(const IntMatrix& g, std::vector<std::string> labels) {
  LatticeVector h(IntVector(g.rows(), Integer(0)));
  h[0] = 1;
  return {IntegralLattice(g, std::move(labels)), h};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Table 1

struct Table1Entry {
  Table1Column column;
  long long b, c;
  long long d_s;
  long long d_s0;
};

inline const std::vector<Table1Entry>& table1_entries() {
  static const std::vector<Table1Entry> rows{
      {Table1Column::Gamma0, 6, 8, -4, -14},   {Table1Column::Gamma1, 5, 6, -9, -126},
      {Table1Column::Gamma2E, 2, 2, -16, -56}, {Table1Column::Gamma2L, 4, 4, -8, -28},
      {Table1Column::Gamma3, 7, 12, -21, -6}};
  return rows;
}

inline Report reproduce_table1() {
  Report r{"table1", {}};
  for (const auto& e : table1_entries()) {
    const std::string col = "gamma_" + to_string(e.column);
    const Json bc = detail::bc_json(e.b, e.c);
    const PolarizedK3Lattice printed = table1_lattice(e.column);
    const SigmaClosedForm closed = sigma_closed_form(e.b, e.c);
    r.add(col + ".closed_form", "sigma_closed_form", bc, to_json(printed.lattice.gram()),
          to_json(closed.canonical.gram()));
    const SigmaLattice s = sigma(lattice_from_bc(e.b, e.c));
    r.add(col + ".sigma", "sigma(lattice_from_bc)", bc, to_json(printed.lattice.gram()),
          to_json(s.gram()));
    r.add(col + ".d_S", "determinant", bc, e.d_s, to_json(s.lattice().det()));
    const IntegralLattice perp = polarization_complement(s.polarized);
    r.add(col + ".d_S0", "polarization_complement", bc, e.d_s0, to_json(perp.gram()(0, 0)));
    const BNReport bn = bn_classify(printed);
    r.add(col + ".bn_classify", "bn_classify", Json{{"gram", to_json(printed.lattice.gram())}},
          "Special(" + std::to_string(column_gamma(e.column)) + ")", to_string(bn));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Root certificates

struct NamedRoot {
  long long b, c;
  RootKind kind;
  std::string name;
  LatticeVector vector;
  std::optional<LatticeVector> witness;
};

inline const std::vector<NamedRoot>& named_roots() {
  static const std::vector<NamedRoot> roots{
      {6, 8, RootKind::Short, "4h2-3T+2J", {4, -3, 2}, {}},
      {5, 6, RootKind::Long, "4h2-3T+3J", {4, -3, 3}, LatticeVector{1, -1, 1}},
      {2, 2, RootKind::Short, "J", {0, 0, 1}, {}},
      {4, 4, RootKind::Long, "4h2-3T+3J", {4, -3, 3}, LatticeVector{1, -1, 1}},
      {1, 2, RootKind::Short, "J", {0, 0, 1}, {}},
  };
  return roots;
}

inline Report clifford3_certificates() {
  Report r{"clifford3", {}};
  for (const auto& n : named_roots()) {
    const MarkedCubicLattice m = lattice_from_bc(n.b, n.c);
    const auto found = n.kind == RootKind::Short ? find_short_roots(m) : find_long_roots(m);
    const std::string id = "(" + std::to_string(n.b) + "," + std::to_string(n.c) + ")." +
                           to_string(n.kind) + "_roots";
    bool verified = true;
    for (const auto& c : found) verified = verified && c.verify(m);
    Json inputs = detail::bc_json(n.b, n.c);
    inputs["named"] = n.name;
    r.add(id, n.kind == RootKind::Short ? "find_short_roots" : "find_long_roots", inputs,
          Json::array({to_json(n.vector)}), detail::roots_json(found))
        .passed &= verified;
    if (n.witness) {
      Json actual = nullptr;
      for (const auto& c : found)
        if (c.vector == n.vector && c.witness) actual = to_json(*c.witness);
      r.add(id + ".witness", "find_long_roots", inputs, to_json(*n.witness), actual);
    }
  }
  const MarkedCubicLattice pi = lattice_from_bc(7, 12);
  r.add("(7,12).root_free", "find_short_roots+find_long_roots", detail::bc_json(7, 12),
        Json{{"short", Json::array()}, {"long", Json::array()}},
        Json{{"short", detail::roots_json(find_short_roots(pi))},
             {"long", detail::roots_json(find_long_roots(pi))}});
  return r;
}

// ---------------------------------------------------------------------------
// The two presentations of Pi

inline const IntMatrix& pi_gram_htp() {
  static const IntMatrix g{{3, 4, 1}, {4, 10, -1}, {1, -1, 3}};
  return g;
}
inline const IntMatrix& pi_gram_hpp() {
  static const IntMatrix g{{3, 1, 1}, {1, 3, 0}, {1, 0, 3}};
  return g;
}

inline Report pi_presentations() {
  Report r{"pi", {}};
  // rows h2, T = 2h2 - P - P', P in the basis (h2, P, P')
  const IntMatrix subst{{1, 0, 0}, {2, -1, -1}, {0, 1, 0}};
  const Json inputs{{"basis", "h2,P,P'"}, {"T", "2h2-P-P'"}};
  r.add("substitution", "congruence", inputs, to_json(pi_gram_htp()),
        to_json(congruence(subst, pi_gram_hpp())));
  r.add("substitution.unimodular", "determinant", inputs, 1, to_json(abs(determinant(subst))));
  const IntegralLattice htp(pi_gram_htp(), {"h2", "T", "P"});
  const IntegralLattice hpp(pi_gram_hpp(), {"h2", "P", "P'"});
  r.add("det", "determinant", Json{{"lattice", "Pi"}}, 21, to_json(htp.det()));
  r.add("K14.det", "determinant", Json{{"span", "h2,T"}}, 14,
        to_json(restrict_to(htp, {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}}).det()));
  r.add("K8.det", "determinant", Json{{"span", "h2,P"}}, 8,
        to_json(restrict_to(htp, {LatticeVector{1, 0, 0}, LatticeVector{0, 0, 1}}).det()));

  const MarkedCubicLattice a(htp, LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0});
  const MarkedCubicLattice b(hpp, LatticeVector{1, 0, 0}, LatticeVector{2, -1, -1});
  const IntMatrix sigma_pi{{14, 7}, {7, 2}};
  r.add("sigma.h2_T_P", "sigma", inputs, to_json(sigma_pi), to_json(sigma(a).gram()));
  r.add("sigma.h2_P_P'", "sigma", inputs, to_json(sigma_pi), to_json(sigma(b).gram()));
  for (const auto& [name, m] : {std::pair{"h2_T_P", &a}, std::pair{"h2_P_P'", &b}}) {
    const NormalFormBC nf = normal_form(*m);
    r.add(std::string("normal_form.") + name, "normal_form", inputs, detail::bc_json(7, 12),
          Json{{"b", to_json(nf.b)}, {"c", to_json(nf.c)}});
  }
  const K3CheckResult k3 = associated_k3_check(a, rank2_lattice(7, 2));
  r.add("associated_k3", "associated_k3_check", Json{{"sigma", to_json(sigma_pi)}}, true,
        k3.passed());
  r.add("root_free", "find_short_roots+find_long_roots", Json{{"lattice", "Pi"}}, 0,
        find_short_roots(a).size() + find_long_roots(a).size());
  return r;
}

// ---------------------------------------------------------------------------
// The rank four example

inline const IntMatrix& example_a2_gram() {
  static const IntMatrix g{{3, 4, 1, 1}, {4, 10, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}};
  return g;
}

struct A2Marking {
  std::string name;
  LatticeVector T;
  IntMatrix candidate;
  std::vector<std::string> labels;
  std::string verdict;
};

inline const std::vector<A2Marking>& example_a2_markings() {
  static const std::vector<A2Marking> rows{
      {"T", {0, 1, 0, 0}, {{14, 2, 2}, {2, -2, 1}, {2, 1, -2}}, {"H", "C", "C'"}, "General"},
      {"T'", {2, 0, -1, -1}, {{14, 7, 4}, {7, 2, 2}, {4, 2, -2}}, {"H", "L", "C"}, "Special(3)"},
      {"T''", {3, -1, -1, 0}, {{14, 2, 1}, {2, -2, 0}, {1, 0, -2}}, {"H", "C", "L"}, "General"},
      {"T'''", {3, -1, 0, -1}, {{14, 2, 1}, {2, -2, 0}, {1, 0, -2}}, {"H", "C", "L"}, "General"},
  };
  return rows;
}

inline Report example_a2() {
  Report r{"example_a2", {}};
  const IntegralLattice l(example_a2_gram(), {"h2", "T", "P", "P'"});
  const LatticeVector h2{1, 0, 0, 0};
  r.add("det", "determinant", Json{{"lattice", "Lambda"}}, 66, to_json(l.det()));

  std::vector<LatticeVector> stated;
  for (const auto& m : example_a2_markings()) stated.push_back(m.T);
  std::sort(stated.begin(), stated.end());
  const MarkedCubicLattice unmarked(l, h2);
  r.add("markings", "find_k14_markings", Json{{"lattice", "Lambda"}},
        detail::vectors_json(stated), detail::vectors_json(find_k14_markings(unmarked)));

  for (const auto& m : example_a2_markings()) {
    const MarkedCubicLattice marked(l, h2, m.T);
    const PolarizedK3Lattice cand = detail::first_basis_polarized(m.candidate, m.labels);
    const Json inputs{{"marking", m.name}, {"T", to_json(m.T)}, {"candidate", to_json(m.candidate)}};
    r.add(m.name + ".candidate_det", "determinant", inputs, 66, to_json(abs(cand.lattice.det())));
    const K3CheckResult k3 = associated_k3_check(marked, cand);
    Json expected = Json::object();
    for (const auto& c : k3.checks) expected[c.name] = true;
    r.add(m.name + ".associated_k3", "associated_k3_check", inputs, expected,
          detail::check_result_json(k3));
    r.add(m.name + ".bn_classify", "bn_classify", inputs, m.verdict, to_string(bn_classify(cand)));
  }

  const auto& a = example_a2_markings()[2];
  const auto& b = example_a2_markings()[3];
  const PolarizedK3Lattice ca = detail::first_basis_polarized(a.candidate, a.labels);
  const PolarizedK3Lattice cb = detail::first_basis_polarized(b.candidate, b.labels);
  const IsometryResult iso = is_isometric_definite(ca.lattice, cb.lattice, std::pair{ca.H, cb.H});
  r.add("T''~T'''.candidates", "is_isometric_definite(H fixed)",
        Json{{"first", to_json(a.candidate)}, {"second", to_json(b.candidate)}}, true,
        iso.isometric);
  const IntegralLattice ka(complement_lattice(l, {h2, a.T}).gram());
  const IntegralLattice kb(complement_lattice(l, {h2, b.T}).gram());
  r.add("T''~T'''.complements", "is_isometric_definite",
        Json{{"first", to_json(a.T)}, {"second", to_json(b.T)}}, true,
        is_isometric_definite(ka, kb).isometric);
  return r;
}

inline std::vector<Report> reproduce_all() {
  return {reproduce_table1(), clifford3_certificates(), pi_presentations(), example_a2()};
}

}  // namespace bnlat::repro

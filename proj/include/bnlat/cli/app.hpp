#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>

#include "bnlat/cubic.hpp"
#include "bnlat/discform.hpp"
#include "bnlat/io/json.hpp"
#include "bnlat/k3.hpp"
#include "bnlat/repro/reports.hpp"

namespace bnlat::cli {

using io::Json;
using io::to_json;

enum ExitCode : int { kOk = 0, kInputError = 1, kInvariantFailure = 2, kMismatch = 3 };

/// Gauss sums over larger discriminant groups are skipped by `lattice info`.
inline constexpr long long kInfoGaussSumBound = 20000;

namespace detail {

struct Output {
  Json json;
  std::string text;
  int code = kOk;
};

inline Json read_document(const std::string& path, std::istream& in) {
  if (path == "-") return io::parse_json(in, "stdin");
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return io::parse_json(f, path);
}

inline IntegralLattice nondegenerate(const io::LatticeFile& f) {
  return IntegralLattice(f.lattice.gram(), f.lattice.labels());
}

inline MarkedCubicLattice cubic_from(const io::LatticeFile& f) {
  if (!f.h2) throw InputError("cubic commands need \"distinguished\": {\"h2\": ...}");
  return {nondegenerate(f), *f.h2, f.T};
}

inline PolarizedK3Lattice k3_from(const io::LatticeFile& f) {
  if (!f.H) throw InputError("k3 commands need \"distinguished\": {\"H\": ...}");
  return {nondegenerate(f), *f.H};
}

inline std::string matrix_text(const IntMatrix& m) {
  std::ostringstream s;
  s << m;
  return s.str();
}

inline std::string vector_text(const LatticeVector& v, const IntegralLattice& l) {
  if (l.labels().empty()) return to_string(v);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Integer a = abs(v[i]);
    s += v[i] < 0 ? "-" : (s.empty() ? "" : "+");
    if (a != 1) s += a.str();
    s += l.label(i);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// lattice

inline Output lattice_info(const io::LatticeFile& f) {
  const IntegralLattice& l = f.lattice;
  Output o;
  const Signature s = signature(l);
  o.json["gram"] = to_json(l.gram());
  o.json["rank"] = l.rank();
  o.json["det"] = to_json(l.det());
  o.json["signature"] = Json::array({s.positive, s.negative, s.zero});
  o.json["even"] = is_even(l);
  std::ostringstream t;
  t << "rank " << l.rank() << ", det " << l.det() << ", signature (" << s.positive << ","
    << s.negative << ")" << (s.zero ? ", degenerate" : "") << ", " << (is_even(l) ? "even" : "odd")
    << "\n";
  if (l.is_nondegenerate()) {
    const DiscriminantGroup g = discriminant_group(l);
    o.json["discriminant_group"] = Json{{"invariants", to_json(g.invariants)},
                                        {"order", to_json(g.order())}};
    t << "discriminant group Z/" << (g.invariants.empty() ? "1" : "");
    for (std::size_t i = 0; i < g.invariants.size(); ++i)
      t << (i ? " + Z/" : "") << g.invariants[i];
    t << "\n";
    if (is_even(l) && g.order() <= kInfoGaussSumBound) {
      const int sig = gauss_milgram_signature(discriminant_quadratic_form(l));
      o.json["gauss_milgram_signature"] = sig;
      t << "Gauss-Milgram signature " << sig << " mod 8\n";
    }
  } else {
    o.json["discriminant_group"] = nullptr;
  }
  o.text = t.str();
  return o;
}

inline Output lattice_overlattices(const io::LatticeFile& f, long long bound) {
  const IntegralLattice l = nondegenerate(f);
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& m : even_overlattices(l, static_cast<std::size_t>(bound))) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < m.basis.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.basis.cols(); ++j) row.push_back(to_json(m.basis(i, j)));
      basis.push_back(row);
    }
    list.push_back(Json{{"index", to_json(m.index)},
                        {"det", to_json(m.lattice.det())},
                        {"gram", to_json(m.lattice.gram())},
                        {"basis", basis}});
    t << "index " << m.index << ", det " << m.lattice.det() << ", gram "
      << matrix_text(m.lattice.gram()) << "\n";
  }
  o.json["overlattices"] = list;
  o.text = t.str();
  return o;
}

inline Output lattice_easy_test(const io::LatticeFile& f) {
  const EasyTestVerdict v = easy_test(f.lattice);
  Output o;
  o.json = Json{{"verdict", to_string(v)}, {"criterion", v.number()}, {"reason", v.reason}};
  o.text = to_string(v) + (v.reason.empty() ? "" : ": " + v.reason) + "\n";
  return o;
}

// ---------------------------------------------------------------------------
// cubic

inline Output cubic_roots(const io::LatticeFile& f) {
  const MarkedCubicLattice m = cubic_from(f);
  const auto s = find_short_roots(m);
  const auto l = find_long_roots(m);
  Output o;
  std::ostringstream t;
  Json js = Json::array(), jl = Json::array();
  for (const auto& r : s) {
    js.push_back(Json{{"vector", to_json(r.vector)}, {"verified", r.verify(m)}});
    t << "short root " << vector_text(r.vector, m.lattice) << "\n";
  }
  for (const auto& r : l) {
    jl.push_back(Json{{"vector", to_json(r.vector)},
                      {"witness", to_json(*r.witness)},
                      {"witness_sign", r.witness_sign},
                      {"verified", r.verify(m)}});
    t << "long root " << vector_text(r.vector, m.lattice) << ", (v" << (r.witness_sign > 0 ? "+" : "-")
      << "h2)/3 = " << vector_text(*r.witness, m.lattice) << "\n";
  }
  o.json = Json{{"short_roots", js}, {"long_roots", jl}, {"root_free", s.empty() && l.empty()}};
  if (s.empty() && l.empty()) t << "no roots\n";
  o.text = t.str();
  return o;
}

inline Output cubic_normal_form(const io::LatticeFile& f) {
  const NormalFormBC nf = normal_form(cubic_from(f));
  Output o;
  o.json = Json{{"b", to_json(nf.b)},
                {"c", to_json(nf.c)},
                {"discriminant", to_json(nf.discriminant())},
                {"in_range", bc_in_range(static_cast<long long>(nf.b), static_cast<long long>(nf.c))},
                {"gram", to_json(nf.gram())},
                {"basis_change", to_json(nf.basis_change)}};
  o.text = "(b,c) = (" + nf.b.str() + "," + nf.c.str() + "), d = " + nf.discriminant().str() + "\n";
  return o;
}

inline Output cubic_sigma(const io::LatticeFile& f) {
  const SigmaLattice s = sigma(cubic_from(f));
  Output o;
  o.json = Json{{"gram", to_json(s.gram())},
                {"alpha", to_json(s.alpha)},
                {"beta", to_json(s.beta)},
                {"det", to_json(s.lattice().det())}};
  o.text = "sigma = " + matrix_text(s.gram()) + ", det " + s.lattice().det().str() + "\n";
  return o;
}

inline Output cubic_markings(const io::LatticeFile& f) {
  const MarkedCubicLattice m = cubic_from(f);
  Output o;
  Json list = Json::array();
  std::string t;
  for (const auto& v : find_k14_markings(m)) {
    list.push_back(to_json(v));
    t += vector_text(v, m.lattice) + "\n";
  }
  o.json = Json{{"markings", list}};
  o.text = t.empty() ? "no markings\n" : t;
  return o;
}

inline Output cubic_scan(long long bmax, long long cmax) {
  Output o;
  Json rows = Json::array();
  std::ostringstream t;
  t << "  b    c     d  sigma           range  short  long\n";
  for (const auto& r : scan_bc(bmax, cmax)) {
    const IntMatrix g{{Integer(14), r.alpha}, {r.alpha, r.beta}};
    rows.push_back(Json{{"b", r.b},
                        {"c", r.c},
                        {"d", to_json(r.discriminant)},
                        {"sigma", to_json(g)},
                        {"in_range", r.in_range},
                        {"short_roots", r.short_roots},
                        {"long_roots", r.long_roots}});
    std::string sg = "(14," + r.alpha.str() + ";" + r.alpha.str() + "," + r.beta.str() + ")";
    t << std::setw(3) << r.b << std::setw(5) << r.c << std::setw(6) << r.discriminant << "  "
      << std::left << std::setw(16) << sg << std::setw(7) << (r.in_range ? "yes" : "no")
      << std::right << std::setw(5) << r.short_roots << std::setw(6) << r.long_roots << "\n";
  }
  o.json = Json{{"rows", rows}};
  o.text = t.str();
  return o;
}

// ---------------------------------------------------------------------------
// k3

inline Output k3_classify(const io::LatticeFile& f) {
  const PolarizedK3Lattice s = k3_from(f);
  const BNReport r = bn_classify(s);
  auto markers = [&](const std::vector<BNMarker>& ms) {
    Json a = Json::array();
    for (const auto& m : ms)
      a.push_back(Json{{"kind", to_string(m.kind)},
                       {"witness", to_json(m.witness)},
                       {"primitive", m.primitive_span}});
    return a;
  };
  Output o;
  o.json = Json{{"verdict", to_string(r)},
                {"gamma_bound", r.gamma_bound ? Json(*r.gamma_bound) : Json(nullptr)},
                {"markers", markers(r.markers)},
                {"excluded", markers(r.excluded)}};
  std::string t = to_string(r) + "\n";
  for (const auto& m : r.markers)
    t += "  " + to_string(m.kind) + " " + vector_text(m.witness, s.lattice) + "\n";
  for (const auto& m : r.excluded)
    t += "  " + to_string(m.kind) + " " + vector_text(m.witness, s.lattice) + " (not primitive)\n";
  o.text = t;
  return o;
}

// ---------------------------------------------------------------------------
// reproduction reports

inline int report_exit_code(const std::vector<repro::Report>& reports, bool check) {
  for (const auto& r : reports)
    if (check && !r.passed()) return kMismatch;
  return kOk;
}

inline Output paper(const std::string& which, bool check) {
  std::vector<repro::Report> reports;
  if (which == "table1") reports = {repro::reproduce_table1()};
  else if (which == "clifford3") reports = {repro::clifford3_certificates()};
  else if (which == "pi") reports = {repro::pi_presentations()};
  else if (which == "example-a2") reports = {repro::example_a2()};
  else if (which == "all") reports = repro::reproduce_all();
  else throw InputError("unknown report '" + which + "'");
  Output o;
  o.json = which == "all" ? repro::to_json(reports) : repro::to_json(reports[0]);
  o.text = repro::render_text(reports);
  o.code = report_exit_code(reports, check);
  return o;
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Output goes
/// to out, diagnostics to err; `-` as a file reads the document from in.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Exact lattice computations for cubic fourfolds and degree 14 K3 surfaces", "bnlat"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "Render human-readable text instead of JSON");
  app.fallthrough();

  std::function<detail::Output()> action;
  std::string file;
  auto file_command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                          std::function<detail::Output(const io::LatticeFile&)> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->add_option("file", file, "Lattice JSON file, or - for stdin")->required();
    c->callback([&, fn] {
      action = [&, fn] { return fn(io::lattice_file_from_json(detail::read_document(file, in))); };
    });
  };

  CLI::App* lattice = app.add_subcommand("lattice", "Integral lattice invariants");
  lattice->require_subcommand(1);
  file_command(lattice, "info", "Basic invariants and the discriminant group",
               detail::lattice_info);
  long long bound = static_cast<long long>(kDefaultSubgroupBound);
  {
    CLI::App* c = lattice->add_subcommand("overlattices", "Even overlattices");
    c->add_option("file", file, "Lattice JSON file, or - for stdin")->required();
    c->add_option("--bound", bound, "Largest discriminant group searched")->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        return detail::lattice_overlattices(io::lattice_file_from_json(detail::read_document(file, in)),
                                            bound);
      };
    });
  }
  file_command(lattice, "easy-test", "Arithmetic exclusion criteria", detail::lattice_easy_test);

  CLI::App* cubic = app.add_subcommand("cubic", "Cubic fourfold lattices");
  cubic->require_subcommand(1);
  file_command(cubic, "roots", "Short and long root certificates", detail::cubic_roots);
  file_command(cubic, "normal-form", "The pair (b, c) of a marked rank 3 lattice",
               detail::cubic_normal_form);
  file_command(cubic, "sigma", "The associated rank 2 K3 lattice", detail::cubic_sigma);
  file_command(cubic, "markings", "Discriminant 14 markings", detail::cubic_markings);
  long long bmax = 7, cmax = 20;
  {
    CLI::App* c = cubic->add_subcommand("scan", "Tabulate the (b, c) plane");
    c->add_option("--bmax", bmax, "Largest b")->check(CLI::NonNegativeNumber);
    c->add_option("--cmax", cmax, "Largest c")->check(CLI::NonNegativeNumber);
    c->callback([&] { action = [&] { return detail::cubic_scan(bmax, cmax); }; });
  }

  CLI::App* k3 = app.add_subcommand("k3", "Polarized K3 lattices");
  k3->require_subcommand(1);
  file_command(k3, "classify", "Brill-Noether marker classes", detail::k3_classify);

  CLI::App* paper = app.add_subcommand("paper", "Reproduction reports");
  paper->require_subcommand(1);
  bool check = false;
  paper->add_flag("--check", check, "Exit with status 3 if any check fails");
  paper->fallthrough();
  for (const char* name : {"table1", "clifford3", "pi", "example-a2", "all"}) {
    CLI::App* c = paper->add_subcommand(name, std::string("Report ") + name);
    const std::string which = name;
    c->callback([&, which] { action = [&, which] { return detail::paper(which, check); }; });
  }

  std::vector<std::string> argv_storage{"bnlat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const detail::Output o = action();
    if (text)
      out << o.text;
    else
      out << o.json.dump(2) << "\n";
    return o.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantFailure;
  }
}

}  // namespace bnlat::cli

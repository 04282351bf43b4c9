#pragma once

#include <istream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bnlat/latcore.hpp"

namespace bnlat::io {

using Json = nlohmann::ordered_json;

/// Largest magnitude that survives a round trip through an IEEE double.
inline const Integer& json_safe_bound() {
  static const Integer bound = (Integer(1) << 53) - 1;
  return bound;
}

inline Json to_json(const Integer& x) {
  if (abs(x) <= json_safe_bound()) return Json(static_cast<long long>(x));
  return Json(x.str());
}

inline Json to_json(const Rational& x) {
  if (is_integer(x)) return to_json(to_integer(x));
  return Json(to_string(x));
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const LatticeVector& v) { return to_json(v.coords); }

inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json to_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

/// Accepts a JSON integer or a decimal string.
inline Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    return Integer(j.get<long long>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError(where + ": '" + s + "' is not an integer");
    return Integer(s);
  }
  throw InputError(where + ": expected an integer, got " + std::string(j.type_name()));
}

inline IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw InputError(where + ": Gram matrix must be square");
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

inline Json parse_json(std::istream& in, const std::string& source) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + source + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Lattice files
//
// {"gram": [[...]], "labels": [...], "distinguished": {"h2": i} | {"H": i},
//  "marking": {"T": i}}
// Indices refer to basis positions; a coordinate array is accepted in
// place of an index.

struct LatticeFile {
  IntegralLattice lattice;
  std::optional<LatticeVector> h2;
  std::optional<LatticeVector> H;
  std::optional<LatticeVector> T;
};

inline LatticeVector class_from_json(const Json& j, std::size_t rank, const std::string& where) {
  if (j.is_array()) {
    LatticeVector v(vector_from_json(j, where));
    if (v.size() != rank) throw InputError(where + ": coordinate vector has the wrong length");
    return v;
  }
  const Integer idx = integer_from_json(j, where);
  if (idx < 0 || idx >= Integer(rank))
    throw InputError(where + ": basis index " + idx.str() + " out of range");
  return LatticeVector::basis(rank, static_cast<std::size_t>(idx));
}

inline LatticeFile lattice_file_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("lattice file: top level must be an object");
  if (!j.contains("gram")) throw InputError("lattice file: missing \"gram\"");
  const IntMatrix g = matrix_from_json(j.at("gram"), "gram");
  if (!g.is_symmetric()) throw InputError("gram: Gram matrix is not symmetric");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != g.rows())
      throw InputError("labels: expected one string per basis vector");
    for (const auto& s : l) {
      if (!s.is_string()) throw InputError("labels: expected strings");
      labels.push_back(s.get<std::string>());
    }
  }
  LatticeFile f;
  f.lattice = IntegralLattice::allowing_degenerate(g, labels);
  const std::size_t n = g.rows();
  if (j.contains("distinguished")) {
    const Json& d = j.at("distinguished");
    if (!d.is_object()) throw InputError("distinguished: expected an object");
    if (d.contains("h2")) f.h2 = class_from_json(d.at("h2"), n, "distinguished.h2");
    if (d.contains("H")) f.H = class_from_json(d.at("H"), n, "distinguished.H");
  }
  if (j.contains("marking")) {
    const Json& m = j.at("marking");
    if (!m.is_object() || !m.contains("T")) throw InputError("marking: expected {\"T\": ...}");
    f.T = class_from_json(m.at("T"), n, "marking.T");
  }
  return f;
}

inline Json to_json(const IntegralLattice& l) {
  Json j;
  j["gram"] = to_json(l.gram());
  if (!l.labels().empty()) j["labels"] = l.labels();
  return j;
}

}  // namespace bnlat::io

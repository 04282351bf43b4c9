#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bnlat/io/json.hpp"

namespace bnlat::repro {

using io::Json;

/// One machine-checked cell: which operation ran on which inputs, what was
/// expected and what came out.
struct Check {
  std::string id;
  std::string operation;
  Json inputs;
  Json expected;
  Json actual;
  bool passed = false;
};

struct Report {
  std::string name;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  Check& add(std::string id, std::string operation, Json inputs, Json expected, Json actual) {
    const bool ok = expected == actual;
    return add(std::move(id), std::move(operation), std::move(inputs), std::move(expected),
               std::move(actual), ok);
  }
  Check& add(std::string id, std::string operation, Json inputs, Json expected, Json actual,
             bool ok) {
    checks.push_back({std::move(id), std::move(operation), std::move(inputs), std::move(expected),
                      std::move(actual), ok});
    return checks.back();
  }
};

inline Json to_json(const Check& c) {
  return Json{{"id", c.id},           {"operation", c.operation}, {"inputs", c.inputs},
              {"expected", c.expected}, {"actual", c.actual},       {"passed", c.passed}};
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"report", r.name}, {"passed", r.passed()}, {"checks", checks}};
}

inline Json to_json(const std::vector<Report>& reports) {
  Json all = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    all.push_back(to_json(r));
    ok = ok && r.passed();
  }
  return Json{{"report", "all"}, {"passed", ok}, {"reports", all}};
}

inline std::string render_text(const Report& r) {
  std::size_t id_width = 2, op_width = 9;
  for (const auto& c : r.checks) {
    id_width = std::max(id_width, c.id.size());
    op_width = std::max(op_width, c.operation.size());
  }
  std::ostringstream out;
  out << "report " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "ok  " : "FAIL") << "  " << c.id
        << std::string(id_width - c.id.size() + 2, ' ') << c.operation
        << std::string(op_width - c.operation.size() + 2, ' ') << c.actual.dump();
    if (!c.passed) out << "  expected " << c.expected.dump();
    out << "\n";
  }
  return out.str();
}

inline std::string render_text(const std::vector<Report>& reports) {
  std::string s;
  for (const auto& r : reports) s += render_text(r);
  return s;
}

}  // namespace bnlat::repro

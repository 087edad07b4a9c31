#pragma once

// JSON emitters for every report the CLI prints. Field order is fixed
// (ordered_json) so identical inputs serialize byte-identically.

#include <json.hpp>
#include <string>

#include "cyclorad/area.hpp"
#include "cyclorad/core.hpp"
#include "cyclorad/polynomial.hpp"
#include "cyclorad/solver.hpp"
#include "cyclorad/verify.hpp"

namespace cyclorad {

using json = nlohmann::ordered_json;

inline json to_json(const classification& cls) {
  json j;
  j["kind"] = std::string(polygon_class_name(cls.kind));
  if (cls.kind != polygon_class::pci) j["longest_index"] = cls.longest_index;
  return j;
}

inline json to_json(const signature& sig) {
  json j;
  j["signs"] = sig.signs;
  j["winding"] = sig.winding;
  return j;
}

inline json to_json(const radius_solution& sol) {
  json j;
  j["radius"] = sol.r;
  j["classification"] = to_json(sol.cls);
  j["branch"] = std::string(branch_name(sol.branch));
  j["winding"] = sol.winding;
  if (sol.sig) j["signature"] = to_json(*sol.sig);
  j["residual"] = sol.residual;
  j["equation_value"] = sol.equation_value;
  return j;
}

inline json to_json(const root_set& set) {
  json j;
  j["roots"] = json::array();
  for (const auto& sol : set.roots) j["roots"].push_back(to_json(sol));
  j["rejected"] = json::array();
  for (const auto& rej : set.rejected)
    j["rejected"].push_back(json{{"r", rej.r}, {"reason", rej.reason}});
  return j;
}

inline json to_json(const criterion_report& rep) {
  json j;
  j["criterion1"] = {{"lhs", rep.criterion1.lhs},
                     {"rhs", rep.criterion1.rhs},
                     {"satisfied", rep.criterion1.satisfied}};
  j["criterion2"] = {{"lhs", rep.criterion2.lhs},
                     {"rhs", rep.criterion2.rhs},
                     {"satisfied", rep.criterion2.satisfied}};
  j["criterion3"] = {{"ratios", rep.criterion3.ratios},
                     {"satisfied", rep.criterion3.satisfied}};
  return j;
}

inline json to_json(const area_result& area) {
  json j;
  j["total"] = area.total;
  j["method"] = area.method == area_method::sum ? "Sum" : "Integral";
  j["per_side"] = area.per_side;
  j["classification"] = to_json(area.cls);
  return j;
}

inline json to_json(const polygon_reconstruction& rec) {
  json j;
  j["radius"] = rec.radius;
  j["closure_error"] = rec.closure_error;
  json verts = json::array();
  for (const auto& v : rec.vertices) verts.push_back(json::array({v[0], v[1]}));
  j["vertices"] = verts;
  j["cumulative_angles"] = rec.cumulative_angles;
  j["side_errors"] = rec.side_errors;
  j["signed_area"] = rec.signed_area;
  return j;
}

/// {variable:"r2", coefficients:["num" or "num/den", ...], factors:[...]}
inline json to_json(const radius_polynomial& poly) {
  json j;
  j["variable"] = "r2";
  json coeffs = json::array();
  for (const auto& c : poly.coefficients) coeffs.push_back(rational_to_string(c));
  j["coefficients"] = coeffs;
  j["factors"] = json::array();
  j["scale_note"] = poly.scale_note;
  return j;
}

inline json to_json(const regular_factorization& fac) {
  json j = to_json(expanded_polynomial(fac));
  for (const auto& f : fac.factors) {
    json jf;
    jf["divisor"] = f.divisor;
    jf["multiplicity"] = f.multiplicity;
    json coeffs = json::array();
    for (const auto& c : f.poly.coefficients) coeffs.push_back(rational_to_string(c));
    jf["coefficients"] = coeffs;
    j["factors"].push_back(jf);
  }
  j["scale_note"] = fac.scale_note;
  return j;
}

}  // namespace cyclorad

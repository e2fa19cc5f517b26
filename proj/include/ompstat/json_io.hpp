#pragma once

#include <string>

#include "json.hpp"
#include "ompstat/colored.hpp"
#include "ompstat/distributions.hpp"
#include "ompstat/partitions.hpp"
#include "ompstat/qpoly.hpp"
#include "ompstat/symfunc.hpp"

namespace ompstat {

using json = nlohmann::ordered_json;

// QPoly as an array of decimal coefficient strings, constant term first.
inline json qpoly_json(const QPoly& p) {
  json a = json::array();
  for (Int c : p.coeffs()) a.push_back(dec_string(c));
  return a;
}

// Ordered multiset partition as an array of arrays of integers.
inline json omp_json(const OrderedMultisetPartition& mu) {
  json a = json::array();
  for (const auto& b : mu.blocks) a.push_back(b);
  return a;
}

inline json expansion_json(const SymFuncExpansion& e, int k) {
  json j;
  j["basis"] = e.basis == Basis::monomial ? "monomial" : "schur";
  j["n"] = e.degree;
  j["k"] = k;
  json coeffs = json::array();
  for (const auto& [lambda, poly] : e.coefficients) {
    json c;
    c["partition"] = lambda.parts;
    c["poly"] = qpoly_json(poly);
    coeffs.push_back(std::move(c));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

inline json report_json(const VerifyReport& report) {
  json a = json::array();
  for (const VerifyEntry& e : report) {
    json j;
    j["theorem"] = e.theorem;
    j["instance"] = e.instance;
    j["lhs"] = qpoly_json(e.lhs);
    j["rhs"] = qpoly_json(e.rhs);
    j["pass"] = e.pass;
    a.push_back(std::move(j));
  }
  return a;
}

inline std::string csv_escape(const std::string& s) {
  bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string report_csv(const VerifyReport& report) {
  std::string out = "theorem,instance,lhs,rhs,pass\n";
  for (const VerifyEntry& e : report) {
    out += csv_escape(e.theorem) + ',' + csv_escape(e.instance) + ',' +
           csv_escape(e.lhs.pretty()) + ',' + csv_escape(e.rhs.pretty()) +
           ',' + (e.pass ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace ompstat

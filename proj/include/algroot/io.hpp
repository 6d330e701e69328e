#pragma once

// JSON forms of instances, results, traces and bound reports. Numbers travel
// as decimal strings ("p/q" for rationals).

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "algroot/bench.hpp"
#include "algroot/bounds.hpp"

namespace algroot {

using json = nlohmann::ordered_json;

namespace detail {

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::InvalidInput, "expected a rational, got " + j.dump());
}

inline IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected a coefficient array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

}  // namespace detail

inline json to_json(const IntPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.get_str());
  if (a.empty()) a.push_back("0");
  return a;
}

inline json to_json(const RealAlgebraic& a) {
  return {{"A", to_json(a.poly())}, {"I", {a.lo().get_str(), a.hi().get_str()}}};
}

/// {"A": [...], "I": [lo, hi], "B": [[...], ...]}; coefficients ascending.
inline json to_json(const AlgPoly& B) {
  json j = to_json(B.alpha());
  json b = json::array();
  for (int i = 0; i <= B.n(); ++i) b.push_back(to_json(B.coeff(i)));
  j["B"] = b;
  return j;
}

inline RealAlgebraic algebraic_from_json(const json& j) {
  if (!j.contains("A") || !j.contains("I") || !j["I"].is_array() || j["I"].size() != 2)
    throw Error(ErrorKind::InvalidInput, "instance needs \"A\" and a two-element \"I\"");
  return make_algebraic(detail::poly_from_json(j["A"]), detail::rational_from_json(j["I"][0]),
                        detail::rational_from_json(j["I"][1]));
}

/// Accepts {"A", "I", "B"} or {"alpha": {"A", "I"}, "B"}.
inline AlgPoly instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("B") || !j["B"].is_array())
    throw Error(ErrorKind::InvalidInput, "instance needs a \"B\" array");
  RealAlgebraic alpha = algebraic_from_json(j.contains("alpha") ? j["alpha"] : j);
  std::vector<IntPoly> b;
  for (const auto& x : j["B"]) b.push_back(detail::poly_from_json(x));
  return AlgPoly::make(alpha, b);
}

inline AlgPoly read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  return instance_from_json(j);
}

inline json to_json(const RootInterval& r) {
  if (r.is_exact()) return {{"kind", "exact"}, {"value", r.lo.get_str()}};
  return {{"kind", "open"}, {"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}, {"mult", r.multiplicity}};
}

inline RootInterval root_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "exact") return RootInterval::exact(detail::rational_from_json(j.at("value")));
  if (k == "open")
    return RootInterval::open(detail::rational_from_json(j.at("lo")), detail::rational_from_json(j.at("hi")),
                              j.value("mult", 1));
  throw Error(ErrorKind::InvalidInput, "unknown root kind " + k);
}

inline json to_json(const IsolationStats& s) {
  return {{"engine", s.engine},
          {"nodes", s.nodes},
          {"max_depth", s.max_depth},
          {"max_endpoint_bits", s.max_endpoint_bits},
          {"max_precision", s.max_precision},
          {"restarts", s.restarts},
          {"nudges", s.nudges},
          {"sequence_length", s.sequence_length}};
}

inline json to_json(const IsolationResult& r) {
  json roots = json::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  return {{"roots", roots}, {"stats", to_json(r.stats)}};
}

inline json to_json(const IndirectTrace& t) {
  json factors = json::array();
  for (const auto& f : t.factors) factors.push_back({{"factor", to_json(f.factor)}, {"multiplicity", f.multiplicity}});
  json signs = json::array();
  for (const auto& [a, b] : t.endpoint_signs) signs.push_back({a, b});
  return {{"R", to_json(t.R)},
          {"C", to_json(t.C)},
          {"factors", factors},
          {"candidates", to_json(t.candidates)},
          {"kept", t.kept},
          {"endpoint_signs", signs},
          {"seconds",
           {{"resultant", t.seconds_resultant},
            {"squarefree", t.seconds_squarefree},
            {"isolate", t.seconds_isolate},
            {"filter", t.seconds_filter}}}};
}

/// Integral values print as integers, others as "p/q" strings.
inline json to_json(const BoundReport& r) {
  json j = json::object();
  for (const auto& [k, v] : r.entries) {
    if (v.get_den() == 1 && v.get_num().fits_slong_p())
      j[k] = v.get_num().get_si();
    else
      j[k] = v.get_str();
  }
  return j;
}

inline json to_json(const InstanceParams& p) {
  return {{"m", p.m}, {"n", p.n}, {"tau", p.tau}, {"sigma", p.sigma}, {"eta", p.eta}, {"ell", p.ell}};
}

}  // namespace algroot

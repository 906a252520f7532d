#pragma once

// JSON forms of codes, permutation lists, image systems, search results,
// classifications and verification reports. Key order is fixed and big
// integers are decimal strings, so payloads are byte-stable.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polarauto/automorphism.hpp"
#include "polarauto/code.hpp"
#include "polarauto/error.hpp"
#include "polarauto/exact_search.hpp"
#include "polarauto/monomial.hpp"
#include "polarauto/permutation.hpp"
#include "polarauto/stabilizer_chain.hpp"
#include "polarauto/theorems.hpp"

namespace polarauto {

using Json = nlohmann::ordered_json;

inline Json anf_to_json(const MonomialSet& s) {
  Json out = Json::array();
  for (const auto& m : s) out.push_back(m.vars());
  return out;
}

inline MonomialSet anf_from_json(int n, const Json& j) {
  require(j.is_array(), "ANF must be a list of index lists");
  MonomialSet s(n);
  for (const auto& term : j) {
    require(term.is_array(), "ANF term must be a list of variable indices");
    std::vector<int> vars;
    for (const auto& v : term) {
      require(v.is_number_integer(), "variable index must be an integer");
      vars.push_back(v.get<int>());
    }
    require(s.insert(Monomial::from_vars(n, vars)), "ANF lists a monomial twice");
  }
  return s;
}

inline Json code_to_json(const BinaryCode& c) {
  Json out;
  out["n"] = c.num_vars();
  out["monomials"] = c.monomials() ? anf_to_json(*c.monomials()) : Json(nullptr);
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(g.to_string());
  out["generators"] = std::move(gens);
  out["dim"] = c.dim();
  return out;
}

inline BinaryCode code_from_json(const Json& j) {
  require(j.is_object(), "code JSON must be an object");
  require(j.contains("n") && j["n"].is_number_integer(), "code JSON needs an integer n");
  const int n = j["n"].get<int>();
  require(n >= 0 && n <= kMaxVars, "code JSON n out of range");
  std::vector<EvalVector> gens;
  if (j.contains("generators") && !j["generators"].is_null()) {
    require(j["generators"].is_array(), "generators must be a list of bit strings");
    for (const auto& g : j["generators"]) {
      require(g.is_string(), "generator must be a bit string");
      EvalVector v = EvalVector::parse(g.get<std::string>());
      require(v.num_vars() == n, "generator length does not match 2^n");
      gens.push_back(std::move(v));
    }
  }
  BinaryCode c;
  if (j.contains("monomials") && !j["monomials"].is_null()) {
    MonomialSet s = anf_from_json(n, j["monomials"]);
    // An empty monomial list stands for the constant monomial.
    if (s.empty()) s.insert(Monomial::one(n));
    c = BinaryCode::from_monomials(s);
    if (!gens.empty())
      require(c.same_space(BinaryCode::from_generators(n, gens)),
              "generators do not match the monomials");
  } else {
    require(!gens.empty(), "code JSON needs monomials or generators");
    c = BinaryCode::from_generators(n, std::move(gens));
  }
  if (j.contains("dim") && !j["dim"].is_null())
    require(j["dim"].get<std::size_t>() == c.dim(), "dim does not match the generators");
  return c;
}

inline Json permutations_to_json(std::size_t degree, const std::vector<Permutation>& gens) {
  Json out;
  out["degree"] = degree;
  Json list = Json::array();
  for (const auto& g : gens) list.push_back(g.to_cycles());
  out["generators"] = std::move(list);
  return out;
}

inline std::vector<Permutation> permutations_from_json(const Json& j, std::size_t* degree_out = nullptr) {
  require(j.is_object() && j.contains("degree") && j.contains("generators"),
          "generator list JSON needs degree and generators");
  const auto degree = j["degree"].get<std::size_t>();
  std::vector<Permutation> out;
  for (const auto& g : j["generators"]) {
    require(g.is_string(), "generator must be a cycle string");
    out.push_back(Permutation::parse_cycles(g.get<std::string>(), degree));
  }
  if (degree_out) *degree_out = degree;
  return out;
}

/// Image system {n, images: [{var, anf}]}; every variable exactly once.
inline std::vector<MonomialSet> images_from_json(const Json& j, int* n_out = nullptr) {
  require(j.is_object() && j.contains("n") && j.contains("images"), "images JSON needs n and images");
  const int n = j["n"].get<int>();
  require(n >= 1 && n <= kMaxVars, "images JSON n out of range");
  std::vector<std::optional<MonomialSet>> slots(static_cast<std::size_t>(n));
  for (const auto& e : j["images"]) {
    const int var = e.at("var").get<int>();
    require(var >= 0 && var < n, "image variable out of range");
    require(!slots[var], "variable imaged twice");
    slots[var] = anf_from_json(n, e.at("anf"));
  }
  std::vector<MonomialSet> out;
  for (auto& s : slots) {
    require(s.has_value(), "every variable needs an image");
    out.push_back(std::move(*s));
  }
  if (n_out) *n_out = n;
  return out;
}

inline Json images_to_json(int n, const std::vector<MonomialSet>& images) {
  Json out;
  out["n"] = n;
  Json list = Json::array();
  for (std::size_t i = 0; i < images.size(); ++i) {
    Json e;
    e["var"] = i;
    e["anf"] = anf_to_json(images[i]);
    list.push_back(std::move(e));
  }
  out["images"] = std::move(list);
  return out;
}

inline Json search_result_to_json(const SearchResult& r) {
  Json out;
  out["method"] = method_name(r.method);
  out["order"] = r.order.str();
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_cycles());
  out["generators"] = std::move(gens);
  if (r.partition) {
    Json parts = Json::array();
    for (const auto& cls : *r.partition) {
      Json one = Json::array();
      for (auto p : cls) one.push_back(p + 1);
      parts.push_back(std::move(one));
    }
    out["partition"] = std::move(parts);
  }
  return out;
}

inline Json classification_to_json(const AutClassification& c) {
  Json out;
  out["verdict"] = verdict_name(c.verdict);
  switch (c.verdict) {
    case Verdict::affine: {
      out["witness"] = nullptr;
      Json rows = Json::array();
      const auto& p = *c.presentation;
      for (int r = 0; r < p.dim(); ++r) {
        Json row = Json::array();
        for (int col = 0; col < p.dim(); ++col) row.push_back(p(r, col));
        rows.push_back(std::move(row));
      }
      out["presentation"] = std::move(rows);
      break;
    }
    case Verdict::non_affine:
      out["witness"] = {{"var", c.witness_var}, {"monomial", c.witness_monomial->vars()}};
      break;
    case Verdict::not_automorphism:
      out["witness"] = {{"generator", c.witness_generator}};
      break;
  }
  return out;
}

namespace detail {

inline Json param_value(const std::string& v) {
  if (!v.empty() && v.size() < 10 && v.find_first_not_of("0123456789") == std::string::npos)
    return std::stoi(v);
  return v;
}

inline Json optional_order(const std::optional<BigInt>& x) {
  return x ? Json(x->str()) : Json(nullptr);
}

}  // namespace detail

inline Json prediction_to_json(const Prediction& p) {
  Json out;
  out["theorem"] = theorem_name(p.theorem);
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = detail::param_value(v);
  out["params"] = std::move(params);
  out["predicted_order"] = p.predicted_order.str();
  out["structure"] = p.structure_text;
  Json factors = Json::array();
  for (const auto& f : p.factors) factors.push_back({{"label", f.label}, {"order", f.value.str()}});
  out["factors"] = std::move(factors);
  return out;
}

inline Json report_to_json(const VerificationReport& r) {
  Json out;
  out["theorem"] = theorem_name(r.theorem);
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = detail::param_value(v);
  out["params"] = std::move(params);
  out["predicted_order"] = r.prediction ? Json(r.prediction->predicted_order.str()) : Json(nullptr);
  if (r.prediction) out["structure"] = r.prediction->structure_text;
  out["constructed_order"] = detail::optional_order(r.constructed_order);
  out["exact_order"] = detail::optional_order(r.exact_order);
  out["affine_count"] = detail::optional_order(r.affine_count);
  out["generator_count"] = r.generator_count;
  out["generator_failures"] = r.generator_failures;
  if (r.classification) out["classification"] = *r.classification;
  out["verdict"] = r.pass ? "pass" : "fail";
  return out;
}

}  // namespace polarauto

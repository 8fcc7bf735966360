#pragma once

// The displayed-equation coverage manifest: every equality the source
// derivations display, mapped to the one catalog location that carries it
// (a hypothesis, given, step or conclusion of a script). The checker fails
// on any entry whose location is missing or whose equation does not match.

#include <set>
#include <string>
#include <vector>

#include "trigproof/dsl.hpp"
#include "trigproof/engine.hpp"
#include "trigproof/registry.hpp"

namespace coverage {

struct Entry {
  const char* key;      // stable name of the displayed equality
  const char* lemma;    // catalog script that carries it
  const char* kind;     // "hyp" | "given" | "step"
  const char* label;    // step/given label, or the hypothesis target atom
  const char* equation; // expected equation over the script's atoms
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      // theorem statement and the first proof
      {"pythagorean_theorem", "proof_first", "step", "fin",
       "c^2 = a^2 + b^2"},
      {"first_proof_key_equation", "proof_first", "step", "eq2",
       "a/b = 2*((c - b)/a)/(1 - ((c - b)/a)^2)"},
      {"tan_theta_as_legs", "proof_first", "hyp", "t", "t = (c - b)/a"},
      {"tan_2theta_as_legs", "proof_first", "hyp", "tan2", "tan2 = a/b"},
      // second proof
      {"bisector_segment_value", "proof_second", "step", "ec_val",
       "ec = a*b/(b + c)"},
      {"tan_theta_via_bisector", "proof_second", "step", "tb",
       "t = a/(b + c)"},
      {"second_proof_equation", "proof_second", "step", "equate",
       "(c - b)/a = a/(b + c)"},
      // double-angle derivation
      {"eq6_tangent_lengths", "tan_double_angle", "given", "g6",
       "tan2 = (y + 1)*t"},
      {"eq7_tangent_lengths", "tan_double_angle", "given", "g7",
       "tan2 = (y - 1)/t"},
      {"hypotenuse_elimination", "tan_double_angle", "step", "sy",
       "y = (1 + t^2)/(1 - t^2)"},
      {"tan_double_angle_formula", "tan_double_angle", "step", "fin",
       "tan2 = 2*t/(1 - t^2)"},
      // sine/cosine double angle
      {"sin_ratio_isosceles", "sin_double_angle", "given", "gs",
       "s = s2/(2*co)"},
      {"sin_double_angle_formula", "sin_double_angle", "step", "fin",
       "s2 = 2*s*co"},
      {"cos_ratio_isosceles", "cos_double_angle", "given", "gc",
       "co = (1 + c2)/(2*co)"},
      {"cos_double_angle_formula", "cos_double_angle", "step", "fin",
       "c2 = 2*co^2 - 1"},
      // half-tangent chain
      {"area_two_ways_lengths", "half_tangent_relation", "step", "area",
       "lad = y*t"},
      {"half_tangent_midstep", "half_tangent_relation", "step", "s1",
       "tan2 - t = t/c2"},
      {"half_tangent_formula", "half_tangent_relation", "step", "fin",
       "t = s2/(1 + c2)"},
      // third proof
      {"sin_2theta_as_sides", "proof_third", "hyp", "s2", "s2 = a/c"},
      {"cos_2theta_as_sides", "proof_third", "hyp", "c2", "c2 = b/c"},
      {"third_proof_equation", "proof_third", "step", "equate",
       "(c - b)/a = a/(b + c)"},
      // secant identity
      {"secant_bd_length", "sec_squared", "given", "g_bd",
       "lbd = 1 + ta^2"},
      {"secant_cos_ratio", "sec_squared", "given", "g_cos", "ca = lab/lbd"},
      {"secant_identity", "sec_squared", "step", "fin", "1/ca^2 = 1 + ta^2"},
      // addition formulas
      {"sin_add_law_of_sines", "sin_add", "step", "los",
       "lad*cb = lab*sab"},
      {"sin_add_formula", "sin_add", "step", "fin",
       "sab = sa*cb + ca*sb"},
      {"cos_add_law_of_cosines", "cos_add", "step", "loc",
       "lad^2 = lab^2 + lbd^2 - 2*lab*lbd*cab"},
      {"cos_add_formula", "cos_add", "step", "fin",
       "cab = ca*cb - sa*sb"},
      // subtraction formulas
      {"sin_sub_law_of_sines", "sin_sub", "step", "los",
       "lad*cb = lab*ssub"},
      {"sin_sub_formula", "sin_sub", "step", "fin",
       "ssub = sa*cb - ca*sb"},
      {"cos_sub_law_of_cosines", "cos_sub", "step", "loc",
       "lad^2 = lab^2 + lbd^2 - 2*lab*lbd*csub"},
      {"cos_sub_formula", "cos_sub", "step", "fin",
       "csub = ca*cb + sa*sb"},
      // cyclic-quadrilateral identity derivation
      {"quadrilateral_area_two_ways", "pythagorean_identity_zimba", "given",
       "area", "lab*lbc + lad*ldc = lab*lad*sab + lbc*ldc*sbcd"},
      {"sine_of_supplement", "pythagorean_identity_zimba", "given", "sup",
       "sbcd = sab"},
      {"eq5_bilinear_relation", "pythagorean_identity_zimba", "step", "e5",
       "sa*ca*(cb^2 + sb^2 - 1) + sb*cb*(ca^2 + sa^2 - 1) = 0"},
      {"pythagorean_identity_stmt", "pythagorean_identity_zimba", "step",
       "fin", "1 = ca^2 + sa^2"},
      // exercise
      {"exercise_bf_length", "exercise_bf_df", "step", "bf_eq",
       "bf = s2/s3"},
      {"exercise_df_length", "exercise_bf_df", "step", "df_eq",
       "df = s/s3"},
      {"exercise_triple_angle_identity", "exercise_triple_angle", "step",
       "fin", "s3 + s = 2*co*s2"},
  };
  return table;
}

struct Result {
  std::vector<std::string> unmapped;  // keys that failed to map
  int checked = 0;
};

inline Result check(const trigproof::Registry& reg) {
  using namespace trigproof;
  Result res;
  std::set<std::string> locations;
  for (const auto& e : entries()) {
    std::string loc =
        std::string(e.lemma) + "/" + e.kind + "/" + e.label;
    if (!locations.insert(loc).second) {
      res.unmapped.push_back(std::string(e.key) + ": duplicate location " +
                             loc);
      continue;
    }
    const LemmaFile* lf = reg.find_lemma(e.lemma);
    if (!lf || !lf->script) {
      res.unmapped.push_back(std::string(e.key) + ": no script " + e.lemma);
      continue;
    }
    Equation expect;
    try {
      std::string text = e.equation;
      auto eq_pos = text.find('=');
      expect.lhs = parse_expression(text.substr(0, eq_pos), lf->atoms);
      expect.rhs = parse_expression(text.substr(eq_pos + 1), lf->atoms);
    } catch (const Error& err) {
      res.unmapped.push_back(std::string(e.key) + ": " + err.what());
      continue;
    }
    const Equation* found = nullptr;
    Equation hyp_eq;
    std::string kind = e.kind;
    for (const auto& item : lf->script->givens) {
      if (kind == "given" && std::holds_alternative<Given>(item)) {
        const auto& g = std::get<Given>(item);
        if (g.eq.label == e.label) found = &g.eq;
      } else if (kind == "hyp" && std::holds_alternative<Hypothesis>(item)) {
        const auto& h = std::get<Hypothesis>(item);
        if (h.target == e.label) {
          hyp_eq = Equation{h.target, RatFunc::variable(h.target),
                            h.replacement};
          found = &hyp_eq;
        }
      }
    }
    if (kind == "step") {
      for (const auto& s : lf->script->steps)
        if (s.label == e.label) found = &s.eq;
    }
    if (!found) {
      res.unmapped.push_back(std::string(e.key) + ": no element " +
                             std::string(e.kind) + " " + e.label + " in " +
                             e.lemma);
      continue;
    }
    if (CheckContext::nf_raw(*found) != CheckContext::nf_raw(expect)) {
      res.unmapped.push_back(std::string(e.key) + ": equation mismatch in " +
                             e.lemma + "/" + e.label);
      continue;
    }
    ++res.checked;
  }
  return res;
}

}  // namespace coverage

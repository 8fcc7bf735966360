#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trigproof/ratfunc.hpp"

namespace trigproof {

// Named indeterminate of a script or statement scope.
struct Atom {
  std::string name;
  std::string domain_note;  // free-text domain restriction, e.g. "0 < theta < pi/4"
  std::string bind;         // figure quantity this atom denotes, may be empty
  bool nonzero = false;     // trusted-nonvanishing on the domain
};

// Equality of two rational-function expressions over declared atoms.
struct Equation {
  std::string label;
  RatFunc lhs;
  RatFunc rhs;

  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// Oriented rewrite target := replacement with nonvanishing side conditions.
// The target must not occur in the replacement.
struct Hypothesis {
  std::string target;
  RatFunc replacement;
  std::vector<MultiPoly> nonvanishing;
};

// Equation given up front, justified by a registry id (axiom or lemma).
struct Given {
  Equation eq;
  std::string justification;
};

enum class StepKind { Ring, Substitute, DivideBy, InstantiateLemma };

std::string step_kind_name(StepKind k);

struct LemmaArg {
  std::string atom;  // atom name in the cited lemma's scope
  RatFunc value;     // expression in the current script's scope
};

struct Step {
  StepKind kind = StepKind::Ring;
  std::string label;
  Equation eq;  // the produced equation
  // Substitute: name of the hypothesis atom or of an established equation.
  std::string ref;
  // DivideBy: the divisor polynomial.
  MultiPoly divisor;
  // InstantiateLemma: cited lemma id (or local step/given label) + bindings.
  std::string lemma_id;
  std::vector<LemmaArg> bindings;
};

using GivenItem = std::variant<Given, Hypothesis>;

struct ProofScript {
  std::string id;
  std::vector<Atom> atoms;
  std::vector<MultiPoly> scope_nonzero;  // standalone nonvanishing declarations
  std::vector<GivenItem> givens;         // file order preserved
  std::vector<Step> steps;
  std::string conclude_label;

  const Atom* find_atom(const std::string& name) const {
    for (const auto& a : atoms)
      if (a.name == name) return &a;
    return nullptr;
  }
};

enum class LemmaKind { Axiom, Derived, Theorem };

std::string lemma_kind_name(LemmaKind k);

// One catalog entry as parsed from a .trig file: statement(s), optional
// proof script, figure binding and declared dependencies.
struct LemmaFile {
  std::string id;
  LemmaKind kind = LemmaKind::Axiom;
  // Schema axioms state a shape that is instantiated per figure; givens citing
  // them are accepted symbolically and validated by the numeric layer.
  bool schema = false;
  std::vector<std::string> tags;  // e.g. "external-provenance"
  std::string figure;             // figure id or empty
  std::vector<std::string> declared_deps;
  std::vector<Atom> atoms;
  std::vector<MultiPoly> scope_nonzero;
  std::vector<Equation> statements;
  std::optional<ProofScript> script;
  std::vector<std::string> notes;  // freeform marks, e.g. "reconstructed-steps"
  std::string source_path;

  const Atom* find_atom(const std::string& name) const {
    for (const auto& a : atoms)
      if (a.name == name) return &a;
    return nullptr;
  }
};

}  // namespace trigproof

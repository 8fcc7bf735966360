#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trigproof/script.hpp"

namespace trigproof {

struct StepVerdict {
  std::string label;
  std::string kind;    // given | hyp | ring | substitute | divide_by | lemma | instantiate
  std::string status;  // ok | rejected | skipped
  std::string detail;  // matched label, instantiated id, or failing residual
};

struct VerifyReport {
  std::string lemma_id;
  std::string figure;
  bool accepted = false;
  std::string reject_reason;  // empty when accepted
  std::vector<StepVerdict> steps;
  std::vector<std::string> invoked;  // sorted ids of lemmas/axioms actually used
  std::vector<std::string> notes;
};

// Read-only view of the lemma catalog the engine checks citations against.
struct RegistryView {
  virtual ~RegistryView() = default;
  virtual const LemmaFile* find_lemma(const std::string& id) const = 0;
  virtual bool is_verified(const std::string& id) const = 0;
};

// Oriented rewrite: atom^power -> replacement. Hypotheses register with
// power 1 (full elimination); established equations in solved power form
// (e.g. ca^2 = 1 - sa^2) register with their power.
struct RewriteRule {
  std::string atom;
  unsigned power = 1;
  RatFunc replacement;
};

// Mutable checking scope for one script: established equations, rewrite
// rules and the nonvanishing set. All step checks reduce to comparing
// normalized cross-multiplied relation polynomials under the scope's
// rewrite system.
class CheckContext {
 public:
  CheckContext() = default;

  void add_nonvanishing(const MultiPoly& p);
  const std::vector<MultiPoly>& nonvanishing() const { return nonvanishing_; }

  // True iff p equals a product of declared-nonvanishing polynomials up to a
  // nonzero rational constant (decided by repeated exact division).
  bool covered(const MultiPoly& p) const;

  // Registers atom^power -> replacement unless the atom already has a rule
  // or the rule would create a substitution cycle. Returns true on success.
  bool try_register_rule(const std::string& atom, unsigned power,
                         const RatFunc& replacement);
  const RewriteRule* rule_for(const std::string& atom) const;

  // Applies all rules to fixpoint.
  RatFunc rewrite(const RatFunc& f) const;

  // Canonical relation polynomial: content/sign normalization plus removal
  // of factors declared nonvanishing.
  MultiPoly normalize_relation(MultiPoly rel) const;

  // Normal form of an equation: rewrite both sides, demand covered
  // denominators, cross-multiply, normalize_relation the difference.
  // Throws UnjustifiedDivision when an uncovered denominator appears.
  MultiPoly nf(const Equation& e) const;
  // Same without rewriting: the raw transcription-matching form.
  static MultiPoly nf_raw(const Equation& e);

  void establish(const Equation& e, bool auto_rule = true);
  const std::vector<Equation>& established() const { return established_; }
  const Equation* find_established(const std::string& label) const;

  // First established equation whose nf equals rel; nullopt if none.
  std::optional<std::string> match_established(const MultiPoly& rel) const;

 private:
  bool rule_closure_reaches(const std::string& start,
                            const std::string& needle) const;

  std::vector<Equation> established_;
  std::vector<RewriteRule> rules_;
  std::vector<MultiPoly> nonvanishing_;
};

// Spec-surface operation: substitution of an oriented hypothesis into an
// equation. Denominators introduced by the replacement must be covered by
// the hypothesis' own nonvanishing list, else UnjustifiedDivision.
Equation apply_hypothesis(const Equation& e, const Hypothesis& h);

// Spec-surface operation: checks one step against already-established
// equations (ring / substitute / divide_by only; lemma instantiation needs
// a registry and runs inside verify_script).
StepVerdict check_step(const std::vector<Equation>& established, const Step& s,
                       const std::vector<MultiPoly>& nonvanishing = {});

// Verifies a whole lemma file against the registry. Failures become
// rejected verdicts in the report; structural problems (unknown
// justification ids and the like) throw.
VerifyReport verify_script(const LemmaFile& lemma, const RegistryView& registry);

std::string figure_facts_id(const std::string& figure_id);

}  // namespace trigproof

#include "trigproof/engine.hpp"

#include <algorithm>

#include "trigproof/errors.hpp"

namespace trigproof {

std::string figure_facts_id(const std::string& figure_id) {
  return figure_id + "_facts";
}

void CheckContext::add_nonvanishing(const MultiPoly& p) {
  MultiPoly n = p.normalized();
  if (n.is_zero() || n.is_constant()) return;
  for (const auto& q : nonvanishing_)
    if (q == n) return;
  nonvanishing_.push_back(n);
}

bool CheckContext::covered(const MultiPoly& p) const {
  if (p.is_zero()) return false;
  MultiPoly d = p.normalized();
  bool progress = true;
  while (!d.is_constant() && progress) {
    progress = false;
    for (const auto& q : nonvanishing_) {
      if (auto quotient = d.divided_exactly_by(q)) {
        d = quotient->normalized();
        progress = true;
        break;
      }
    }
  }
  return d.is_constant();
}

const RewriteRule* CheckContext::rule_for(const std::string& atom) const {
  for (const auto& r : rules_)
    if (r.atom == atom) return &r;
  return nullptr;
}

bool CheckContext::rule_closure_reaches(const std::string& start,
                                        const std::string& needle) const {
  std::set<std::string> seen;
  std::vector<std::string> stack{start};
  while (!stack.empty()) {
    std::string a = stack.back();
    stack.pop_back();
    if (!seen.insert(a).second) continue;
    if (a == needle) return true;
    if (const RewriteRule* r = rule_for(a)) {
      for (const auto& b : r->replacement.atoms()) stack.push_back(b);
    }
  }
  return false;
}

bool CheckContext::try_register_rule(const std::string& atom, unsigned power,
                                     const RatFunc& replacement) {
  if (power == 0) return false;
  if (rule_for(atom)) return false;
  if (replacement.contains_atom(atom)) return false;
  if (!covered(replacement.den())) return false;
  // Reject rules whose replacement chain leads back to the atom.
  for (const auto& b : replacement.atoms())
    if (rule_closure_reaches(b, atom)) return false;
  rules_.push_back({atom, power, replacement});
  return true;
}

RatFunc CheckContext::rewrite(const RatFunc& f) const {
  RatFunc cur = f;
  for (int pass = 0; pass < 64; ++pass) {
    bool applied = false;
    for (const auto& r : rules_) {
      if (r.power == 1) {
        if (!cur.contains_atom(r.atom)) continue;
        cur = substitute_power(cur, r.atom, 1, r.replacement);
        applied = true;
      } else {
        // Power rules rewrite numerators only. Denominator powers stay as
        // monomial factors so cross-multiplied relations keep a canonical
        // shape; they are stripped later as declared-nonvanishing factors.
        if (cur.num().degree_in(r.atom) < r.power) continue;
        RatFunc num = substitute_power(cur.num(), r.atom, r.power,
                                       r.replacement);
        cur = num / RatFunc::from_poly(cur.den());
        applied = true;
      }
    }
    if (!applied) return cur;
  }
  throw Error("rewrite system did not terminate (cycle slipped through)");
}

MultiPoly CheckContext::normalize_relation(MultiPoly rel) const {
  rel = rel.normalized();
  // Two normalizations interleave until a fixpoint:
  //  - reduction modulo established solved-power relations (cross products
  //    can recreate reducible powers);
  //  - division by factors declared nonvanishing, which are nonzero on the
  //    domain (cross-multiplying drags denominator factors into the
  //    relation).
  bool progress = !rel.is_zero() && !rel.is_constant();
  while (progress) {
    progress = false;
    for (const auto& r : rules_) {
      if (r.power < 2 || !r.replacement.is_polynomial()) continue;
      if (rel.degree_in(r.atom) < r.power) continue;
      rel = substitute_power(rel, r.atom, r.power, r.replacement)
                .num()
                .normalized();
      progress = true;
    }
    if (rel.is_zero() || rel.is_constant()) break;
    for (const auto& q : nonvanishing_) {
      if (auto quotient = rel.divided_exactly_by(q)) {
        rel = quotient->normalized();
        progress = true;
        break;
      }
    }
  }
  return rel;
}

MultiPoly CheckContext::nf(const Equation& e) const {
  RatFunc lhs = rewrite(e.lhs);
  RatFunc rhs = rewrite(e.rhs);
  if (!covered(lhs.den())) throw UnjustifiedDivision(lhs.den().str());
  if (!covered(rhs.den())) throw UnjustifiedDivision(rhs.den().str());
  return normalize_relation(cross_diff(lhs, rhs));
}

MultiPoly CheckContext::nf_raw(const Equation& e) {
  return cross_diff(e.lhs, e.rhs).normalized();
}

// Solved power form: one side a single monomial c * X^k with X absent from
// the other side. Such an equation acts as the rewrite X^k -> other/c.
static std::optional<RewriteRule> solved_form(const Equation& e) {
  auto solved = [](const RatFunc& side,
                   const RatFunc& other) -> std::optional<RewriteRule> {
    if (!side.is_polynomial()) return std::nullopt;
    const MultiPoly& p = side.num();
    if (p.term_count() != 1) return std::nullopt;
    const auto& [expo, coef] = *p.terms().begin();
    if (expo.size() != 1) return std::nullopt;
    const auto& [name, power] = *expo.begin();
    if (other.contains_atom(name)) return std::nullopt;
    RatFunc repl = other / RatFunc::constant(coef);
    return RewriteRule{name, power, repl};
  };
  std::optional<RewriteRule> r = solved(e.lhs, e.rhs);
  if (!r) r = solved(e.rhs, e.lhs);
  return r;
}

void CheckContext::establish(const Equation& e, bool auto_rule) {
  established_.push_back(e);
  if (!auto_rule) return;
  if (auto r = solved_form(e))
    try_register_rule(r->atom, r->power, r->replacement);
}

const Equation* CheckContext::find_established(const std::string& label) const {
  for (const auto& e : established_)
    if (e.label == label) return &e;
  return nullptr;
}

std::optional<std::string> CheckContext::match_established(
    const MultiPoly& rel) const {
  for (const auto& e : established_) {
    if (nf(e) == rel) return e.label;
  }
  return std::nullopt;
}

Equation apply_hypothesis(const Equation& e, const Hypothesis& h) {
  if (h.replacement.contains_atom(h.target))
    throw Error("hypothesis target occurs in replacement: " + h.target);
  if (!e.lhs.contains_atom(h.target) && !e.rhs.contains_atom(h.target))
    return e;
  CheckContext cover;
  for (const auto& p : h.nonvanishing) cover.add_nonvanishing(p);
  Equation out = e;
  out.lhs = substitute_power(e.lhs, h.target, 1, h.replacement);
  out.rhs = substitute_power(e.rhs, h.target, 1, h.replacement);
  if (!cover.covered(out.lhs.den()) && !out.lhs.den().is_constant())
    throw UnjustifiedDivision(out.lhs.den().str());
  if (!cover.covered(out.rhs.den()) && !out.rhs.den().is_constant())
    throw UnjustifiedDivision(out.rhs.den().str());
  return out;
}

namespace {

StepVerdict reject(const Step& s, const std::string& why) {
  return {s.label, step_kind_name(s.kind), "rejected", why};
}
StepVerdict accept(const Step& s, const std::string& detail) {
  return {s.label, step_kind_name(s.kind), "ok", detail};
}

// ring / substitute / divide_by against a context. Lemma instantiation is
// handled by the script verifier, which owns the registry.
StepVerdict check_relational_step(const CheckContext& ctx, const Step& s) {
  switch (s.kind) {
    case StepKind::Ring: {
      MultiPoly rel = ctx.nf(s.eq);
      if (rel.is_zero()) return accept(s, "identity");
      if (auto m = ctx.match_established(rel))
        return accept(s, "matches " + *m);
      return reject(s, "residual: " + rel.str());
    }
    case StepKind::Substitute: {
      // The reference names a hypothesis atom or an established equation in
      // solved form; either way the scope rewrite for that atom must exist
      // and the matched equation must actually mention it.
      std::string subject;
      if (ctx.rule_for(s.ref)) {
        subject = s.ref;
      } else if (const Equation* e = ctx.find_established(s.ref)) {
        auto r = solved_form(*e);
        if (!r || !ctx.rule_for(r->atom))
          return reject(s, "reference '" + s.ref +
                               "' is not usable as a rewrite");
        subject = r->atom;
      } else {
        return reject(s, "unknown substitution reference '" + s.ref + "'");
      }
      MultiPoly rel = ctx.nf(s.eq);
      if (rel.is_zero()) return accept(s, "identity under " + subject);
      // The rewritten atom must occur on one side of the bridge: either in
      // the step's own raw equation or in the established one it matches.
      bool in_step =
          s.eq.lhs.contains_atom(subject) || s.eq.rhs.contains_atom(subject);
      for (const auto& e : ctx.established()) {
        bool in_est =
            e.lhs.contains_atom(subject) || e.rhs.contains_atom(subject);
        if (!in_step && !in_est) continue;
        if (ctx.nf(e) == rel)
          return accept(s, "substitutes " + subject + " into " + e.label);
      }
      return reject(s, "residual: " + rel.str());
    }
    case StepKind::DivideBy: {
      if (s.divisor.is_zero()) return reject(s, "division by zero polynomial");
      if (!ctx.covered(s.divisor))
        return reject(s, "divisor not declared nonvanishing: " +
                             s.divisor.str());
      Equation scaled = s.eq;
      RatFunc d = RatFunc::from_poly(s.divisor);
      scaled.lhs = s.eq.lhs * d;
      scaled.rhs = s.eq.rhs * d;
      MultiPoly rel = ctx.nf(scaled);
      if (rel.is_zero()) return accept(s, "identity");
      if (auto m = ctx.match_established(rel))
        return accept(s, "divides " + *m + " by " + s.divisor.str());
      return reject(s, "residual: " + rel.str());
    }
    case StepKind::InstantiateLemma:
      return reject(s, "lemma instantiation requires a registry");
  }
  return reject(s, "unknown step kind");
}

// Simultaneous substitution atom -> value via fresh intermediate names the
// lexer can never produce.
RatFunc simultaneous_subst(const RatFunc& f,
                           const std::map<std::string, RatFunc>& sigma) {
  RatFunc cur = f;
  int i = 0;
  std::vector<std::pair<std::string, const RatFunc*>> fresh;
  for (const auto& [name, value] : sigma) {
    std::string tmp = "$" + std::to_string(i++);
    cur = substitute_power(cur, name, 1, RatFunc::variable(tmp));
    fresh.emplace_back(tmp, &value);
  }
  for (const auto& [tmp, value] : fresh)
    cur = substitute_power(cur, tmp, 1, *value);
  return cur;
}

}  // namespace

StepVerdict check_step(const std::vector<Equation>& established, const Step& s,
                       const std::vector<MultiPoly>& nonvanishing) {
  CheckContext ctx;
  for (const auto& p : nonvanishing) ctx.add_nonvanishing(p);
  for (const auto& e : established) ctx.establish(e);
  try {
    return check_relational_step(ctx, s);
  } catch (const Error& err) {
    return reject(s, err.what());
  }
}

namespace {

class ScriptVerifier {
 public:
  ScriptVerifier(const LemmaFile& lemma, const RegistryView& registry,
                 bool allow_local_instantiation, bool check_conclusion)
      : lemma_(lemma),
        registry_(registry),
        allow_local_inst_(allow_local_instantiation),
        check_conclusion_(check_conclusion) {}

  VerifyReport run() {
    VerifyReport rep;
    rep.lemma_id = lemma_.id;
    rep.figure = lemma_.figure;
    rep.notes = lemma_.notes;
    if (!lemma_.script) {
      rep.accepted = true;  // axioms have nothing to check symbolically
      return rep;
    }
    const ProofScript& ps = *lemma_.script;
    for (const auto& a : ps.atoms)
      if (a.nonzero) ctx_.add_nonvanishing(MultiPoly::variable(a.name));
    for (const auto& p : lemma_.scope_nonzero) ctx_.add_nonvanishing(p);
    for (const auto& p : ps.scope_nonzero) ctx_.add_nonvanishing(p);

    bool failed = false;
    if (check_conclusion_ && !ps.steps.empty() &&
        ps.steps.back().label != ps.conclude_label) {
      failed = true;
      rep.reject_reason = "conclusion must be the final step";
    }
    for (const auto& item : ps.givens) {
      StepVerdict v = failed ? skip_item(item) : check_item(item);
      if (v.status == "rejected" && !failed) {
        failed = true;
        rep.reject_reason = v.label + ": " + v.detail;
      }
      rep.steps.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < ps.steps.size(); ++i) {
      const Step& s = ps.steps[i];
      StepVerdict v;
      if (failed) {
        v = {s.label, step_kind_name(s.kind), "skipped", ""};
      } else {
        try {
          v = check_one_step(i);
        } catch (const Error& err) {
          v = reject(s, err.what());
        }
        if (v.status == "ok") ctx_.establish(s.eq);
      }
      if (v.status == "rejected" && !failed) {
        failed = true;
        rep.reject_reason = v.label + ": " + v.detail;
      }
      rep.steps.push_back(std::move(v));
    }

    if (!failed && check_conclusion_ && !lemma_.statements.empty()) {
      const Equation* concl = nullptr;
      for (const auto& s : ps.steps)
        if (s.label == ps.conclude_label) concl = &s.eq;
      bool match = false;
      if (concl) {
        for (const auto& st : lemma_.statements)
          if (CheckContext::nf_raw(*concl) == CheckContext::nf_raw(st))
            match = true;
      }
      if (!match) {
        failed = true;
        rep.reject_reason =
            "conclusion does not match the declared statement";
      }
    }

    rep.invoked.assign(invoked_.begin(), invoked_.end());
    rep.accepted = !failed;
    return rep;
  }

 private:
  StepVerdict skip_item(const GivenItem& item) {
    if (std::holds_alternative<Given>(item))
      return {std::get<Given>(item).eq.label, "given", "skipped", ""};
    return {std::get<Hypothesis>(item).target, "hyp", "skipped", ""};
  }

  StepVerdict check_item(const GivenItem& item) {
    if (std::holds_alternative<Hypothesis>(item))
      return check_hypothesis(std::get<Hypothesis>(item));
    return check_given(std::get<Given>(item));
  }

  StepVerdict check_hypothesis(const Hypothesis& h) {
    StepVerdict v{h.target, "hyp", "ok", ""};
    for (const auto& p : h.nonvanishing) ctx_.add_nonvanishing(p);
    Equation as_eq{h.target, RatFunc::variable(h.target), h.replacement};
    // A hypothesis is a trusted oriented figure fact; it must transcribe a
    // statement of the bound figure's fact bundle.
    if (lemma_.figure.empty()) {
      v.status = "rejected";
      v.detail = "hypothesis in a script with no figure binding";
      return v;
    }
    std::string ff = figure_facts_id(lemma_.figure);
    const LemmaFile* facts = registry_.find_lemma(ff);
    if (!facts) {
      v.status = "rejected";
      v.detail = "missing figure-facts axiom " + ff;
      return v;
    }
    bool matched = false;
    for (const auto& st : facts->statements)
      if (CheckContext::nf_raw(as_eq) == CheckContext::nf_raw(st))
        matched = true;
    if (!matched) {
      v.status = "rejected";
      v.detail = "hypothesis " + h.target + " := " + h.replacement.str() +
                 " is not a statement of " + ff;
      return v;
    }
    if (!ctx_.covered(h.replacement.den())) {
      v.status = "rejected";
      v.detail = "replacement denominator not covered: " +
                 h.replacement.den().str();
      return v;
    }
    if (!ctx_.try_register_rule(h.target, 1, h.replacement)) {
      v.status = "rejected";
      v.detail = "conflicting rewrite for atom " + h.target;
      return v;
    }
    invoked_.insert(ff);
    v.detail = "fact of " + ff;
    return v;
  }

  StepVerdict check_given(const Given& g) {
    StepVerdict v{g.eq.label, "given", "ok", ""};
    const LemmaFile* cited = registry_.find_lemma(g.justification);
    if (!cited) {
      v.status = "rejected";
      v.detail = "missing lemma: " + g.justification;
      return v;
    }
    if (cited->kind == LemmaKind::Axiom) {
      bool matched = false;
      for (const auto& st : cited->statements)
        if (CheckContext::nf_raw(g.eq) == CheckContext::nf_raw(st))
          matched = true;
      if (!matched && !cited->schema) {
        v.status = "rejected";
        v.detail = "equation is not a statement of axiom " + g.justification;
        return v;
      }
      v.detail = matched ? "statement of " + g.justification
                         : "schema instance of " + g.justification;
    } else {
      if (!registry_.is_verified(g.justification)) {
        v.status = "rejected";
        v.detail = "missing lemma: " + g.justification + " (not verified)";
        return v;
      }
      bool matched = false;
      for (const auto& st : cited->statements)
        if (CheckContext::nf_raw(g.eq) == CheckContext::nf_raw(st))
          matched = true;
      if (!matched) {
        v.status = "rejected";
        v.detail =
            "equation does not transcribe the statement of " + g.justification;
        return v;
      }
      v.detail = "statement of " + g.justification;
    }
    try {
      ctx_.nf(g.eq);  // denominators must be covered in scope
    } catch (const Error& err) {
      v.status = "rejected";
      v.detail = err.what();
      return v;
    }
    invoked_.insert(g.justification);
    ctx_.establish(g.eq);
    return v;
  }

  StepVerdict check_one_step(std::size_t index) {
    const Step& s = lemma_.script->steps[index];
    if (s.kind != StepKind::InstantiateLemma)
      return check_relational_step(ctx_, s);

    // Registry lemma instantiation, or instantiation of a local established
    // equation (the quantifier inference: specialize the atoms of a prefix).
    if (const LemmaFile* cited = registry_.find_lemma(s.lemma_id))
      return instantiate_registry(s, *cited);
    if (ctx_.find_established(s.lemma_id))
      return instantiate_local(s, index);
    return reject(s, "missing lemma: " + s.lemma_id);
  }

  StepVerdict instantiate_registry(const Step& s, const LemmaFile& cited) {
    if (cited.kind != LemmaKind::Axiom &&
        !registry_.is_verified(cited.id))
      return reject(s, "missing lemma: " + cited.id + " (not verified)");
    if (cited.statements.empty())
      return reject(s, "lemma " + cited.id + " has no statement to instantiate");

    std::map<std::string, RatFunc> sigma;
    for (const auto& b : s.bindings) {
      if (!cited.find_atom(b.atom))
        return reject(s, "binding names unknown atom '" + b.atom + "' of " +
                             cited.id);
      sigma[b.atom] = b.value;
    }
    for (const auto& st : cited.statements) {
      std::map<std::string, RatFunc> full = sigma;
      bool ok = true;
      for (const auto& name : st.lhs.atoms())
        if (!full.count(name)) {
          if (!lemma_.find_atom(name)) ok = false;
          full.emplace(name, RatFunc::variable(name));
        }
      for (const auto& name : st.rhs.atoms())
        if (!full.count(name)) {
          if (!lemma_.find_atom(name)) ok = false;
          full.emplace(name, RatFunc::variable(name));
        }
      if (!ok) continue;
      Equation inst{s.label, simultaneous_subst(st.lhs, full),
                    simultaneous_subst(st.rhs, full)};
      try {
        if (ctx_.nf(inst) == ctx_.nf(s.eq)) {
          invoked_.insert(cited.id);
          return accept(s, "instantiates " + cited.id);
        }
      } catch (const Error&) {
        // uncovered denominator in this candidate; try the next statement
      }
    }
    return reject(s, "equation does not match any instantiated statement of " +
                         cited.id);
  }

  StepVerdict instantiate_local(const Step& s, std::size_t index) {
    if (!allow_local_inst_)
      return reject(s, "nested local instantiation is not allowed");
    std::map<std::string, RatFunc> sigma;
    for (const auto& b : s.bindings) {
      if (!lemma_.find_atom(b.atom))
        return reject(s, "binding names undeclared atom '" + b.atom + "'");
      if (!b.value.is_polynomial())
        return reject(s, "local instantiation bindings must be polynomial");
      sigma[b.atom] = b.value;
    }
    // A rewrite target may not be remapped: the hypothesis facts would not
    // survive the specialization.
    for (const auto& [name, value] : sigma)
      if (ctx_.rule_for(name))
        return reject(s, "cannot instantiate rewrite target '" + name + "'");

    LemmaFile prefix = lemma_;
    prefix.notes.clear();
    ProofScript& p = *prefix.script;
    p.steps.assign(lemma_.script->steps.begin(),
                   lemma_.script->steps.begin() + index);
    auto subst_eq = [&](Equation& e) {
      e.lhs = simultaneous_subst(e.lhs, sigma);
      e.rhs = simultaneous_subst(e.rhs, sigma);
    };
    for (auto& item : p.givens) {
      if (std::holds_alternative<Given>(item)) {
        subst_eq(std::get<Given>(item).eq);
      } else {
        Hypothesis& h = std::get<Hypothesis>(item);
        if (sigma.count(h.target)) {
          return reject(s, "cannot instantiate hypothesis target '" +
                               h.target + "'");
        }
        h.replacement = simultaneous_subst(h.replacement, sigma);
      }
    }
    Equation target_eq;
    bool found = false;
    for (auto& st : p.steps) {
      subst_eq(st.eq);
      for (auto& b : st.bindings) b.value = simultaneous_subst(b.value, sigma);
      if (st.label == s.lemma_id) {
        target_eq = st.eq;
        found = true;
      }
    }
    if (!found) {
      for (const auto& item : p.givens)
        if (std::holds_alternative<Given>(item) &&
            std::get<Given>(item).eq.label == s.lemma_id) {
          target_eq = std::get<Given>(item).eq;
          found = true;
        }
    }
    if (!found)
      return reject(s, "label '" + s.lemma_id + "' precedes no established");

    ScriptVerifier sub(prefix, registry_, /*allow_local_instantiation=*/false,
                       /*check_conclusion=*/false);
    VerifyReport subrep = sub.run();
    if (!subrep.accepted)
      return reject(s, "instantiated prefix fails: " + subrep.reject_reason);
    for (const auto& id : subrep.invoked) invoked_.insert(id);

    try {
      if (ctx_.nf(target_eq) == ctx_.nf(s.eq))
        return accept(s, "instantiates local " + s.lemma_id);
    } catch (const Error& err) {
      return reject(s, err.what());
    }
    return reject(s, "equation does not match the instantiated " + s.lemma_id);
  }

  const LemmaFile& lemma_;
  const RegistryView& registry_;
  bool allow_local_inst_;
  bool check_conclusion_;
  CheckContext ctx_;
  std::set<std::string> invoked_;
};

}  // namespace

VerifyReport verify_script(const LemmaFile& lemma,
                           const RegistryView& registry) {
  ScriptVerifier v(lemma, registry, /*allow_local_instantiation=*/true,
                   /*check_conclusion=*/true);
  return v.run();
}

}  // namespace trigproof

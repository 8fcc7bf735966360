#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "trigproof/dsl.hpp"
#include "trigproof/engine.hpp"
#include "trigproof/errors.hpp"

using namespace trigproof;

namespace {

std::vector<Atom> abc_atoms() {
  return {{"a", "", "", false}, {"b", "", "", false}, {"c", "", "", false},
          {"sa", "", "", false}, {"ca", "", "", false},
          {"t", "", "", false},  {"tan2", "", "", false}};
}

RatFunc ex(const std::string& s) { return parse_expression(s, abc_atoms()); }

MultiPoly poly(const std::string& s) {
  RatFunc f = ex(s);
  REQUIRE(f.is_polynomial());
  return f.num();
}

Equation eq(const std::string& label, const std::string& l,
            const std::string& r) {
  return Equation{label, ex(l), ex(r)};
}

// Minimal in-memory registry for engine-level tests.
class MapRegistry : public RegistryView {
 public:
  void add(LemmaFile lf, bool verified = true) {
    verified_[lf.id] = verified;
    lemmas_[lf.id] = std::move(lf);
  }
  const LemmaFile* find_lemma(const std::string& id) const override {
    auto it = lemmas_.find(id);
    return it == lemmas_.end() ? nullptr : &it->second;
  }
  bool is_verified(const std::string& id) const override {
    auto it = verified_.find(id);
    return it != verified_.end() && it->second;
  }

 private:
  std::map<std::string, LemmaFile> lemmas_;
  std::map<std::string, bool> verified_;
};

MapRegistry demo_registry() {
  MapRegistry reg;
  reg.add(parse_lemma_text(
      "lemma fig1_facts kind axiom\n"
      "figure fig1\n"
      "atom a nonzero\natom b nonzero\natom c nonzero\natom t\natom tan2\n"
      "statement f1: t = (c - b)/a\n"
      "statement f2: tan2 = a/b\n"));
  reg.add(parse_lemma_text(
      "lemma tan_double_angle kind derived\n"
      "figure fig2\n"
      "atom t nonzero\natom tan2\natom y\n"
      "statement dbl: tan2 = 2*t/(1 - t^2)\n"
      "script tan_double_angle\n"
      "nonzero 1 - t^2\n"
      "given g6: tan2 = (y + 1)*t by fig2_facts\n"
      "given g7: tan2 = (y - 1)/t by fig2_facts\n"
      "step sy: y = (1 + t^2)/(1 - t^2) by ring\n"
      "step fin: tan2 = 2*t/(1 - t^2) by ring\n"
      "conclude fin\n"));
  return reg;
}

const char* kProofFirst =
    "lemma proof_first kind theorem\n"
    "figure fig1\n"
    "atom a nonzero\natom b nonzero\natom c nonzero\natom t\natom tan2\n"
    "statement eq1: c^2 = a^2 + b^2\n"
    "script proof_first\n"
    "hyp t := (c - b)/a nonzero a, a^2 - (c - b)^2\n"
    "hyp tan2 := a/b nonzero b\n"
    "given dbl: tan2 = 2*t/(1 - t^2) by tan_double_angle\n"
    "step eq2: a/b = 2*((c - b)/a)/(1 - ((c - b)/a)^2) by substitute(t)\n"
    "step rearr: a*(a^2 + b^2 - c^2) = 0 by ring\n"
    "step fin: c^2 = a^2 + b^2 by divide_by(a)\n"
    "conclude fin\n";

}  // namespace

TEST_CASE("check_step: ring rearrangement of an established equation") {
  std::vector<Equation> est{eq("g", "a^2", "c^2 - b^2")};
  Step s;
  s.kind = StepKind::Ring;
  s.label = "s";
  s.eq = eq("s", "a^2", "(c - b)*(c + b)");
  StepVerdict v = check_step(est, s);
  CHECK(v.status == "ok");
}

TEST_CASE("check_step: divide_by with declared nonvanishing divisor") {
  std::vector<Equation> est{eq("g", "2*sa*ca*(ca^2 + sa^2 - 1)", "0")};
  Step s;
  s.kind = StepKind::DivideBy;
  s.label = "s";
  s.divisor = poly("2*sa*ca");
  s.eq = eq("s", "ca^2 + sa^2 - 1", "0");
  StepVerdict ok = check_step(est, s, {poly("sa"), poly("ca")});
  CHECK(ok.status == "ok");
  // without the nonvanishing declarations the same step is rejected
  StepVerdict bad = check_step(est, s);
  CHECK(bad.status == "rejected");
}

TEST_CASE("check_step: non-identity is rejected with its residual") {
  Step s;
  s.kind = StepKind::Ring;
  s.label = "s";
  s.eq = eq("s", "a", "b");
  StepVerdict v = check_step({}, s);
  CHECK(v.status == "rejected");
  CHECK(v.detail == "residual: a - b");
}

TEST_CASE("apply_hypothesis") {
  Hypothesis h{"t", ex("(c - b)/a"), {poly("a"), poly("a^2 - (c - b)^2")}};
  Equation e = eq("e", "tan2", "2*t/(1 - t^2)");
  Equation out = apply_hypothesis(e, h);
  CHECK_FALSE(out.lhs.contains_atom("t"));
  CHECK_FALSE(out.rhs.contains_atom("t"));
  CHECK(ratfunc_equal(out.rhs,
                      ex("2*a*(c - b)/(a^2 - (c - b)^2)")));
  // target absent: identity
  Equation u = eq("u", "a", "a");
  Equation same = apply_hypothesis(u, h);
  CHECK(ratfunc_equal(same.lhs, u.lhs));
  CHECK(ratfunc_equal(same.rhs, u.rhs));
  // denominators not covered by the nonvanishing list
  Hypothesis bare{"t", ex("(c - b)/a"), {}};
  CHECK_THROWS_AS(apply_hypothesis(e, bare), UnjustifiedDivision);
}

TEST_CASE("elimination property: substituted atom never survives") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 50; ++i) {
    RatFunc expr = ex("t^3") * RatFunc::constant(Rational(c(rng))) +
                   ex("(a + t)^2") + RatFunc::constant(Rational(c(rng)));
    Hypothesis h{"t", ex("(c - b)/a"),
                 {poly("a"), poly("a^2 - (c - b)^2"), poly("b")}};
    Equation e{"e", expr, ex("b*t")};
    Equation out = apply_hypothesis(e, h);
    CHECK_FALSE(out.lhs.contains_atom("t"));
    CHECK_FALSE(out.rhs.contains_atom("t"));
  }
}

TEST_CASE("verify_script accepts the first proof and reports invoked set") {
  MapRegistry reg = demo_registry();
  LemmaFile pf = parse_lemma_text(kProofFirst);
  VerifyReport rep = verify_script(pf, reg);
  CHECK(rep.accepted);
  REQUIRE(rep.invoked.size() == 2);
  CHECK(rep.invoked[0] == "fig1_facts");
  CHECK(rep.invoked[1] == "tan_double_angle");
}

TEST_CASE("verify_script is deterministic") {
  MapRegistry reg = demo_registry();
  LemmaFile pf = parse_lemma_text(kProofFirst);
  VerifyReport r1 = verify_script(pf, reg);
  VerifyReport r2 = verify_script(pf, reg);
  REQUIRE(r1.steps.size() == r2.steps.size());
  for (std::size_t i = 0; i < r1.steps.size(); ++i) {
    CHECK(r1.steps[i].status == r2.steps[i].status);
    CHECK(r1.steps[i].detail == r2.steps[i].detail);
  }
}

TEST_CASE("corrupted coefficient rejects at the step, later steps skipped") {
  MapRegistry reg = demo_registry();
  std::string bad = kProofFirst;
  auto pos = bad.find("a*(a^2 + b^2 - c^2) = 0");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, std::string("a*(a^2 + b^2 - c^2) = 0").size(),
              "a*(a^2 + 2*b^2 - c^2) = 0");
  LemmaFile pf = parse_lemma_text(bad);
  VerifyReport rep = verify_script(pf, reg);
  CHECK_FALSE(rep.accepted);
  bool saw_reject = false;
  bool saw_skip = false;
  for (const auto& s : rep.steps) {
    if (s.label == "rearr") {
      CHECK(s.status == "rejected");
      saw_reject = true;
    }
    if (s.label == "fin") {
      CHECK(s.status == "skipped");
      saw_skip = true;
    }
  }
  CHECK(saw_reject);
  CHECK(saw_skip);
}

TEST_CASE("monotonicity: deleting any given only breaks acceptance") {
  MapRegistry reg = demo_registry();
  // Deleting each load-bearing line of proof_first must reject it.
  const char* lines[] = {
      "hyp t := (c - b)/a nonzero a, a^2 - (c - b)^2\n",
      "hyp tan2 := a/b nonzero b\n",
      "given dbl: tan2 = 2*t/(1 - t^2) by tan_double_angle\n"};
  for (const char* line : lines) {
    std::string cut = kProofFirst;
    auto pos = cut.find(line);
    REQUIRE(pos != std::string::npos);
    cut.erase(pos, std::string(line).size());
    VerifyReport rep = verify_script(parse_lemma_text(cut), reg);
    CHECK_FALSE(rep.accepted);
  }
}

TEST_CASE("unverified or missing lemma citation rejects the given") {
  MapRegistry reg;
  reg.add(parse_lemma_text(
      "lemma fig1_facts kind axiom\nfigure fig1\n"
      "atom a nonzero\natom b nonzero\natom c nonzero\natom t\natom tan2\n"
      "statement f1: t = (c - b)/a\n"
      "statement f2: tan2 = a/b\n"));
  LemmaFile pf = parse_lemma_text(kProofFirst);
  VerifyReport rep = verify_script(pf, reg);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.reject_reason.find("missing lemma") != std::string::npos);
}

TEST_CASE("given must transcribe the cited statement verbatim") {
  MapRegistry reg = demo_registry();
  std::string forged = kProofFirst;
  auto pos = forged.find("tan2 = 2*t/(1 - t^2) by tan_double_angle");
  REQUIRE(pos != std::string::npos);
  forged.replace(pos, std::string("tan2 = 2*t/(1 - t^2)").size(),
                 "tan2 = 3*t/(1 - t^2)");
  VerifyReport rep = verify_script(parse_lemma_text(forged), reg);
  CHECK_FALSE(rep.accepted);
}

TEST_CASE("hypothesis must be a fact of the bound figure") {
  MapRegistry reg = demo_registry();
  std::string forged = kProofFirst;
  auto pos = forged.find("hyp tan2 := a/b nonzero b");
  REQUIRE(pos != std::string::npos);
  forged.replace(pos, std::string("hyp tan2 := a/b nonzero b").size(),
                 "hyp tan2 := a/c nonzero c");
  VerifyReport rep = verify_script(parse_lemma_text(forged), reg);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.reject_reason.find("not a statement of fig1_facts") !=
        std::string::npos);
}

TEST_CASE("soundness probe: accepted equations hold exactly on the variety") {
  MapRegistry reg = demo_registry();
  LemmaFile pf = parse_lemma_text(kProofFirst);
  VerifyReport rep = verify_script(pf, reg);
  REQUIRE(rep.accepted);
  // Rational parametrization of fig1: t in (0,1) rational gives exact
  // a = 2t/(1+t^2), b = (1-t^2)/(1+t^2), c = 1 with all facts exact.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(1, 19);
  for (int i = 0; i < 100; ++i) {
    Rational t(num(rng), 20);
    Rational one(1);
    Rational a = Rational(2) * t / (one + t * t);
    Rational b = (one - t * t) / (one + t * t);
    std::map<std::string, Rational> at{
        {"a", a},     {"b", b},
        {"c", one},   {"t", t},
        {"tan2", a / b}};
    for (const auto& item : pf.script->givens) {
      if (std::holds_alternative<Given>(item)) {
        const auto& e = std::get<Given>(item).eq;
        auto l = e.lhs.eval(at), r = e.rhs.eval(at);
        REQUIRE(l.has_value());
        REQUIRE(r.has_value());
        CHECK(*l == *r);
      }
    }
    for (const auto& s : pf.script->steps) {
      auto l = s.eq.lhs.eval(at), r = s.eq.rhs.eval(at);
      REQUIRE(l.has_value());
      REQUIRE(r.has_value());
      CHECK(*l == *r);
    }
  }
}

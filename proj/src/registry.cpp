#include "trigproof/registry.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "trigproof/dsl.hpp"
#include "trigproof/exact_bindings.hpp"

namespace trigproof {

namespace {

std::string join_ids(const std::set<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

Registry Registry::load(const std::vector<std::string>& paths) {
  std::vector<LemmaFile> files;
  files.reserve(paths.size());
  std::vector<std::string> sorted_paths = paths;
  std::sort(sorted_paths.begin(), sorted_paths.end());
  for (const auto& p : sorted_paths) files.push_back(parse_lemma_file(p));

  Registry reg;
  reg.lemmas_ = std::move(files);
  std::sort(reg.lemmas_.begin(), reg.lemmas_.end(),
            [](const LemmaFile& a, const LemmaFile& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < reg.lemmas_.size(); ++i) {
    const auto& lf = reg.lemmas_[i];
    if (!reg.index_.emplace(lf.id, i).second)
      throw Error("duplicate lemma id: " + lf.id);
    if (lf.kind != LemmaKind::Axiom && lf.statements.size() != 1)
      throw Error("lemma " + lf.id + " must declare exactly one statement");
  }

  // Kahn topological order over declared dependencies; ties and the queue
  // itself stay in id order for determinism.
  std::map<std::string, std::set<std::string>> pending;
  std::map<std::string, std::set<std::string>> dependents;
  for (const auto& lf : reg.lemmas_) {
    std::set<std::string> deps;
    for (const auto& d : lf.declared_deps)
      if (reg.index_.count(d)) deps.insert(d);
    pending[lf.id] = deps;
    for (const auto& d : deps) dependents[d].insert(lf.id);
  }
  std::vector<std::string> order;
  std::set<std::string> ready;
  for (const auto& [id, deps] : pending)
    if (deps.empty()) ready.insert(id);
  while (!ready.empty()) {
    std::string id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const auto& dep : dependents[id]) {
      pending[dep].erase(id);
      if (pending[dep].empty()) ready.insert(dep);
    }
    pending.erase(id);
  }
  if (!pending.empty()) {
    std::set<std::string> cycle;
    for (const auto& [id, deps] : pending) cycle.insert(id);
    throw CycleDetected(join_ids(cycle));
  }

  for (const auto& id : order) {
    const LemmaFile& lf = reg.lemmas_[reg.index_.at(id)];
    if (lf.kind == LemmaKind::Axiom) {
      reg.verified_[id] = true;
      continue;
    }
    VerifyReport rep = verify_script(lf, reg);
    reg.verified_[id] = rep.accepted;
    if (rep.accepted) {
      std::set<std::string> declared(lf.declared_deps.begin(),
                                     lf.declared_deps.end());
      std::set<std::string> invoked(rep.invoked.begin(), rep.invoked.end());
      if (declared != invoked)
        throw DependencyMismatch(lf.id + ": declared {" + join_ids(declared) +
                                 "} but invoked {" + join_ids(invoked) + "}");
    }
    reg.reports_.push_back(std::move(rep));
  }
  return reg;
}

Registry Registry::load_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a proofs directory: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".trig")
      paths.push_back(entry.path().string());
  return load(paths);
}

Registry Registry::from_texts(const std::vector<std::string>& texts) {
  namespace fs = std::filesystem;
  fs::path tmp =
      fs::temp_directory_path() /
      ("trigproof_reg_" + std::to_string(
                              std::hash<std::string>{}(texts.empty()
                                                           ? ""
                                                           : texts.front()) %
                              1000000));
  fs::create_directories(tmp);
  std::vector<std::string> paths;
  int i = 0;
  for (const auto& text : texts) {
    fs::path p = tmp / ("lemma_" + std::to_string(i++) + ".trig");
    std::ofstream out(p);
    out << text;
    out.close();
    paths.push_back(p.string());
  }
  Registry reg = load(paths);
  for (const auto& p : paths) fs::remove(p);
  fs::remove(tmp);
  return reg;
}

const LemmaFile* Registry::find_lemma(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &lemmas_[it->second];
}

bool Registry::is_verified(const std::string& id) const {
  auto it = verified_.find(id);
  return it != verified_.end() && it->second;
}

const VerifyReport* Registry::report_for(const std::string& id) const {
  for (const auto& r : reports_)
    if (r.lemma_id == id) return &r;
  return nullptr;
}

int Registry::count(LemmaKind k) const {
  int n = 0;
  for (const auto& lf : lemmas_)
    if (lf.kind == k) ++n;
  return n;
}

Registry load_registry(const std::vector<std::string>& paths) {
  return Registry::load(paths);
}

std::vector<VerifyReport> verify_all(const Registry& reg) {
  std::vector<VerifyReport> out;
  for (const auto& rep : reg.reports())
    out.push_back(verify_script(*reg.find_lemma(rep.lemma_id), reg));
  return out;
}

VerifyReport prove_pythagoras(const Registry& reg, const std::string& variant) {
  static const std::map<std::string, std::string> kVariants{
      {"first", "proof_first"},
      {"second", "proof_second"},
      {"third", "proof_third"},
      {"exercise", "proof_exercise"}};
  auto it = kVariants.find(variant);
  if (it == kVariants.end()) throw UnknownLemma(variant);
  const VerifyReport* rep = reg.report_for(it->second);
  if (!rep) throw UnknownLemma(it->second);
  return *rep;
}

TanDoubleAngle derive_tan_double_angle() {
  RatFunc t = RatFunc::variable("t");
  RatFunc y = RatFunc::variable("y");
  RatFunc one = RatFunc::constant(Rational(1));
  // tan2 = (y+1) t  and  tan2 = (y-1)/t; eliminate tan2, solve for y.
  MultiPoly rel = cross_diff((y + one) * t, (y - one) / t);
  MultiPoly coeff_y;  // rel = coeff_y * y + rest
  MultiPoly rest;
  for (const auto& [expo, coef] : rel.terms()) {
    Exponents e = expo;
    auto it = e.find("y");
    if (it == e.end()) {
      rest.add_term(e, coef);
      continue;
    }
    if (it->second != 1) throw Error("elimination expects a linear system");
    e.erase(it);
    coeff_y.add_term(e, coef);
  }
  RatFunc y_val = RatFunc(-rest, coeff_y);
  TanDoubleAngle result;
  result.y = y_val;
  result.tan2 = (y_val + one) * t;
  // Both starting expressions must agree after elimination.
  if (!ratfunc_equal(result.tan2, (y_val - one) / t))
    throw Error("elimination produced inconsistent expressions");
  return result;
}

ExerciseSolution solve_exercise(const Registry& reg) {
  const LemmaFile* bfdf = reg.find_lemma("exercise_bf_df");
  const VerifyReport* bfdf_rep = reg.report_for("exercise_bf_df");
  const VerifyReport* tri = reg.report_for("exercise_triple_angle");
  const VerifyReport* pyth = reg.report_for("proof_exercise");
  if (!bfdf || !bfdf_rep || !tri || !pyth)
    throw UnknownLemma("exercise lemma group");
  ExerciseSolution sol;
  bool have_bf = false, have_df = false;
  for (const auto& s : bfdf->script->steps) {
    if (s.label == "bf_eq") {
      sol.bf = s.eq;
      have_bf = true;
    }
    if (s.label == "df_eq") {
      sol.df = s.eq;
      have_df = true;
    }
  }
  if (!have_bf || !have_df)
    throw Error("exercise_bf_df script lacks bf_eq/df_eq steps");
  sol.identity = *tri;
  sol.pythagoras = *pyth;
  return sol;
}

namespace {

std::map<std::string, double> bind_doubles(const LemmaFile& lemma,
                                           const Figure& fig) {
  std::map<std::string, double> at;
  for (const auto& a : lemma.atoms) {
    if (a.bind.empty())
      throw ConfigError("lemma " + lemma.id + ": atom " + a.name +
                        " has no figure binding");
    at[a.name] = measure(fig, a.bind);
  }
  return at;
}

void scan_equation(const Equation& eq, const std::map<std::string, double>& at,
                   NumericValidation& v) {
  double l = eq.lhs.eval_double(at);
  double r = eq.rhs.eval_double(at);
  double res = std::abs(l - r);
  if (res > v.max_residual) {
    v.max_residual = res;
    v.worst_label = eq.label;
  }
}

}  // namespace

NumericValidation validate_lemma_numeric(const LemmaFile& lemma, int samples,
                                         std::uint64_t seed, double tol) {
  NumericValidation v;
  v.lemma_id = lemma.id;
  v.figure = lemma.figure;
  v.min_nonvanishing = std::numeric_limits<double>::infinity();
  if (lemma.figure.empty())
    throw ConfigError("lemma " + lemma.id + " has no figure binding");

  std::vector<MultiPoly> nonvanishing = lemma.scope_nonzero;
  for (const auto& a : lemma.atoms)
    if (a.nonzero) nonvanishing.push_back(MultiPoly::variable(a.name));
  if (lemma.script) {
    for (const auto& p : lemma.script->scope_nonzero) nonvanishing.push_back(p);
    for (const auto& item : lemma.script->givens)
      if (std::holds_alternative<Hypothesis>(item))
        for (const auto& p : std::get<Hypothesis>(item).nonvanishing)
          nonvanishing.push_back(p);
  }

  auto param_sets = sample_parameters(lemma.figure, samples, seed);
  for (const auto& params : param_sets) {
    Figure fig = construct_figure(lemma.figure, params);
    auto at = bind_doubles(lemma, fig);
    for (const auto& st : lemma.statements) scan_equation(st, at, v);
    if (lemma.script) {
      for (const auto& item : lemma.script->givens) {
        if (std::holds_alternative<Given>(item)) {
          scan_equation(std::get<Given>(item).eq, at, v);
        } else {
          const auto& h = std::get<Hypothesis>(item);
          Equation as_eq{h.target, RatFunc::variable(h.target), h.replacement};
          scan_equation(as_eq, at, v);
        }
      }
      for (const auto& s : lemma.script->steps) scan_equation(s.eq, at, v);
    }
    for (const auto& p : nonvanishing)
      v.min_nonvanishing =
          std::min(v.min_nonvanishing, std::abs(p.eval_double(at)));
  }
  v.samples = static_cast<int>(param_sets.size());
  v.ok = v.max_residual < tol && v.min_nonvanishing > 1e-7;
  return v;
}

int validate_lemma_exact(const LemmaFile& lemma, int points) {
  if (lemma.figure.empty())
    throw ConfigError("lemma " + lemma.id + " has no figure binding");
  int checked = 0;
  for (int k = 0; k < points; ++k) {
    auto params = exact_params_from_seed(lemma.figure, 3 * k + 1, 53 + k);
    auto q = exact_quantities(lemma.figure, params);
    std::map<std::string, Rational> at;
    for (const auto& a : lemma.atoms) {
      auto it = q.find(a.bind);
      if (it == q.end())
        throw ConfigError("no exact value for quantity " + a.bind);
      at[a.name] = it->second;
    }
    auto check_eq = [&](const Equation& eq) {
      auto l = eq.lhs.eval(at);
      auto r = eq.rhs.eval(at);
      if (!l || !r)
        throw Error("exact probe hit a vanishing denominator in " + eq.label);
      if (!(*l == *r))
        throw Error("exact probe failed for " + lemma.id + "/" + eq.label +
                    ": " + l->str() + " != " + r->str());
      ++checked;
    };
    for (const auto& st : lemma.statements) check_eq(st);
    if (lemma.script) {
      for (const auto& item : lemma.script->givens) {
        if (std::holds_alternative<Given>(item)) {
          check_eq(std::get<Given>(item).eq);
        } else {
          const auto& h = std::get<Hypothesis>(item);
          check_eq({h.target, RatFunc::variable(h.target), h.replacement});
        }
      }
      for (const auto& s : lemma.script->steps) check_eq(s.eq);
    }
  }
  return checked;
}

}  // namespace trigproof

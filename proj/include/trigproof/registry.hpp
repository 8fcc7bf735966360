#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigproof/engine.hpp"
#include "trigproof/figure.hpp"

namespace trigproof {

// The loaded catalog. Loading parses every file, verifies all scripts in
// dependency order and enforces that declared dependencies equal the
// invoked sets reported by verification.
class Registry : public RegistryView {
 public:
  static Registry load(const std::vector<std::string>& paths);
  static Registry load_dir(const std::string& dir);
  static Registry from_texts(const std::vector<std::string>& texts);

  const LemmaFile* find_lemma(const std::string& id) const override;
  bool is_verified(const std::string& id) const override;

  // Lemmas sorted by id.
  const std::vector<LemmaFile>& lemmas() const { return lemmas_; }
  // Reports for derived/theorem scripts in verification (topological) order.
  const std::vector<VerifyReport>& reports() const { return reports_; }
  const VerifyReport* report_for(const std::string& id) const;

  int count(LemmaKind k) const;

 private:
  std::vector<LemmaFile> lemmas_;
  std::vector<VerifyReport> reports_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, bool> verified_;
};

// Spec-surface loader.
Registry load_registry(const std::vector<std::string>& paths);

// Re-verifies every derived/theorem script in topological order.
std::vector<VerifyReport> verify_all(const Registry& reg);

// The four Pythagoras proofs by variant name: first, second, third, exercise.
VerifyReport prove_pythagoras(const Registry& reg, const std::string& variant);

// Programmatic elimination of the auxiliary length between the two
// double-angle expressions: from tan2 = (y+1)*t and tan2 = (y-1)/t, solves
// for y and returns the closed forms.
struct TanDoubleAngle {
  RatFunc y;     // (1 + t^2)/(1 - t^2)
  RatFunc tan2;  // 2t/(1 - t^2)
};
TanDoubleAngle derive_tan_double_angle();

struct ExerciseSolution {
  Equation bf;  // BF = sin2theta / sin3theta
  Equation df;  // DF = sintheta / sin3theta
  VerifyReport identity;    // sin3 + sin = 2 cos sin2
  VerifyReport pythagoras;  // the exercise-style proof of c^2 = a^2 + b^2
};
ExerciseSolution solve_exercise(const Registry& reg);

// Floating-point cross-validation of a lemma against its bound figure:
// every hypothesis, given, step and statement is evaluated at sampled
// parameters; nonvanishing declarations must stay bounded away from zero.
struct NumericValidation {
  std::string lemma_id;
  std::string figure;
  int samples = 0;
  double max_residual = 0.0;
  std::string worst_label;
  double min_nonvanishing = 0.0;
  bool ok = false;
};
NumericValidation validate_lemma_numeric(const LemmaFile& lemma, int samples,
                                         std::uint64_t seed, double tol);

// Exact-arithmetic probe: accepted equations must evaluate to exact
// equality at rational points of the figure's constraint variety.
// Returns the number of (point, equation) pairs checked; throws on any
// inequality.
int validate_lemma_exact(const LemmaFile& lemma, int points);

}  // namespace trigproof

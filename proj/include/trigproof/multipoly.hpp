#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trigproof/rational.hpp"

namespace trigproof {

// Exponent vector of one monomial: indeterminate name -> power (> 0 only).
using Exponents = std::map<std::string, unsigned>;

// Sparse multivariate polynomial over the rationals. Canonical form: no term
// with a zero coefficient, exponent vectors unique, exponents strictly
// positive. Term storage is an ordered map so printing and iteration are
// deterministic.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name, unsigned power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant value if is_constant(), otherwise nullopt.
  std::optional<Rational> constant_value() const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }
  // Storage-map comparison; deterministic, used only for ordered containers.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ < b.terms_;
  }

  std::set<std::string> atoms() const;
  bool contains_atom(const std::string& name) const;
  unsigned degree_in(const std::string& name) const;
  unsigned total_degree() const;

  // Pure lexicographic monomial order over the union of variable names.
  // Unlike the storage-map order this one is compatible with multiplication,
  // which exact division below relies on.
  static bool lex_less(const Exponents& a, const Exponents& b);
  // Lex-greatest term; nullptr for the zero polynomial.
  const std::pair<const Exponents, Rational>* lex_leading() const;

  // Positive rational g with p/g having coprime integer coefficients,
  // negated when the lex-leading coefficient is negative. Zero for zero.
  Rational signed_content() const;
  // *this divided by signed_content(): canonical primitive representative
  // of the ray {lambda * p : lambda > 0 rational}. Zero stays zero.
  MultiPoly normalized() const;

  // Exact quotient this / d, or nullopt when d does not divide exactly.
  std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

  Rational eval(const std::map<std::string, Rational>& at) const;
  double eval_double(const std::map<std::string, double>& at) const;

  // Deterministic rendering, terms in storage order, e.g. "a^2 - b^2 - c^2".
  std::string str() const;

 private:
  std::map<Exponents, Rational> terms_;
};

std::string exponents_str(const Exponents& e);

// Spec-surface decision procedure: true iff p holds no terms.
inline bool poly_is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace trigproof

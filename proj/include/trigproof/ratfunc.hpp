#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "trigproof/multipoly.hpp"

namespace trigproof {

// Quotient of two MultiPoly. Canonical form keeps the denominator primitive
// with positive lex-leading coefficient. No polynomial GCD reduction is
// attempted; equality goes through cross-multiplication instead.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MultiPoly::constant(Rational(1))) {}

  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(const Rational& c) {
    return RatFunc(MultiPoly::constant(c), MultiPoly::constant(Rational(1)));
  }
  static RatFunc variable(const std::string& name) {
    return RatFunc(MultiPoly::variable(name), MultiPoly::constant(Rational(1)));
  }
  static RatFunc from_poly(MultiPoly p) {
    return RatFunc(std::move(p), MultiPoly::constant(Rational(1)));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    return den_.constant_value() && *den_.constant_value() == Rational(1);
  }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw DivisionByZero("rational function division");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc pow(int e) const;

  std::set<std::string> atoms() const;
  bool contains_atom(const std::string& name) const;

  // Exact evaluation; nullopt when the denominator vanishes at the point.
  std::optional<Rational> eval(const std::map<std::string, Rational>& at) const;
  double eval_double(const std::map<std::string, double>& at) const;

  std::string str() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

// Cross-multiplied difference f.num*g.den - g.num*f.den. The zero test on
// this polynomial decides equality of the two rational functions.
MultiPoly cross_diff(const RatFunc& f, const RatFunc& g);

// Spec-surface equality: true iff cross_diff(f, g) is the zero polynomial.
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

// Every occurrence of atom^k in p is rewritten as atom^(k mod power) times
// replacement^(k div power). With power == 1 the atom is fully eliminated
// (the replacement must not mention it; the caller guarantees that).
RatFunc substitute_power(const MultiPoly& p, const std::string& atom,
                         unsigned power, const RatFunc& replacement);
RatFunc substitute_power(const RatFunc& f, const std::string& atom,
                         unsigned power, const RatFunc& replacement);

}  // namespace trigproof

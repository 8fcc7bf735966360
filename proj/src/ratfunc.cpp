#include "trigproof/ratfunc.hpp"

namespace trigproof {

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator polynomial");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(Rational(1));
    return;
  }
  // Make the denominator primitive with a positive leading coefficient; the
  // numerator absorbs the scaling factor.
  Rational c = den_.signed_content();
  if (!c.is_one()) {
    Rational inv = c.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (num_.is_zero()) throw DivisionByZero("negative power of zero");
    return RatFunc(den_.pow(static_cast<unsigned>(-e)),
                   num_.pow(static_cast<unsigned>(-e)));
  }
  return RatFunc(num_.pow(static_cast<unsigned>(e)),
                 den_.pow(static_cast<unsigned>(e)));
}

std::set<std::string> RatFunc::atoms() const {
  std::set<std::string> s = num_.atoms();
  for (const auto& a : den_.atoms()) s.insert(a);
  return s;
}

bool RatFunc::contains_atom(const std::string& name) const {
  return num_.contains_atom(name) || den_.contains_atom(name);
}

std::optional<Rational> RatFunc::eval(
    const std::map<std::string, Rational>& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(at) / d;
}

double RatFunc::eval_double(const std::map<std::string, double>& at) const {
  return num_.eval_double(at) / den_.eval_double(at);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

MultiPoly cross_diff(const RatFunc& f, const RatFunc& g) {
  return f.num() * g.den() - g.num() * f.den();
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
  return cross_diff(f, g).is_zero();
}

RatFunc substitute_power(const MultiPoly& p, const std::string& atom,
                         unsigned power, const RatFunc& replacement) {
  RatFunc acc;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly rest;
    Exponents re = e;
    unsigned k = 0;
    auto it = re.find(atom);
    if (it != re.end()) {
      k = it->second;
      unsigned keep = k % power;
      if (keep)
        it->second = keep;
      else
        re.erase(it);
    }
    rest.add_term(re, c);
    RatFunc term = RatFunc::from_poly(rest);
    if (k >= power) term = term * replacement.pow(static_cast<int>(k / power));
    acc = acc + term;
  }
  return acc;
}

RatFunc substitute_power(const RatFunc& f, const std::string& atom,
                         unsigned power, const RatFunc& replacement) {
  RatFunc n = substitute_power(f.num(), atom, power, replacement);
  RatFunc d = substitute_power(f.den(), atom, power, replacement);
  return n / d;
}

}  // namespace trigproof

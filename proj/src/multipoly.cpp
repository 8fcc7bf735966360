#include "trigproof/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace trigproof {

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, unsigned power) {
  MultiPoly p;
  if (power == 0) return constant(Rational(1));
  p.terms_[{{name, power}}] = Rational(1);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty())
    return terms_.begin()->second;
  return std::nullopt;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

static Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (const auto& [n, p] : b) r[n] += p;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(mono_mul(ea, eb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(Rational(1));
  MultiPoly base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

std::set<std::string> MultiPoly::atoms() const {
  std::set<std::string> s;
  for (const auto& [e, c] : terms_)
    for (const auto& [n, p] : e) s.insert(n);
  return s;
}

bool MultiPoly::contains_atom(const std::string& name) const {
  for (const auto& [e, c] : terms_)
    if (e.count(name)) return true;
  return false;
}

unsigned MultiPoly::degree_in(const std::string& name) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    auto it = e.find(name);
    if (it != e.end()) d = std::max(d, it->second);
  }
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (const auto& [n, p] : e) t += p;
    d = std::max(d, t);
  }
  return d;
}

bool MultiPoly::lex_less(const Exponents& a, const Exponents& b) {
  // Walk variable names in increasing order; the first differing exponent
  // decides. Missing variable means exponent zero.
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    std::string na = ia != a.end() ? ia->first : std::string();
    std::string nb = ib != b.end() ? ib->first : std::string();
    if (ia != a.end() && (ib == b.end() || na < nb)) {
      // a has a positive power on a variable b lacks (earlier name): a bigger.
      return false;
    }
    if (ib != b.end() && (ia == a.end() || nb < na)) {
      return true;
    }
    // same variable
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

const std::pair<const Exponents, Rational>* MultiPoly::lex_leading() const {
  const std::pair<const Exponents, Rational>* best = nullptr;
  for (const auto& t : terms_) {
    if (!best || lex_less(best->first, t.first)) best = &t;
  }
  return best;
}

Rational MultiPoly::signed_content() const {
  if (terms_.empty()) return Rational(0);
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd_big(num_gcd, c.numerator() < 0 ? BigInt(-c.numerator())
                                                 : c.numerator());
    den_lcm = lcm_big(den_lcm, c.denominator());
  }
  Rational content(num_gcd, den_lcm);
  if (lex_leading()->second.sign() < 0) content = -content;
  return content;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return MultiPoly();
  return scaled(signed_content().inverse());
}

static bool mono_divides(const Exponents& d, const Exponents& m) {
  for (const auto& [n, p] : d) {
    auto it = m.find(n);
    if (it == m.end() || it->second < p) return false;
  }
  return true;
}

static Exponents mono_div(const Exponents& m, const Exponents& d) {
  Exponents r = m;
  for (const auto& [n, p] : d) {
    auto it = r.find(n);
    it->second -= p;
    if (it->second == 0) r.erase(it);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (auto c = d.constant_value()) {
    return scaled(c->inverse());
  }
  MultiPoly rem = *this;
  MultiPoly quot;
  const auto* dl = d.lex_leading();
  while (!rem.is_zero()) {
    const auto* rl = rem.lex_leading();
    if (!mono_divides(dl->first, rl->first)) return std::nullopt;
    Exponents qe = mono_div(rl->first, dl->first);
    Rational qc = rl->second / dl->second;
    MultiPoly qterm;
    qterm.add_term(qe, qc);
    quot += qterm;
    rem -= qterm * d;
  }
  return quot;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& at) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (const auto& [n, p] : e) {
      auto it = at.find(n);
      if (it == at.end()) throw UndeclaredAtom(n);
      t *= it->second.pow(p);
    }
    acc += t;
  }
  return acc;
}

double MultiPoly::eval_double(const std::map<std::string, double>& at) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (const auto& [n, p] : e) {
      auto it = at.find(n);
      if (it == at.end()) throw UndeclaredAtom(n);
      double v = it->second;
      for (unsigned i = 0; i < p; ++i) t *= v;
    }
    acc += t;
  }
  return acc;
}

std::string exponents_str(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, p] : e) {
    if (!first) os << "*";
    first = false;
    os << n;
    if (p > 1) os << "^" << p;
  }
  return os.str();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (e.empty()) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << exponents_str(e);
    }
  }
  return os.str();
}

}  // namespace trigproof

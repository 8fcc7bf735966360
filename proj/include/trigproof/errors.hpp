#pragma once

#include <stdexcept>
#include <string>

namespace trigproof {

// Base class for everything this library throws. Verification *failures*
// are not exceptions; they are verdicts carried in reports. Exceptions are
// reserved for malformed input, unresolved references and contract breaches.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what)
      : Error("DivisionByZero: " + what) {}
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("ParseError at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

struct UndeclaredAtom : Error {
  explicit UndeclaredAtom(const std::string& name)
      : Error("UndeclaredAtom(" + name + ")") {}
};

struct DuplicateLabel : Error {
  explicit DuplicateLabel(const std::string& label)
      : Error("DuplicateLabel(" + label + ")") {}
};

struct UnresolvedJustification : Error {
  explicit UnresolvedJustification(const std::string& ref)
      : Error("UnresolvedJustification(" + ref + ")") {}
};

struct UnjustifiedDivision : Error {
  explicit UnjustifiedDivision(const std::string& poly)
      : Error("UnjustifiedDivision: denominator not covered by a "
              "nonvanishing declaration: " +
              poly) {}
};

struct UnjustifiedHypothesis : Error {
  explicit UnjustifiedHypothesis(const std::string& what)
      : Error("UnjustifiedHypothesis: " + what) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& constraint)
      : Error("DomainViolation(" + constraint + ")") {}
};

struct UnknownLemma : Error {
  explicit UnknownLemma(const std::string& id)
      : Error("UnknownLemma(" + id + ")") {}
};

struct UnknownQuantity : Error {
  explicit UnknownQuantity(const std::string& name)
      : Error("UnknownQuantity(" + name + ")") {}
};

struct DependencyMismatch : Error {
  explicit DependencyMismatch(const std::string& detail)
      : Error("DependencyMismatch(" + detail + ")") {}
};

struct CycleDetected : Error {
  explicit CycleDetected(const std::string& cycle)
      : Error("CycleDetected(" + cycle + ")") {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};

}  // namespace trigproof

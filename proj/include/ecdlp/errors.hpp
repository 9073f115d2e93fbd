#pragma once

// Error types thrown across the workbench. Every error carries a stable
// one-word name that the CLI maps to a single diagnostic line.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecdlp {

class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct ModulusMismatch : Error {
  explicit ModulusMismatch(const std::string& m) : Error("ModulusMismatch", m) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m) : Error("DivisionByZero", m) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& m) : Error("NotPrime", m) {}
};

struct ModulusTooSmall : Error {
  explicit ModulusTooSmall(const std::string& m) : Error("ModulusTooSmall", m) {}
};

struct SingularCurve : Error {
  explicit SingularCurve(const std::string& m) : Error("SingularCurve", m) {}
};

struct NotOnCurve : Error {
  explicit NotOnCurve(const std::string& m) : Error("NotOnCurve", m) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error("CapExceeded", m) {}
};

struct NoPrimeOrderSubgroup : Error {
  explicit NoPrimeOrderSubgroup(const std::string& m)
      : Error("NoPrimeOrderSubgroup", m) {}
};

struct IdentityTarget : Error {
  explicit IdentityTarget(const std::string& m) : Error("IdentityTarget", m) {}
};

struct NotInSubgroup : Error {
  explicit NotInSubgroup(const std::string& m) : Error("NotInSubgroup", m) {}
};

struct KeyOutOfRange : Error {
  explicit KeyOutOfRange(const std::string& m) : Error("KeyOutOfRange", m) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string& m) : Error("InsufficientData", m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

// Domain-parameter validation reports every failed invariant, not just the
// first one. Violation names: OffCurveGenerator, WrongOrder, CompositeOrder,
// CofactorMismatch, HasseViolation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error("ValidationError", join(violations)),
        violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "domain parameter validation failed:";
    for (const auto& name : v) {
      out += ' ';
      out += name;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace ecdlp

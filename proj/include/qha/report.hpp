#pragma once

#include <string>
#include <vector>

namespace qha {

/// One failed check: named axiom tag, witness indices, both sides.
struct Violation {
  std::string axiom;   // e.g. "(q3)", "associativity"
  std::string witness; // e.g. "(i=1, j=0, k=1)"
  std::string lhs;
  std::string rhs;
};

/// Machine-readable failure evidence. Empty = pass.
struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string axiom, std::string witness, std::string lhs, std::string rhs) {
    violations.push_back({std::move(axiom), std::move(witness), std::move(lhs), std::move(rhs)});
  }

  void merge(const VerificationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }

  std::string summary() const {
    if (ok()) return "pass";
    std::string s;
    for (const auto& v : violations) {
      s += v.axiom + " at " + v.witness + ": lhs=" + v.lhs + " rhs=" + v.rhs + "\n";
    }
    return s;
  }
};

/// Thrown by constructions that refuse to emit unverified structures.
class VerificationError : public std::runtime_error {
public:
  VerificationError(const std::string& what, VerificationReport rep)
      : std::runtime_error(what + "\n" + rep.summary()), report(std::move(rep)) {}

  VerificationReport report;
};

} // namespace qha

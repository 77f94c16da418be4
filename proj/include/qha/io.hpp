#pragma once

#include "qha/representations.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qha::io {

/// Schema or syntax problem in an input file (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class FileKind { Algebra, QuasiHopf, ModuleAlgebra, ComoduleAlgebra, Morphism };

std::string kind_name(FileKind k);

/// Reads just enough of the file to classify it (schema checked on load).
FileKind read_kind(const std::string& path);

/// Field declared in the file, or `fallback` when the key is absent.
Field read_field(const std::string& path, Field fallback);

AlgebraPtr load_algebra(const std::string& path, Field fallback);
HopfPtr load_quasi_hopf(const std::string& path, Field fallback);
ModuleAlgebra load_module_algebra(const std::string& path, HopfPtr H);
ComoduleAlgebra load_comodule_algebra(const std::string& path, HopfPtr H);
LinearMap load_morphism(const std::string& path, Field fallback);

void save_algebra(const std::string& path, const BasedAlgebra& a);
void save_quasi_hopf(const std::string& path, const QuasiHopfAlgebra& hq);
void save_module_algebra(const std::string& path, const ModuleAlgebra& ma);
void save_comodule_algebra(const std::string& path, const ComoduleAlgebra& ca);
void save_morphism(const std::string& path, const LinearMap& f);

/// One named check in a CLI run, with the axiom-level evidence on failure.
struct Check {
  std::string id;
  bool passed = false;
  std::vector<Violation> witnesses;
};

/// Deterministic machine-readable run report. Timings are kept in their own
/// section so the checks section is byte-stable across runs.
struct RunReport {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, long long>> timings_us;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string id, const VerificationReport& rep) {
    checks.push_back({std::move(id), rep.ok(), rep.violations});
  }
  std::string to_json() const;
  std::string to_text() const;
};

} // namespace qha::io

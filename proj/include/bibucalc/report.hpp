#pragma once

#include <string>
#include <vector>

namespace bibu {

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;  // labels of the offending tuple
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::string> witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  /// Keeps only the first witness per axiom.
  void note(const std::string& axiom, std::vector<std::string> witness) {
    if (!mentions(axiom)) add(axiom, std::move(witness));
  }
  bool mentions(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

}  // namespace bibu

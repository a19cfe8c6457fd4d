#pragma once

// Randomized and exhaustive verification suites over bounded families.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "idnf/enumerate.hpp"
#include "idnf/integro.hpp"

namespace idnf {

struct VerifyConfig {
  std::vector<Weight> lambdas{Weight()};
  std::vector<TruncationOrder> orders{TruncationOrder::unbounded()};
  std::vector<VarTable> tables{VarTable()};
  SizeBound bounds;
  /// Multiplication compositions φ(u,v)P(w): u, v within `product`, w within
  /// `multiplier` (depth and degree only).
  SizeBound product{2, 1};
  SizeBound multiplier{1, 1};
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  /// Random combinations of irreducible words per setting (confluence).
  std::size_t combinations = 25;
  Fuel fuel = Fuel::standard();
};

struct Failure {
  std::string check;
  std::string setting;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::map<std::string, std::size_t> counts;
  std::map<std::string, std::size_t> failures_by_check;
  std::vector<Failure> failures;  // the first few of each check, with reproducers

  void pass(const std::string& check);
  void fail(const std::string& check, const std::string& setting, const std::string& detail);
  bool passed() const { return failure_count == 0; }
  /// Passed restricted to the named checks.
  bool passed(const std::vector<std::string>& checks) const;
  std::string to_json() const;
};

/// Quotient axioms: commutativity, associativity, Leibniz, Rota-Baxter,
/// section and integration by parts on random normal elements.
SuiteReport verify_axioms(const VerifyConfig& cfg);

/// d(φ) = 0, the multiplication identity and certificate, including and
/// intersection compositions, and the leading word of φ.
SuiteReport verify_gsb(const VerifyConfig& cfg);

/// Weak monomiality of the word order, the normal-substitution lead and the
/// normality of d^l(⋆).
SuiteReport verify_order(const VerifyConfig& cfg);

/// A = A_f ⊕ d(A) on each degree piece by exact rank, and decompose_functional
/// against a linear solve. Needs bounded truncation orders.
SuiteReport verify_directsum(const VerifyConfig& cfg);

/// Normal forms: strategy independence, idempotence, irreducible outputs,
/// independence of irreducible words; red strategy independence.
SuiteReport verify_confluence(const VerifyConfig& cfg);

/// Normal forms at order n agree with order n+1 and unbounded order.
SuiteReport verify_filtration(const VerifyConfig& cfg);

}  // namespace idnf

#pragma once

#include <hydrosym/catalog.hpp>
#include <hydrosym/pdesystem.hpp>

namespace hydrosym {

// Outcome of reproducing one table row's reduced equations.
struct AnsatzOutcome {
  std::string label;
  std::string status;  // pass | fail | erratum | skipped
  std::vector<std::string> factors;  // recorded quotient per equation
  bool monomial_factors = true;      // false -> flagged for manual review
  std::string witness;
};

struct MatchResult {
  bool match = false;
  std::string factor;
  bool monomial = true;
  std::string discrepancy;
};

// computed == factor * expected with a nonzero factor; the factor is recorded
// (a non-monomial factor is reported for review, not failed).
MatchResult match_reduced(const SymExpr& computed, const SymExpr& expected);

// Substitutes the row's change of variable into the governing system,
// clears denominators, eliminates x through the symmetry variable and
// divides by the expected reduced equations.
AnsatzOutcome apply_ansatz(const AnsatzRow& row);

// v(sigma) = 0 and v(invariant) = 0 for the row's subalgebra generator.
struct InvariantOutcome {
  std::string label;
  bool pass = false;
  std::string witness;
};
InvariantOutcome check_ansatz_invariants(const AnsatzRow& row);

struct SolutionOutcome {
  std::string id;
  std::string status;  // pass | fail | erratum
  std::string witness;
  std::string tier;
};

SolutionOutcome verify_solution(const SolutionRecord& rec, std::uint64_t seed = 42);

// Monomial solution of the SL10 reduction: checks the printed exponents and
// coefficient formulas symbolically in a, b, p modulo the printed quadratic.
SolutionOutcome verify_sl10_monomial();

struct EulerOutcome {
  bool pass = false;
  bool negative_control_fails = false;  // flipped sign must break it
  std::string witness;
};

// Double-wave substitution into the Euler system, reduced via the invariant
// hydrodynamic equations.
EulerOutcome verify_euler_double_wave();

}  // namespace hydrosym

#pragma once

#include <hydrosym/symexpr.hpp>

#include <string>
#include <vector>

namespace hydrosym {

// Evolutionary first-order system: residuals plus the solved form of each
// leading t-derivative, used for on-shell reduction.
struct PDESystem {
  std::string name;
  std::vector<int> fields;             // coord ids, even fields first
  std::vector<SymExpr> residuals;
  std::map<int, SymExpr> solved_t;     // field coord id -> rhs of u_t = rhs

  bool evolutionary() const { return !solved_t.empty(); }
};

// R_t + S R_x = 0, S_t + R S_x = 0
PDESystem classical_system();
// R_t + S R_x + psi_x xi_x = 0, S_t + R S_x + xi_x psi_x = 0,
// xi_t + S xi_x = 0, psi_t + R psi_x = 0
PDESystem susy_system();

// Replaces every t-derivative of a solved field (and its prolongations) by
// total derivatives of the solved form, until only x-derivatives remain.
SymExpr on_shell_reduce(const SymExpr& e, const PDESystem& sys);

}  // namespace hydrosym

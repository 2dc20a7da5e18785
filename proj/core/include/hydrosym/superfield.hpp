#pragma once

#include <hydrosym/symexpr.hpp>

namespace hydrosym {

// Superspace value body + theta*soul; theta^2 = 0 is structural.
struct SuperExpr {
  SymExpr body;
  SymExpr soul;

  bool is_zero() const { return body.is_zero() && soul.is_zero(); }
  SuperExpr operator+(const SuperExpr& o) const { return {body + o.body, soul + o.soul}; }
  SuperExpr operator-(const SuperExpr& o) const { return {body - o.body, soul - o.soul}; }
  SuperExpr operator-() const { return {-body, -soul}; }
};

// theta as a superspace value: 0 + theta*1
SuperExpr theta_super();

// Component superfields Phi = xi + theta*R, Psi = psi + theta*S.
SuperExpr superfield_Phi();
SuperExpr superfield_Psi();

// D = theta d_x + d_theta (left action): D(a + theta b) = b + theta a_x.
SuperExpr covariant_D(const SuperExpr& e);
// Q = theta d_x - d_theta: Q(a + theta b) = -b + theta a_x.
SuperExpr susy_Q(const SuperExpr& e);

SuperExpr smul(const SuperExpr& a, const SuperExpr& b);
SuperExpr sderiv(const SuperExpr& e, const std::string& indep);  // d/dx, d/dt

// theta-components of the two superequations
//   Phi_t + a DPsi D^2Phi + (1-a) Psi D^3Phi = 0
//   Psi_t + b DPhi D^2Psi + (1-b) Phi D^3Psi = 0
// for symbolic or rational a, b.
struct DecomposedSystem {
  SymExpr eq1_body, eq1_soul;  // fermionic (xi) and bosonic (R) components
  SymExpr eq2_body, eq2_soul;  // fermionic (psi) and bosonic (S) components
};
DecomposedSystem decompose_system(const SymExpr& a, const SymExpr& b);

}  // namespace hydrosym

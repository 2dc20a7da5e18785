#include <hydrosym/parser.hpp>
#include <hydrosym/superfield.hpp>

namespace hydrosym {

SuperExpr theta_super() {
  init_standard_symbols();
  return {SymExpr(), SymExpr::one()};
}

SuperExpr superfield_Phi() {
  init_standard_symbols();
  return {parse_expr("xi"), parse_expr("R")};
}

SuperExpr superfield_Psi() {
  init_standard_symbols();
  return {parse_expr("psi"), parse_expr("S")};
}

SuperExpr covariant_D(const SuperExpr& e) {
  init_standard_symbols();
  int x = CoordRegistry::instance().lookup("x");
  return {e.soul, e.body.total_derivative(x)};
}

SuperExpr susy_Q(const SuperExpr& e) {
  init_standard_symbols();
  int x = CoordRegistry::instance().lookup("x");
  return {-e.soul, e.body.total_derivative(x)};
}

SuperExpr sderiv(const SuperExpr& e, const std::string& indep) {
  init_standard_symbols();
  int v = CoordRegistry::instance().lookup(indep);
  return {e.body.total_derivative(v), e.soul.total_derivative(v)};
}

namespace {

// split an expression into its even-parity and odd-parity parts
void parity_split(const SymExpr& e, SymExpr& even, SymExpr& odd) {
  for (const auto& [t, c] : e.terms()) {
    Term copy = t;
    if (((t.gkey.size() + t.odd.size()) % 2) == 0)
      even.add_term(std::move(copy), c);
    else
      odd.add_term(std::move(copy), c);
  }
}

}  // namespace

SuperExpr smul(const SuperExpr& a, const SuperExpr& b) {
  // (a0 + theta a1)(b0 + theta b1) = a0 b0 + theta(a1 b0 + a0even b1 - a0odd b1)
  SymExpr a0even, a0odd;
  parity_split(a.body, a0even, a0odd);
  SuperExpr r;
  r.body = a.body * b.body;
  r.soul = a.soul * b.body + a0even * b.soul - a0odd * b.soul;
  return r;
}

DecomposedSystem decompose_system(const SymExpr& a, const SymExpr& b) {
  SuperExpr Phi = superfield_Phi();
  SuperExpr Psi = superfield_Psi();
  SymExpr one = SymExpr::one();

  auto third = [](const SuperExpr& f) { return covariant_D(covariant_D(covariant_D(f))); };

  SuperExpr eq1 = sderiv(Phi, "t") + smul({a, SymExpr()}, smul(covariant_D(Psi), covariant_D(covariant_D(Phi)))) +
                  smul({one - a, SymExpr()}, smul(Psi, third(Phi)));
  SuperExpr eq2 = sderiv(Psi, "t") + smul({b, SymExpr()}, smul(covariant_D(Phi), covariant_D(covariant_D(Psi)))) +
                  smul({one - b, SymExpr()}, smul(Phi, third(Psi)));

  return {eq1.body, eq1.soul, eq2.body, eq2.soul};
}

}  // namespace hydrosym

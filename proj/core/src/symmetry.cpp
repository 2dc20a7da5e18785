#include <hydrosym/symmetry.hpp>

namespace hydrosym {

namespace {

int field_atom(int field) {
  return AtomTable::instance().jet_atom(JetSpec{field, {}, false});
}
int jet1_atom(int field, int indep) {
  return AtomTable::instance().jet_atom(JetSpec{field, {indep}, false});
}

}  // namespace

ProlongedField prolong(const VectorField& v, const PDESystem& sys) {
  auto& cr = CoordRegistry::instance();
  std::vector<int> indeps = {cr.lookup("x"), cr.lookup("t")};
  ProlongedField pv;
  pv.base = v;
  for (int u : sys.fields) {
    SymExpr phi = v.coeffs.count(u) ? v.coeffs.at(u) : SymExpr();
    for (int i : indeps) {
      // phi^u_i = D_i(phi^u) - sum_j u_j D_i(xi^j)
      SymExpr c = phi.total_derivative(i);
      for (int j : indeps) {
        SymExpr xi = v.coeffs.count(j) ? v.coeffs.at(j) : SymExpr();
        if (xi.is_zero()) continue;
        c = c - SymExpr::atom(jet1_atom(u, j)) * xi.total_derivative(i);
      }
      if (!c.is_zero()) pv.jet_coeffs[jet1_atom(u, i)] = c;
    }
  }
  return pv;
}

SymExpr apply_prolonged(const ProlongedField& pv, const SymExpr& e) {
  SymExpr r = apply_vector_field(pv.base, e);
  for (const auto& [atom, coeff] : pv.jet_coeffs) r += coeff * e.partial(atom);
  return r;
}

InvarianceReport check_invariance(const VectorField& v, const PDESystem& sys) {
  InvarianceReport rep;
  rep.generator = v.name;
  ProlongedField pv = prolong(v, sys);
  rep.pass = true;
  for (const auto& residual : sys.residuals) {
    SymExpr acted = apply_prolonged(pv, residual);
    SymExpr reduced = on_shell_reduce(acted, sys);
    rep.residuals.push_back(reduced.str());
    ZeroResult z = is_zero_symbolic(reduced);
    if (!z.zero && rep.pass) {
      rep.pass = false;
      rep.witness = z.witness;
    }
  }
  return rep;
}

SuiteReport verify_generator_suite(const PDESystem& sys,
                                   const std::vector<VectorField>& gens) {
  SuiteReport suite;
  suite.system = sys.name;
  for (const auto& g : gens) {
    suite.items.push_back(check_invariance(g, sys));
    if (!suite.items.back().pass) suite.pass = false;
  }
  return suite;
}

}  // namespace hydrosym

#include <hydrosym/parser.hpp>
#include <hydrosym/pdesystem.hpp>

#include <algorithm>

namespace hydrosym {

PDESystem classical_system() {
  init_standard_symbols();
  PDESystem sys;
  sys.name = "classical";
  auto& cr = CoordRegistry::instance();
  sys.fields = {cr.lookup("R"), cr.lookup("S")};
  sys.residuals = {parse_expr("R_t + S*R_x"), parse_expr("S_t + R*S_x")};
  sys.solved_t[cr.lookup("R")] = parse_expr("-S*R_x");
  sys.solved_t[cr.lookup("S")] = parse_expr("-R*S_x");
  return sys;
}

PDESystem susy_system() {
  init_standard_symbols();
  PDESystem sys;
  sys.name = "susy";
  auto& cr = CoordRegistry::instance();
  sys.fields = {cr.lookup("R"), cr.lookup("S"), cr.lookup("xi"), cr.lookup("psi")};
  sys.residuals = {parse_expr("R_t + S*R_x + psi_x*xi_x"),
                   parse_expr("S_t + R*S_x + xi_x*psi_x"),
                   parse_expr("xi_t + S*xi_x"), parse_expr("psi_t + R*psi_x")};
  sys.solved_t[cr.lookup("R")] = parse_expr("-S*R_x - psi_x*xi_x");
  sys.solved_t[cr.lookup("S")] = parse_expr("-R*S_x - xi_x*psi_x");
  sys.solved_t[cr.lookup("xi")] = parse_expr("-S*xi_x");
  sys.solved_t[cr.lookup("psi")] = parse_expr("-R*psi_x");
  return sys;
}

SymExpr on_shell_reduce(const SymExpr& e, const PDESystem& sys) {
  if (!sys.evolutionary())
    throw std::runtime_error("on_shell_reduce: system has no solved forms");
  int tcoord = CoordRegistry::instance().lookup("t");
  auto& tab = AtomTable::instance();
  SymExpr cur = e;
  for (int round = 0; round < 1000; ++round) {
    // find any t-derivative atom of a solved field
    int target = -1;
    JetSpec spec;
    for (const auto& [term, c] : cur.terms()) {
      auto scan = [&](int a) {
        if (target >= 0) return;
        const AtomRec& r = tab.rec(a);
        if (r.cls != AtomClass::Jet) return;
        if (!sys.solved_t.count(r.jet.field)) return;
        if (std::find(r.jet.didx.begin(), r.jet.didx.end(), tcoord) == r.jet.didx.end())
          return;
        target = a;
        spec = r.jet;
      };
      for (const auto& [a, q] : term.even) scan(a);
      for (int a : term.odd) scan(a);
      if (target >= 0) break;
    }
    if (target < 0) return cur;
    // u_{J} with t in J: replace by D_{J \ t}(rhs)
    std::vector<int> rest = spec.didx;
    rest.erase(std::find(rest.begin(), rest.end(), tcoord));
    SymExpr repl = sys.solved_t.at(spec.field);
    for (int d : rest) repl = repl.total_derivative(d);
    cur = cur.substitute({{target, repl}});
  }
  throw std::runtime_error("on_shell_reduce: did not stabilize");
}

}  // namespace hydrosym

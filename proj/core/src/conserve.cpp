#include <hydrosym/conserve.hpp>
#include <hydrosym/parser.hpp>

namespace hydrosym {

ConservationPair density_flux(int k, bool corrected) {
  if (k < 1) throw std::domain_error("density_flux: k must be >= 1");
  init_standard_symbols();
  SymExpr R = parse_expr("R"), S = parse_expr("S");
  ConservationPair pair;
  pair.k = k;
  pair.corrected = corrected;
  SymExpr rho, inner;
  if (corrected) {
    for (int l = 0; l <= k; ++l) rho += R.pow_int(l) * S.pow_int(k - l);
    for (int j = 0; j <= k - 1; ++j) inner += R.pow_int(j) * S.pow_int(k - 1 - j);
    pair.density = rho;
    pair.flux = R * S * inner;
  } else {
    for (int l = 1; l <= k; ++l) rho += R.pow_int(l) * S.pow_int(k - l);
    for (int j = 1; j <= k - 1; ++j) inner += R.pow_int(j) * S.pow_int(k - 1 - j);
    pair.density = rho;
    pair.flux = -(R * S * inner);
  }
  return pair;
}

DivergenceReport check_divergence(const ConservationPair& pair) {
  PDESystem sys = classical_system();
  int x = CoordRegistry::instance().lookup("x");
  int t = CoordRegistry::instance().lookup("t");
  SymExpr div = pair.density.total_derivative(t) + pair.flux.total_derivative(x);
  SymExpr reduced = on_shell_reduce(div, sys);
  DivergenceReport rep;
  rep.zero = is_zero_symbolic(reduced).zero;
  rep.residual = reduced.str();
  return rep;
}

double weierstrass_chi(const ConservationPair& pair,
                       const std::vector<PathPoint>& path, int steps,
                       const SolutionFn& R, const SolutionFn& S) {
  if (path.size() < 2) throw std::domain_error("weierstrass_chi: need a path");
  if (steps < 1) throw std::domain_error("weierstrass_chi: steps must be >= 1");
  int ra = atom_of_field("R"), sa = atom_of_field("S");
  auto eval_poly = [&](const SymExpr& e, double r, double s) {
    FloatGrassmann g = eval_numeric(e, {{ra, r}, {sa, s}});
    return g.coefficient(GKey{});
  };
  double chi = 0;
  for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
    double dx = (path[seg + 1].x - path[seg].x) / steps;
    double dt = (path[seg + 1].t - path[seg].t) / steps;
    for (int i = 0; i < steps; ++i) {
      double mx = path[seg].x + (i + 0.5) * dx;
      double mt = path[seg].t + (i + 0.5) * dt;
      double r = R(mx, mt), s = S(mx, mt);
      chi += eval_poly(pair.density, r, s) * dx - eval_poly(pair.flux, r, s) * dt;
    }
  }
  return chi;
}

}  // namespace hydrosym

#pragma once

#include <hydrosym/pdesystem.hpp>

#include <functional>
#include <vector>

namespace hydrosym {

struct ConservationPair {
  int k = 1;
  SymExpr density;  // rho^(k)(R, S)
  SymExpr flux;     // J^(k)(R, S)
  bool corrected = true;
};

// corrected: rho = sum_{l=0..k} R^l S^(k-l), J = R S sum_{j=0..k-1} R^j S^(k-1-j)
// paper-printed: rho = sum_{l=1..k} R^l S^(k-l), J = -R S sum_{j=1..k-1} R^j S^(k-1-j)
ConservationPair density_flux(int k, bool corrected = true);

struct DivergenceReport {
  bool zero = false;
  std::string residual;  // on-shell D_t rho + D_x J
};

DivergenceReport check_divergence(const ConservationPair& pair);

// Piecewise-linear path in the (x,t) plane.
struct PathPoint {
  double x = 0, t = 0;
};

using SolutionFn = std::function<double(double, double)>;  // (x,t) -> value

// Composite midpoint line integral of -J dt + rho dx along the path, with
// `steps` subdivisions per segment; R and S are solution callables.
double weierstrass_chi(const ConservationPair& pair,
                       const std::vector<PathPoint>& path, int steps,
                       const SolutionFn& R, const SolutionFn& S);

}  // namespace hydrosym

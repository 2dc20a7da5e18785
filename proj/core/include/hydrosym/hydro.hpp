#pragma once

#include <hydrosym/symexpr.hpp>

#include <string>
#include <vector>

namespace hydrosym {

struct CatastropheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Twice-differentiable single-variable profile with analytic derivatives.
class Profile {
 public:
  static Profile polynomial(std::vector<double> coeffs);  // sum c_i s^i
  static Profile quadratic(double c = 1.0);               // c s^2/2
  static Profile cubic(double c = 1.0);                   // c s^3/6
  static Profile quartic(double c = 1.0);                 // c s^4/12
  // Arbitrary expression in the variable `sigma`, differentiated symbolically.
  static Profile expression(const std::string& text);

  double f(double s) const;
  double df(double s) const;
  double d2f(double s) const;
  const std::string& describe() const { return desc_; }

 private:
  std::vector<double> coeffs_;  // polynomial fast path
  bool poly_ = true;
  SymExpr e_, de_, d2e_;
  int var_atom_ = -1;
  std::string desc_;
};

struct ProfilePair {
  Profile F1, F2;
  std::string preset;
};

ProfilePair preset_pair(const std::string& name);  // quadratic | cubic | quartic

struct ForwardPoint {
  double x = 0, t = 0;
};

// x = R F1'(R) - F1(R) + S F2'(S) - F2(S),  t = F1'(R) + F2'(S)
ForwardPoint forward_map(double R, double S, const ProfilePair& p);

struct NewtonOptions {
  double tol = 1e-12;       // on the Newton step norm
  int max_iter = 50;
  double delta = 1e-10;     // |det| threshold for the catastrophe flag
  int max_halvings = 30;
};

struct NewtonResult {
  double R = 0, S = 0;
  int iterations = 0;
  double det = 0;
};

// Damped Newton on the 2x2 system with the analytic Jacobian
// [[R F1'', S F2''], [F1'', F2'']]. Throws CatastropheError on a singular
// Jacobian and NonConvergenceError past max_iter.
NewtonResult invert_map(double x, double t, const ProfilePair& p,
                        double guessR, double guessS,
                        const NewtonOptions& opt = {});

double jacobian_det(double R, double S, const ProfilePair& p);

struct GridConfig {
  double xmin = 0, xmax = 1, tmin = 0, tmax = 1;
  int nx = 2, nt = 2;
  NewtonOptions newton;
  double guessR = 1.0, guessS = 2.0;
};

enum class NodeStatus { Converged = 0, Catastrophe = 1, NoConvergence = 2 };

struct GridNode {
  double x = 0, t = 0;
  double R = 0, S = 0, det = 0;
  double residual_R = 0, residual_S = 0;  // NaN when a stencil is unavailable
  NodeStatus status = NodeStatus::Converged;
};

struct GridResult {
  GridConfig cfg;
  std::vector<GridNode> nodes;  // row-major, t-major rows of x
  const GridNode& at(int ix, int it) const;
  double max_residual() const;  // over converged nodes with full stencils
  int flagged_count() const;
};

// Row-major sweep with continuation (previous node's solution as guess) and
// second-order central/one-sided finite-difference residuals of the system.
GridResult evaluate_grid(const GridConfig& cfg, const ProfilePair& p);

void write_grid_csv(const GridResult& grid, std::ostream& os);

struct LocusSample {
  double R = 0, S = 0, det = 0;
  bool flagged = false;
};

// Samples det = F1''(R) F2''(S) (R - S) on a rectangle; flagged where
// |det| <= delta.
std::vector<LocusSample> catastrophe_locus(const ProfilePair& p, double rmin,
                                           double rmax, double smin, double smax,
                                           int n, double delta = 1e-10);

}  // namespace hydrosym

#include <hydrosym/hydro.hpp>
#include <hydrosym/parser.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace hydrosym {

Profile Profile::polynomial(std::vector<double> coeffs) {
  Profile p;
  p.poly_ = true;
  p.coeffs_ = std::move(coeffs);
  std::ostringstream os;
  os << "poly[";
  for (size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? "," : "") << p.coeffs_[i];
  os << "]";
  p.desc_ = os.str();
  return p;
}

Profile Profile::quadratic(double c) { return polynomial({0, 0, c / 2}); }
Profile Profile::cubic(double c) { return polynomial({0, 0, 0, c / 6}); }
Profile Profile::quartic(double c) { return polynomial({0, 0, 0, 0, c / 12}); }

Profile Profile::expression(const std::string& text) {
  init_standard_symbols();
  Profile p;
  p.poly_ = false;
  p.e_ = parse_expr(text);
  p.var_atom_ = atom_of_coord("sigma");
  p.de_ = p.e_.partial(p.var_atom_);
  p.d2e_ = p.de_.partial(p.var_atom_);
  p.desc_ = "expr[" + text + "]";
  return p;
}

namespace {

double horner(const std::vector<double>& c, double s) {
  double v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * s + c[i];
  return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

}  // namespace

double Profile::f(double s) const {
  if (poly_) return horner(coeffs_, s);
  return eval_numeric(e_, {{var_atom_, s}}).coefficient(GKey{});
}
double Profile::df(double s) const {
  if (poly_) return horner(poly_derivative(coeffs_), s);
  return eval_numeric(de_, {{var_atom_, s}}).coefficient(GKey{});
}
double Profile::d2f(double s) const {
  if (poly_) return horner(poly_derivative(poly_derivative(coeffs_)), s);
  return eval_numeric(d2e_, {{var_atom_, s}}).coefficient(GKey{});
}

ProfilePair preset_pair(const std::string& name) {
  ProfilePair p;
  p.preset = name;
  if (name == "quadratic") {
    p.F1 = Profile::quadratic();
    p.F2 = Profile::quadratic();
  } else if (name == "cubic") {
    p.F1 = Profile::cubic();
    p.F2 = Profile::cubic();
  } else if (name == "quartic") {
    p.F1 = Profile::quartic();
    p.F2 = Profile::quartic();
  } else {
    throw std::domain_error("unknown preset: " + name);
  }
  return p;
}

ForwardPoint forward_map(double R, double S, const ProfilePair& p) {
  ForwardPoint out;
  out.x = R * p.F1.df(R) - p.F1.f(R) + S * p.F2.df(S) - p.F2.f(S);
  out.t = p.F1.df(R) + p.F2.df(S);
  return out;
}

double jacobian_det(double R, double S, const ProfilePair& p) {
  double f1 = p.F1.d2f(R), f2 = p.F2.d2f(S);
  return f1 * f2 * (R - S);
}

NewtonResult invert_map(double x, double t, const ProfilePair& p, double guessR,
                        double guessS, const NewtonOptions& opt) {
  double R = guessR, S = guessS;
  auto residual = [&](double r, double s, double& e1, double& e2) {
    ForwardPoint f = forward_map(r, s, p);
    e1 = f.x - x;
    e2 = f.t - t;
  };
  double e1, e2;
  residual(R, S, e1, e2);
  for (int it = 0; it < opt.max_iter; ++it) {
    double a = R * p.F1.d2f(R), b = S * p.F2.d2f(S);
    double c = p.F1.d2f(R), d = p.F2.d2f(S);
    double det = a * d - b * c;
    if (std::fabs(det) <= opt.delta)
      throw CatastropheError("singular Jacobian (|det| <= delta) at R=" +
                             std::to_string(R) + " S=" + std::to_string(S));
    double dR = -(d * e1 - b * e2) / det;
    double dS = -(-c * e1 + a * e2) / det;
    // step halving until the residual norm decreases
    double norm0 = std::hypot(e1, e2);
    double lambda = 1.0;
    double nR = R, nS = S, n1 = e1, n2 = e2;
    for (int h = 0; h <= opt.max_halvings; ++h) {
      nR = R + lambda * dR;
      nS = S + lambda * dS;
      residual(nR, nS, n1, n2);
      if (std::hypot(n1, n2) < norm0 || norm0 == 0) break;
      lambda /= 2;
    }
    R = nR;
    S = nS;
    e1 = n1;
    e2 = n2;
    double step = std::hypot(lambda * dR, lambda * dS);
    if (step <= opt.tol) {
      NewtonResult res;
      res.R = R;
      res.S = S;
      res.iterations = it + 1;
      res.det = jacobian_det(R, S, p);
      return res;
    }
  }
  throw NonConvergenceError("Newton did not converge in " +
                            std::to_string(opt.max_iter) + " iterations");
}

const GridNode& GridResult::at(int ix, int it) const {
  return nodes.at(static_cast<size_t>(it) * cfg.nx + ix);
}

double GridResult::max_residual() const {
  double m = 0;
  for (const auto& n : nodes) {
    if (n.status != NodeStatus::Converged) continue;
    if (std::isnan(n.residual_R) || std::isnan(n.residual_S)) continue;
    m = std::max(m, std::max(std::fabs(n.residual_R), std::fabs(n.residual_S)));
  }
  return m;
}

int GridResult::flagged_count() const {
  int c = 0;
  for (const auto& n : nodes)
    if (n.status != NodeStatus::Converged) ++c;
  return c;
}

GridResult evaluate_grid(const GridConfig& cfg, const ProfilePair& p) {
  if (cfg.nx < 2 || cfg.nt < 2) throw std::domain_error("grid counts must be >= 2");
  GridResult grid;
  grid.cfg = cfg;
  grid.nodes.resize(static_cast<size_t>(cfg.nx) * cfg.nt);
  double dx = (cfg.xmax - cfg.xmin) / (cfg.nx - 1);
  double dt = (cfg.tmax - cfg.tmin) / (cfg.nt - 1);

  double rowR = cfg.guessR, rowS = cfg.guessS;
  bool row_seeded = false;
  for (int it = 0; it < cfg.nt; ++it) {
    double gR = rowR, gS = rowS;
    bool seeded = row_seeded;
    for (int ix = 0; ix < cfg.nx; ++ix) {
      GridNode& node = grid.nodes[static_cast<size_t>(it) * cfg.nx + ix];
      node.x = cfg.xmin + ix * dx;
      node.t = cfg.tmin + it * dt;
      if (!seeded) {
        gR = cfg.guessR;
        gS = cfg.guessS;
      }
      try {
        NewtonResult res = invert_map(node.x, node.t, p, gR, gS, cfg.newton);
        node.R = res.R;
        node.S = res.S;
        node.det = res.det;
        node.status = std::fabs(res.det) <= cfg.newton.delta ? NodeStatus::Catastrophe
                                                             : NodeStatus::Converged;
        gR = res.R;
        gS = res.S;
        seeded = true;
        if (ix == 0) {
          rowR = res.R;
          rowS = res.S;
          row_seeded = true;
        }
      } catch (const CatastropheError&) {
        node.status = NodeStatus::Catastrophe;
      } catch (const NonConvergenceError&) {
        node.status = NodeStatus::NoConvergence;
      }
    }
  }

  // finite-difference residuals of R_t + S R_x and S_t + R S_x
  double nan = std::numeric_limits<double>::quiet_NaN();
  auto ok = [&](int ix, int it) {
    return ix >= 0 && ix < cfg.nx && it >= 0 && it < cfg.nt &&
           grid.at(ix, it).status == NodeStatus::Converged;
  };
  auto deriv = [&](auto value, int ix, int it, bool in_x, double h) -> double {
    int i = in_x ? ix : it;
    int n = in_x ? cfg.nx : cfg.nt;
    auto at = [&](int j) { return in_x ? value(j, it) : value(ix, j); };
    auto okj = [&](int j) { return in_x ? ok(j, it) : ok(ix, j); };
    if (i > 0 && i < n - 1 && okj(i - 1) && okj(i + 1))
      return (at(i + 1) - at(i - 1)) / (2 * h);
    if (i + 2 < n && okj(i + 1) && okj(i + 2))
      return (-3 * at(i) + 4 * at(i + 1) - at(i + 2)) / (2 * h);
    if (i - 2 >= 0 && okj(i - 1) && okj(i - 2))
      return (3 * at(i) - 4 * at(i - 1) + at(i - 2)) / (2 * h);
    return nan;
  };
  auto Rv = [&](int ix, int it) { return grid.at(ix, it).R; };
  auto Sv = [&](int ix, int it) { return grid.at(ix, it).S; };
  for (int it = 0; it < cfg.nt; ++it)
    for (int ix = 0; ix < cfg.nx; ++ix) {
      GridNode& node = grid.nodes[static_cast<size_t>(it) * cfg.nx + ix];
      if (node.status != NodeStatus::Converged) {
        node.residual_R = node.residual_S = nan;
        continue;
      }
      double Rt = deriv(Rv, ix, it, false, dt), Rx = deriv(Rv, ix, it, true, dx);
      double St = deriv(Sv, ix, it, false, dt), Sx = deriv(Sv, ix, it, true, dx);
      node.residual_R = Rt + node.S * Rx;
      node.residual_S = St + node.R * Sx;
    }
  return grid;
}

void write_grid_csv(const GridResult& grid, std::ostream& os) {
  os << "x,t,R,S,det,residual_R,residual_S,status\n";
  static const char* names[] = {"converged", "catastrophe", "no_convergence"};
  for (const auto& n : grid.nodes) {
    os << n.x << "," << n.t << "," << n.R << "," << n.S << "," << n.det << ","
       << n.residual_R << "," << n.residual_S << ","
       << names[static_cast<int>(n.status)] << "\n";
  }
}

std::vector<LocusSample> catastrophe_locus(const ProfilePair& p, double rmin,
                                           double rmax, double smin, double smax,
                                           int n, double delta) {
  std::vector<LocusSample> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LocusSample s;
      s.R = rmin + (rmax - rmin) * i / (n - 1);
      s.S = smin + (smax - smin) * j / (n - 1);
      s.det = jacobian_det(s.R, s.S, p);
      s.flagged = std::fabs(s.det) <= delta;
      out.push_back(s);
    }
  return out;
}

}  // namespace hydrosym

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hydrosym/hydro.hpp>

#include <cmath>
#include <random>

using namespace hydrosym;

TEST_CASE("forward map evaluates the hodograph formulas") {
  ProfilePair quad = preset_pair("quadratic");
  ForwardPoint f = forward_map(1, 2, quad);
  CHECK(f.x == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(f.t == doctest::Approx(3.0).epsilon(1e-15));
  // symmetric image
  ForwardPoint g = forward_map(2, 1, quad);
  CHECK(g.x == doctest::Approx(2.5));
  CHECK(g.t == doctest::Approx(3.0));
  // (0,0) with vanishing profiles maps to (0, F1'(0)+F2'(0))
  ProfilePair cub = preset_pair("cubic");
  ForwardPoint h = forward_map(0, 0, cub);
  CHECK(h.x == doctest::Approx(0.0));
  CHECK(h.t == doctest::Approx(0.0));
}

TEST_CASE("newton inversion and branch selection") {
  ProfilePair quad = preset_pair("quadratic");
  NewtonResult a = invert_map(2.5, 3.0, quad, 0.9, 2.1);
  CHECK(std::fabs(a.R - 1) < 1e-10);
  CHECK(std::fabs(a.S - 2) < 1e-10);
  NewtonResult b = invert_map(2.5, 3.0, quad, 2.1, 0.9);
  CHECK(std::fabs(b.R - 2) < 1e-10);
  CHECK(std::fabs(b.S - 1) < 1e-10);
  // linear F1 has identically singular Jacobian
  ProfilePair degenerate;
  degenerate.F1 = Profile::polynomial({0, 1});
  degenerate.F2 = Profile::quadratic();
  CHECK_THROWS_AS((void)invert_map(1.0, 2.0, degenerate, 1.0, 2.0), CatastropheError);
}

TEST_CASE("round trip within 1e-10 on quadratic and quartic presets") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  for (const char* preset : {"quadratic", "quartic"}) {
    ProfilePair pair = preset_pair(preset);
    int n = 0;
    double worst = 0;
    while (n < 1000) {
      double R = dist(rng), S = dist(rng);
      if (std::fabs(R - S) < 0.1) continue;
      ++n;
      ForwardPoint f = forward_map(R, S, pair);
      NewtonResult inv = invert_map(f.x, f.t, pair, R + 0.03, S - 0.03);
      worst = std::max(worst, std::max(std::fabs(inv.R - R), std::fabs(inv.S - S)));
    }
    INFO(preset, " worst error ", worst);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("jacobian determinant matches the analytic product formula") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  ProfilePair quart = preset_pair("quartic");
  for (int i = 0; i < 100; ++i) {
    double R = dist(rng), S = dist(rng) + 2.0;
    double det = jacobian_det(R, S, quart);
    double expect = (R * R) * (S * S) * (R - S);
    CHECK(det == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("expression profiles differentiate symbolically") {
  Profile p = Profile::expression("sigma^4*1/12");
  CHECK(p.f(2.0) == doctest::Approx(16.0 / 12));
  CHECK(p.df(2.0) == doctest::Approx(8.0 / 3));
  CHECK(p.d2f(2.0) == doctest::Approx(4.0));
  Profile tr = Profile::expression("exp(sigma) + sin(sigma)");
  CHECK(tr.d2f(0.3) == doctest::Approx(std::exp(0.3) - std::sin(0.3)).epsilon(1e-12));
}

TEST_CASE("grid solve: smoke test, residuals, flag band") {
  ProfilePair quad = preset_pair("quadratic");
  // 2x2 constant-ish region: all nodes converge
  GridConfig tiny;
  tiny.xmin = 2.55;
  tiny.xmax = 2.65;
  tiny.tmin = 2.9;
  tiny.tmax = 3.0;
  tiny.nx = tiny.nt = 2;
  tiny.guessR = 0.9;
  tiny.guessS = 2.1;
  GridResult small = evaluate_grid(tiny, quad);
  CHECK(small.flagged_count() == 0);

  // smooth window: residual small and 4x under mesh halving
  GridConfig cfg;
  cfg.xmin = 2.4965;
  cfg.xmax = 2.5035;
  cfg.tmin = 2.9965;
  cfg.tmax = 3.0035;
  cfg.nx = cfg.nt = 50;
  cfg.guessR = 0.9;
  cfg.guessS = 2.1;
  GridResult coarse = evaluate_grid(cfg, quad);
  CHECK(coarse.flagged_count() == 0);
  CHECK(coarse.max_residual() <= 1e-6);
  GridConfig cfg2 = cfg;
  cfg2.nx = 2 * cfg.nx - 1;
  cfg2.nt = 2 * cfg.nt - 1;
  GridResult fine = evaluate_grid(cfg2, quad);
  INFO("coarse ", coarse.max_residual(), " fine ", fine.max_residual());
  CHECK(coarse.max_residual() / fine.max_residual() >= 3.5);

  // a wide grid crossing the fold 4x = t^2 gets a contiguous flagged band
  GridConfig wide;
  wide.xmin = 2.0;
  wide.xmax = 3.0;
  wide.tmin = 2.8;
  wide.tmax = 3.2;
  wide.nx = wide.nt = 30;
  wide.guessR = 0.9;
  wide.guessS = 2.1;
  GridResult crossed = evaluate_grid(wide, quad);
  CHECK(crossed.flagged_count() > 0);
  // every flagged node lies beyond or near the fold: 4x <= t^2 + margin
  for (const auto& node : crossed.nodes) {
    if (node.status == NodeStatus::Converged) continue;
    CHECK(4 * node.x <= node.t * node.t + 0.15);
  }
  // and nodes comfortably inside the sheet are not flagged
  for (const auto& node : crossed.nodes) {
    if (4 * node.x >= node.t * node.t + 0.5) CHECK(node.status == NodeStatus::Converged);
  }
}

TEST_CASE("catastrophe locus") {
  ProfilePair quad = preset_pair("quadratic");
  auto locus = catastrophe_locus(quad, 0, 2, 0, 2, 41);
  for (const auto& s : locus) CHECK(s.flagged == (std::fabs(s.R - s.S) <= 1e-10));
  // quartic F1'' = R^2 adds the R = 0 line
  ProfilePair mixed;
  mixed.F1 = Profile::quartic();
  mixed.F2 = Profile::quadratic();
  auto locus2 = catastrophe_locus(mixed, -1, 1, 2, 3, 21);
  bool saw_r0 = false;
  for (const auto& s : locus2) {
    bool expect = std::fabs(s.R) <= 1e-3 || std::fabs(s.R - s.S) <= 1e-10;
    if (s.flagged) CHECK(expect);
    if (s.flagged && std::fabs(s.R) <= 1e-10) saw_r0 = true;
  }
  CHECK(saw_r0);
  // strictly positive second derivatives with R > S everywhere: empty locus
  auto locus3 = catastrophe_locus(preset_pair("quadratic"), 3, 4, 0, 1, 11);
  for (const auto& s : locus3) CHECK(!s.flagged);
}

// Command-line entry point: verification suites and the hodograph solver.

#include <hydrosym/catalog.hpp>
#include <hydrosym/conserve.hpp>
#include <hydrosym/hydro.hpp>
#include <hydrosym/parser.hpp>
#include <hydrosym/suites.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace hydrosym;

namespace {

struct CommonOpts {
  std::uint64_t seed = 42;
  std::string out;
  bool timings = false;
};

// HYDROSYM_OUT_DIR redirects relative --out paths to a default directory.
std::string resolve_out(const std::string& out) {
  if (out.empty() || out.front() == '/') return out;
  const char* dir = std::getenv("HYDROSYM_OUT_DIR");
  if (!dir || !*dir) return out;
  std::string d = dir;
  if (d.back() != '/') d += '/';
  return d + out;
}

int emit(const Report& rep, const CommonOpts& common) {
  if (!common.out.empty()) {
    std::string path = resolve_out(common.out);
    std::ofstream os(path);
    if (!os) {
      std::cerr << "cannot open output file: " << path << "\n";
      return 2;
    }
    rep.emit_jsonl(os, common.timings);
  } else {
    rep.emit_jsonl(std::cout, common.timings);
  }
  return rep.exit_code();
}

std::vector<PathPoint> load_path(const std::string& file) {
  std::ifstream is(file);
  if (!is) throw std::runtime_error("cannot open path file: " + file);
  nlohmann::json j;
  is >> j;
  std::vector<PathPoint> path;
  for (const auto& p : j) path.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return path;
}

SolutionFn bind_field(const SolutionRecord& rec, const std::string& field,
                      const std::map<std::string, Rational>& bindings) {
  auto it = rec.fields.find(field);
  if (it == rec.fields.end())
    throw std::runtime_error("record " + rec.id + " has no field " + field);
  SymExpr e = parse_expr(it->second, bindings);
  int xa = atom_of_coord("x"), ta = atom_of_coord("t");
  return [e, xa, ta](double x, double t) {
    return eval_numeric(e, {{xa, x}, {ta, t}}).coefficient(GKey{});
  };
}

ProfilePair make_pair(const std::string& preset, const std::string& coeffs1,
                      const std::string& coeffs2) {
  if (!coeffs1.empty() || !coeffs2.empty()) {
    auto parse_coeffs = [](const std::string& s) {
      std::vector<double> c;
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) c.push_back(std::stod(item));
      return c;
    };
    ProfilePair p;
    p.preset = "polynomial";
    p.F1 = Profile::polynomial(parse_coeffs(coeffs1.empty() ? coeffs2 : coeffs1));
    p.F2 = Profile::polynomial(parse_coeffs(coeffs2.empty() ? coeffs1 : coeffs2));
    return p;
  }
  return preset_pair(preset);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydrosym: symbolic-numeric verification for a hydrodynamic "
               "system in Riemann invariants and its N=1 extension"};
  app.require_subcommand(1);
  CommonOpts common;
  app.add_option("--seed", common.seed, "seed for every sampled point");
  app.add_option("--out", common.out, "write the JSON-lines report to a file");
  app.add_flag("--timings", common.timings, "include per-item timings in reports");

  // tables
  auto* tables = app.add_subcommand("tables", "structure tables vs the reference");
  std::string algebra = "all";
  tables->add_option("--algebra", algebra, "all | classical | susy");
  std::string reference = "paper";
  tables->add_option("--reference", reference, "reference to diff against (paper)");

  // symmetries
  app.add_subcommand("symmetries", "on-shell invariance of every generator");

  // superfield
  app.add_subcommand("superfield", "theta-expansion identities");

  // reduce
  app.add_subcommand("reduce", "reduced equations for every subalgebra");

  // solutions
  auto* solutions = app.add_subcommand("solutions", "verify the solution catalog");
  std::string id_filter, tier_filter;
  solutions->add_option("--id", id_filter, "verify a single record");
  solutions->add_option("--tier", tier_filter, "symbolic | numeric | modulo-ODE");

  // conservation
  auto* conservation = app.add_subcommand("conservation", "conservation-law divergences");
  int kmax = 10;
  std::string convention = "corrected";
  conservation->add_option("--kmax", kmax, "largest density degree");
  conservation->add_option("--convention", convention, "corrected | paper");

  // weierstrass
  auto* weier = app.add_subcommand("weierstrass", "Weierstrass immersion integrals");
  int wk = 1, wsteps = 10000;
  std::string wsolution = "as4", wpath, wbind = "C1=0,C2=0";
  weier->add_option("--k", wk, "conservation-law index");
  weier->add_option("--steps", wsteps, "midpoint subdivisions per segment");
  weier->add_option("--solution", wsolution, "catalog record providing R, S");
  weier->add_option("--path", wpath, "JSON file with [[x,t],...] vertices");
  weier->add_option("--bind", wbind, "comma-separated constant bindings");

  // hydro
  auto* hydro = app.add_subcommand("hydro", "general-integral numerics");
  hydro->require_subcommand(1);
  std::string preset = "quadratic", coeffs1, coeffs2, gridspec = "2,3,2.8,3.2,50,50";
  double hx = 2.5, ht = 3.0, gR = 0.9, gS = 2.1, tol = 1e-12;
  std::string hydro_out;
  auto* hinvert = hydro->add_subcommand("invert", "invert the hodograph map at (x,t)");
  auto* hgrid = hydro->add_subcommand("grid", "solve on a rectangular grid, write CSV");
  auto* hlocus = hydro->add_subcommand("locus", "sample the catastrophe locus");
  for (auto* sub : {hinvert, hgrid, hlocus}) {
    sub->add_option("--preset", preset, "quadratic | cubic | quartic");
    sub->add_option("--coeffs", coeffs1, "F1 polynomial coefficients c0,c1,...");
    sub->add_option("--coeffs2", coeffs2, "F2 polynomial coefficients");
    sub->add_option("--tol", tol, "Newton step tolerance");
    sub->add_option("--out", hydro_out, "output file (CSV)");
  }
  hinvert->add_option("--x", hx, "x coordinate");
  hinvert->add_option("--t", ht, "t coordinate");
  hinvert->add_option("--guess-R", gR, "initial guess for R");
  hinvert->add_option("--guess-S", gS, "initial guess for S");
  hgrid->add_option("--grid", gridspec, "xmin,xmax,tmin,tmax,nx,nt");
  hgrid->add_option("--guess-R", gR, "initial guess for R");
  hgrid->add_option("--guess-S", gS, "initial guess for S");
  std::string locus_range = "0,2,0,2";
  int locus_n = 101;
  hlocus->add_option("--range", locus_range, "rmin,rmax,smin,smax");
  hlocus->add_option("--n", locus_n, "samples per axis");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "dump the embedded catalog");
  std::string format = "json";
  catalog_cmd->add_option("--format", format, "json | markdown");

  // all
  app.add_subcommand("all", "every verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (tables->parsed()) return emit(run_tables_suite(algebra), common);
    if (app.got_subcommand("symmetries")) return emit(run_symmetries_suite(), common);
    if (app.got_subcommand("superfield")) return emit(run_superfield_suite(), common);
    if (app.got_subcommand("reduce")) return emit(run_reduce_suite(), common);
    if (solutions->parsed())
      return emit(run_solutions_suite(common.seed, id_filter, tier_filter), common);
    if (conservation->parsed()) {
      if (convention != "corrected" && convention != "paper") {
        std::cerr << "unknown convention: " << convention << "\n";
        return 2;
      }
      Report rep = run_conservation_suite(kmax, convention == "corrected");
      return emit(rep, common);
    }
    if (weier->parsed()) {
      if (wpath.empty() && wsolution == "as4")
        return emit(run_weierstrass_suite(wk, wsteps), common);
      std::map<std::string, Rational> bindings;
      std::stringstream ss(wbind);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        bindings[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
      }
      const auto& rec = Catalog::instance().solution(wsolution);
      SolutionFn R = bind_field(rec, "R", bindings);
      SolutionFn S = bind_field(rec, "S", bindings);
      std::vector<PathPoint> path =
          wpath.empty() ? std::vector<PathPoint>{{1, 1}, {2, 1}, {2, 2}} : load_path(wpath);
      ConservationPair pair = density_flux(wk, true);
      double chi = weierstrass_chi(pair, path, wsteps, R, S);
      // path-independence companion: reversed staircase through the same corners
      std::vector<PathPoint> alt = {path.front()};
      if (path.size() == 3) {
        alt.push_back({path.front().x, path.back().t});
        alt.push_back(path.back());
      } else {
        alt = path;
      }
      double chi2 = weierstrass_chi(pair, alt, wsteps, R, S);
      std::cout << "{\"chi\":" << chi << ",\"chi_alt\":" << chi2
                << ",\"difference\":" << chi - chi2 << "}\n";
      return 0;
    }
    if (hydro->parsed()) {
      ProfilePair pair = make_pair(preset, coeffs1, coeffs2);
      NewtonOptions opt;
      opt.tol = tol;
      if (hinvert->parsed()) {
        NewtonResult res = invert_map(hx, ht, pair, gR, gS, opt);
        std::cout << "{\"R\":" << res.R << ",\"S\":" << res.S
                  << ",\"iterations\":" << res.iterations << ",\"det\":" << res.det
                  << "}\n";
        return 0;
      }
      if (hgrid->parsed()) {
        GridConfig cfg;
        cfg.newton = opt;
        std::stringstream ss(gridspec);
        std::string item;
        std::vector<double> vals;
        while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
        if (vals.size() != 6) {
          std::cerr << "--grid expects xmin,xmax,tmin,tmax,nx,nt\n";
          return 2;
        }
        cfg.xmin = vals[0];
        cfg.xmax = vals[1];
        cfg.tmin = vals[2];
        cfg.tmax = vals[3];
        cfg.nx = static_cast<int>(vals[4]);
        cfg.nt = static_cast<int>(vals[5]);
        cfg.guessR = gR;
        cfg.guessS = gS;
        GridResult grid = evaluate_grid(cfg, pair);
        if (!hydro_out.empty()) {
          std::ofstream os(hydro_out);
          write_grid_csv(grid, os);
        } else {
          write_grid_csv(grid, std::cout);
        }
        std::cerr << "max residual (converged nodes): " << grid.max_residual()
                  << ", flagged nodes: " << grid.flagged_count() << "\n";
        return 0;
      }
      if (hlocus->parsed()) {
        std::stringstream ss(locus_range);
        std::string item;
        std::vector<double> vals;
        while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
        if (vals.size() != 4) {
          std::cerr << "--range expects rmin,rmax,smin,smax\n";
          return 2;
        }
        auto locus = catastrophe_locus(pair, vals[0], vals[1], vals[2], vals[3], locus_n);
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!hydro_out.empty()) {
          file.open(hydro_out);
          os = &file;
        }
        (*os) << "R,S,det,flagged\n";
        for (const auto& s : locus)
          (*os) << s.R << "," << s.S << "," << s.det << "," << (s.flagged ? 1 : 0) << "\n";
        return 0;
      }
    }
    if (catalog_cmd->parsed()) {
      if (format == "json")
        std::cout << Catalog::instance().emit_json() << "\n";
      else if (format == "markdown")
        std::cout << Catalog::instance().emit_markdown();
      else {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
      }
      return 0;
    }
    if (app.got_subcommand("all")) return emit(run_all(common.seed), common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

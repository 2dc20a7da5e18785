#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hydrosym/catalog.hpp>
#include <hydrosym/parser.hpp>
#include <hydrosym/symmetry.hpp>

using namespace hydrosym;

namespace {

SymExpr P(const std::string& s) {
  init_standard_symbols();
  return parse_expr(s);
}

const VectorField& G(const std::string& alg, const std::string& name) {
  return Catalog::instance().generator(alg, name);
}

}  // namespace

TEST_CASE("prolongation coefficients of the boost W") {
  PDESystem sys = classical_system();
  ProlongedField pw = prolong(G("classical", "W"), sys);
  int rt = AtomTable::instance().jet_atom(
      {CoordRegistry::instance().lookup("R"), {CoordRegistry::instance().lookup("t")}, false});
  int rx = AtomTable::instance().jet_atom(
      {CoordRegistry::instance().lookup("R"), {CoordRegistry::instance().lookup("x")}, false});
  REQUIRE(pw.jet_coeffs.count(rt));
  CHECK(is_zero_symbolic(pw.jet_coeffs.at(rt) + P("R_x")).zero);  // phi^R_t = -R_x
  CHECK(!pw.jet_coeffs.count(rx));                                // phi^R_x = 0
  // translations prolong to zero
  ProlongedField pt = prolong(G("classical", "T1"), sys);
  CHECK(pt.jet_coeffs.empty());
}

TEST_CASE("classical generators leave the system invariant; d_R does not") {
  PDESystem sys = classical_system();
  for (const auto& g : Catalog::instance().generators("classical")) {
    InvarianceReport rep = check_invariance(g, sys);
    INFO(g.name, " residuals: ", rep.residuals.size());
    CHECK(rep.pass);
  }
  VectorField dr;
  dr.name = "d_R";
  dr.parity = Parity::Even;
  dr.coeffs[CoordRegistry::instance().lookup("R")] = SymExpr::one();
  InvarianceReport bad = check_invariance(dr, sys);
  CHECK(!bad.pass);
  CHECK(bad.witness.find("S_x") != std::string::npos);  // fails on S_t + R S_x
}

TEST_CASE("susy generators leave the extension invariant; classical J fails") {
  PDESystem sys = susy_system();
  SuiteReport suite = verify_generator_suite(sys, Catalog::instance().generators("susy"));
  CHECK(suite.pass);
  CHECK(suite.items.size() == 8);
  InvarianceReport j = check_invariance(G("classical", "J"), sys);
  CHECK(!j.pass);
}

TEST_CASE("bracket closure: brackets of verified symmetries verify") {
  for (const char* alg : {"classical", "susy"}) {
    PDESystem sys = alg == std::string("classical") ? classical_system() : susy_system();
    const auto& gens = Catalog::instance().generators(alg);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        VectorField br = bracket(gens[i], gens[j]);
        if (br.is_zero()) continue;
        INFO("[", gens[i].name, ",", gens[j].name, "]");
        CHECK(check_invariance(br, sys).pass);
      }
  }
}

TEST_CASE("rational rescaling preserves the verdict") {
  PDESystem sys = classical_system();
  for (const char* name : {"W", "J", "M2"}) {
    VectorField scaled = scale(P("-7/3"), G("classical", name));
    CHECK(check_invariance(scaled, sys).pass);
  }
  VectorField dr;
  dr.name = "d_R";
  dr.parity = Parity::Even;
  dr.coeffs[CoordRegistry::instance().lookup("R")] = P("5");
  CHECK(!check_invariance(dr, sys).pass);
}

TEST_CASE("subalgebra representatives are symmetries of their systems") {
  // spot-check materialized combinations, including odd-parameter ones
  PDESystem classical = classical_system();
  CHECK(check_invariance(Catalog::instance().subalgebra("L5").materialize(), classical).pass);
  CHECK(check_invariance(
            Catalog::instance().subalgebra("L10").materialize({{"k", Rational(2)}}),
            classical)
            .pass);
  PDESystem susy = susy_system();
  CHECK(check_invariance(Catalog::instance().subalgebra("SL18").materialize(), susy).pass);
  CHECK(check_invariance(
            Catalog::instance().subalgebra("SL28").materialize({{"eps", Rational(-1)}}),
            susy)
            .pass);
}

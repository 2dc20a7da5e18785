#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hydrosym/parser.hpp>
#include <hydrosym/reduction.hpp>

using namespace hydrosym;

namespace {

SolutionOutcome run(const std::string& id) {
  return verify_solution(Catalog::instance().solution(id));
}

}  // namespace

TEST_CASE("symbolic-tier records") {
  for (const char* id : {"as1", "as2", "as4", "as11", "solution1", "solution2B",
                         "solution2C", "solution2D", "solution3", "solution5A",
                         "solution5B", "solution6A", "solution6B", "solution18",
                         "solution20", "solution22", "solution23", "solution26",
                         "solution27"}) {
    SolutionOutcome out = run(id);
    INFO(id, ": ", out.witness);
    CHECK((out.status == "pass" || out.status == "erratum"));
  }
}

TEST_CASE("forced odd-product constraints verify symbolically") {
  for (const char* id : {"solution7A", "solution8A", "solution9", "solution11",
                         "solution12", "solution13"}) {
    SolutionOutcome out = run(id);
    INFO(id, ": ", out.witness);
    CHECK(out.status == "erratum");  // corrected relations, documented
  }
}

TEST_CASE("numeric-tier records") {
  for (const char* id : {"as3", "as7a", "as7b", "solution7E", "solution7I",
                         "solution8E", "solution8I", "solution14", "solution24D",
                         "solution25", "solution28"}) {
    SolutionOutcome out = run(id);
    INFO(id, ": ", out.witness);
    CHECK((out.status == "pass" || out.status == "erratum"));
  }
}

TEST_CASE("modulo-ODE records") {
  for (const char* id : {"as5", "as6", "as9", "as10", "as12", "as13", "solution4"}) {
    SolutionOutcome out = run(id);
    INFO(id, ": ", out.witness);
    CHECK((out.status == "pass" || out.status == "erratum"));
  }
}

TEST_CASE("negative controls: printed errata really fail") {
  // as3 exactly as printed (radical coefficient 1/2 instead of 1/8)
  SolutionRecord printed = Catalog::instance().solution("as3");
  printed.id = "as3-printed";
  printed.erratum.clear();
  printed.fields["R"] =
      "x/t + (C2/(2*t^2) - C1*x/(2*t)) * (-1/4*C1*x*t + 1/4*C2 + "
      "sqrt(C1^2*x^2*t^2 - 2*C1*C2*x*t + C2^2 + 16*x*t))";
  CHECK(verify_solution(printed).status == "fail");

  // solution7A with the printed K0*L0 = 0 side condition
  SolutionRecord s7 = Catalog::instance().solution("solution7A");
  s7.id = "solution7A-printed";
  s7.erratum.clear();
  s7.constraints.clear();
  s7.constraints.push_back({"pair_zero", {"K0_", "L0_"}, ""});
  CHECK(verify_solution(s7).status == "fail");

  // solution11 without the forced product relation
  SolutionRecord s11 = Catalog::instance().solution("solution11");
  s11.id = "solution11-unconstrained";
  s11.erratum.clear();
  s11.constraints.clear();
  CHECK(verify_solution(s11).status == "fail");

  // as5 with the printed quadrature's implicit derivative:
  // from (1-s^2) w + s^2 = (C0 sigma + K0^2 + 1)/2 with s = sin(F),
  // w = sqrt(K0^2 - s^2):  F' = C0 w / (2 s c (2w - 2w^2 - 1 + s^2))
  SolutionRecord s5 = Catalog::instance().solution("as5");
  s5.id = "as5-printed";
  s5.erratum.clear();
  s5.rewrites[0].value =
      "C0*pow(K0^2 - sin(F)^2, 1/2)*pow(2*sin(F)*cos(F)*(2*pow(K0^2 - sin(F)^2, 1/2) "
      "- 2*(K0^2 - sin(F)^2) - 1 + sin(F)^2), -1)";
  CHECK(verify_solution(s5).status == "fail");
}

TEST_CASE("translation invariance of the verifier (exp(eps T1) spot check)") {
  // applying x -> x - 1 to as4 yields another verified record
  SolutionRecord rec = Catalog::instance().solution("as4");
  rec.id = "as4-shifted";
  for (auto& [f, text] : rec.fields) {
    SymExpr e = parse_expr(text);
    SymExpr shifted = e.substitute({{atom_of_coord("x"), parse_expr("x - 1")}});
    text = shifted.str();
  }
  CHECK(verify_solution(rec).status == "pass");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hydrosym/parser.hpp>
#include <hydrosym/superfield.hpp>

#include <random>

using namespace hydrosym;

namespace {

SymExpr P(const std::string& s) {
  init_standard_symbols();
  return parse_expr(s);
}

bool zeq(const SymExpr& a, const SymExpr& b) { return is_zero_symbolic(a - b).zero; }
bool szero(const SuperExpr& e) { return e.body.is_zero() && e.soul.is_zero(); }

// random component pair (a + theta b) over a few atoms, mixed parity allowed
SuperExpr random_super(std::mt19937_64& rng) {
  static const std::vector<std::string> evens = {"R", "S", "x", "t", "R_x", "S_x"};
  static const std::vector<std::string> odds = {"xi", "psi", "xi_x", "psi_x"};
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<size_t> pe(0, evens.size() - 1);
  std::uniform_int_distribution<size_t> po(0, odds.size() - 1);
  SymExpr body = SymExpr::constant(Rational(coeff(rng))) * P(evens[pe(rng)]) +
                 SymExpr::constant(Rational(coeff(rng))) * P(odds[po(rng)]);
  SymExpr soul = SymExpr::constant(Rational(coeff(rng))) * P(evens[pe(rng)]) +
                 SymExpr::constant(Rational(coeff(rng))) * P(odds[po(rng)]);
  return {body, soul};
}

}  // namespace

TEST_CASE("covariant derivative basics") {
  CHECK(covariant_D(theta_super()).body.str() == "1");
  CHECK(covariant_D(theta_super()).soul.is_zero());
  // D(Psi) with Psi = psi + theta S -> S + theta psi_x
  SuperExpr dpsi = covariant_D(superfield_Psi());
  CHECK(zeq(dpsi.body, P("S")));
  CHECK(zeq(dpsi.soul, P("psi_x")));
  // Q(theta) = -1
  CHECK(susy_Q(theta_super()).body.str() == "-1");
}

TEST_CASE("operator identities on random superexpressions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    SuperExpr f = random_super(rng);
    SuperExpr d2 = covariant_D(covariant_D(f));
    SuperExpr fx = sderiv(f, "x");
    CHECK(szero(d2 - fx));  // D^2 = d_x
    SuperExpr q2 = susy_Q(susy_Q(f));
    CHECK(szero(q2 - (-fx)));  // Q^2 = -d_x
    SuperExpr anti = susy_Q(covariant_D(f)) + covariant_D(susy_Q(f));
    CHECK(szero(anti));  // {Q, D} = 0
  }
}

TEST_CASE("products") {
  // (S + theta psi_x)(xi_x + theta R_x) = S xi_x + theta(psi_x xi_x + S R_x)
  SuperExpr lhs = smul({P("S"), P("psi_x")}, {P("xi_x"), P("R_x")});
  CHECK(zeq(lhs.body, P("S*xi_x")));
  CHECK(zeq(lhs.soul, P("psi_x*xi_x + S*R_x")));
  CHECK(szero(smul(theta_super(), theta_super())));
  SuperExpr f = {P("xi"), P("R")};
  CHECK(szero(smul({P("1"), SymExpr()}, f) - f));
}

TEST_CASE("decomposition matches the component systems") {
  // general (a, b): five random rational pairs beyond the symbolic check
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    Rational a(num(rng), 2), b(num(rng), 3);
    DecomposedSystem d = decompose_system(SymExpr::constant(a), SymExpr::constant(b));
    std::map<std::string, Rational> bind = {{"a", a}, {"b", b}};
    CHECK(zeq(d.eq1_soul,
              parse_expr("R_t + S*R_x + a*psi_x*xi_x + (a-1)*psi*xi_xx", bind)));
    CHECK(zeq(d.eq1_body, parse_expr("xi_t + a*S*xi_x + (1-a)*psi*R_x", bind)));
    CHECK(zeq(d.eq2_soul,
              parse_expr("S_t + R*S_x + b*xi_x*psi_x + (b-1)*xi*psi_xx", bind)));
    CHECK(zeq(d.eq2_body, parse_expr("psi_t + b*R*psi_x + (1-b)*xi*S_x", bind)));
  }
}

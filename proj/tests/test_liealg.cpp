#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hydrosym/catalog.hpp>
#include <hydrosym/parser.hpp>

using namespace hydrosym;

namespace {

const VectorField& G(const std::string& alg, const std::string& name) {
  return Catalog::instance().generator(alg, name);
}

bool same_field(const VectorField& a, const VectorField& b) {
  return (a - b).is_zero();
}

}  // namespace

TEST_CASE("single bracket spot checks") {
  // [W, J] = -M2
  CHECK(same_field(bracket(G("classical", "W"), G("classical", "J")),
                   -G("classical", "M2")));
  // [D1, P0] = -3 P0
  CHECK(same_field(bracket(G("susy", "D1"), G("susy", "P0")),
                   scale(parse_expr("-3"), G("susy", "P0"))));
  // {Y1, Y2} = 0 (odd-odd anticommutator)
  CHECK(bracket(G("susy", "Y1"), G("susy", "Y2")).is_zero());
  // [D1, B] = B
  CHECK(same_field(bracket(G("susy", "D1"), G("susy", "B")), G("susy", "B")));
}

TEST_CASE("structure tables match the reference entry-for-entry") {
  for (const char* alg : {"classical", "susy"}) {
    StructureTable computed = structure_table(Catalog::instance().generators(alg));
    const StructureTable& ref = Catalog::instance().reference_table(alg);
    REQUIRE(computed.names == ref.names);
    for (size_t i = 0; i < computed.names.size(); ++i)
      for (size_t j = 0; j < computed.names.size(); ++j) {
        INFO(alg, " [", computed.names[i], ",", computed.names[j], "]");
        CHECK(computed.entries[i][j] == ref.entries[i][j]);
      }
  }
}

TEST_CASE("graded antisymmetry and Jacobi for all triples") {
  for (const char* alg : {"classical", "susy"}) {
    const auto& gens = Catalog::instance().generators(alg);
    for (const auto& A : gens)
      for (const auto& B : gens) {
        // graded antisymmetry: [A,B] = [B,A] for odd-odd, else [A,B] = -[B,A]
        VectorField lhs = bracket(A, B);
        VectorField rhs = bracket(B, A);
        bool both_odd = A.parity == Parity::Odd && B.parity == Parity::Odd;
        if (both_odd)
          CHECK((lhs - rhs).is_zero());
        else
          CHECK((lhs + rhs).is_zero());
      }
    auto sgn = [](Parity p) { return p == Parity::Odd ? 1 : 0; };
    for (const auto& A : gens)
      for (const auto& B : gens)
        for (const auto& C : gens) {
          // graded Jacobi: [A,[B,C]] = [[A,B],C] + (-1)^{|A||B|}[B,[A,C]]
          VectorField lhs = bracket(A, bracket(B, C));
          VectorField rhs = bracket(bracket(A, B), C);
          VectorField cross = bracket(B, bracket(A, C));
          if (sgn(A.parity) * sgn(B.parity)) cross = -cross;
          CHECK((lhs - (rhs + cross)).is_zero());
        }
  }
}

TEST_CASE("parity consistency of all generators") {
  for (const char* alg : {"classical", "susy"})
    for (const auto& g : Catalog::instance().generators(alg)) CHECK(parity_consistent(g));
}

TEST_CASE("structure constants solve in the span; non-closure detected") {
  // d_R alone does not close with the classical algebra
  std::vector<VectorField> gens = Catalog::instance().generators("classical");
  VectorField bad;
  bad.name = "d_R";
  bad.parity = Parity::Even;
  bad.coeffs[CoordRegistry::instance().lookup("R")] = SymExpr::one();
  gens.push_back(bad);
  CHECK_THROWS_AS((void)structure_table(gens), NonClosureError);
  // a single translation spans a 1x1 zero table
  StructureTable single = structure_table({Catalog::instance().generator("classical", "T1")});
  CHECK(single.entries[0][0] == std::vector<Rational>{Rational(0)});
}

TEST_CASE("adjoint orbits") {
  const auto& T1 = G("classical", "T1");
  const auto& M1 = G("classical", "M1");
  // Ad_{exp(eps T1)}(M1) = M1 + eps T1, terminating at first order
  VectorField orbit = adjoint_orbit(T1, M1, Rational(1));
  CHECK(same_field(orbit, M1 + T1));
  VectorField orbit23 = adjoint_orbit(T1, M1, rational(2, 3));
  CHECK(same_field(orbit23, M1 + scale(parse_expr("2/3"), T1)));
  // Ad_{exp(eps B)}(D1) = D1 - eps B
  VectorField orbitB = adjoint_orbit(G("susy", "B"), G("susy", "D1"), Rational(1));
  CHECK(same_field(orbitB, G("susy", "D1") - G("susy", "B")));
  // eps = 0 is the identity
  CHECK(same_field(adjoint_orbit(T1, M1, Rational(0)), M1));
  // ad_{M2}(W) = -2W rescales forever: no termination within any bound
  CHECK_THROWS(adjoint_orbit(G("classical", "M2"), G("classical", "W"), Rational(1), 8));
  // ... unless the caller accepts an explicit truncation
  VectorField truncated =
      adjoint_orbit(G("classical", "M2"), G("classical", "W"), Rational(1), 8, true);
  CHECK(!truncated.is_zero());
}

TEST_CASE("ideals and solvability") {
  const auto& cat = Catalog::instance();
  std::vector<VectorField> classical = cat.generators("classical");
  CHECK(is_ideal(classical, {G("classical", "T1"), G("classical", "T0")}));
  std::vector<VectorField> susy = cat.generators("susy");
  CHECK(is_ideal(susy, {G("susy", "Y1"), G("susy", "Y2")}));
  auto depth = solvable_depth(susy);
  REQUIRE(depth.has_value());
  CHECK(*depth >= 1);
  // the classical algebra contains sl(2)-like {M2, W, J} and is not solvable
  CHECK(!solvable_depth(classical).has_value());
}

TEST_CASE("subalgebra catalog lookups") {
  const auto& cat = Catalog::instance();
  // L5 = W - J
  VectorField l5 = cat.subalgebra("L5").materialize();
  CHECK(same_field(l5, G("classical", "W") - G("classical", "J")));
  // SL28 = B + eps P0 + eta1 Y1 + eta2 Y2 at eps = 1
  VectorField sl28 = cat.subalgebra("SL28").materialize({{"eps", Rational(1)}});
  VectorField expect = G("susy", "B") + G("susy", "P0") +
                       scale(parse_expr("eta1"), G("susy", "Y1")) +
                       scale(parse_expr("eta2"), G("susy", "Y2"));
  CHECK(same_field(sl28, expect));
  CHECK(parity_consistent(sl28));
  CHECK_THROWS((void)cat.subalgebra("L0"));
  // counts as listed
  int classical_count = 0, susy_count = 0;
  for (const auto& s : cat.subalgebras())
    (s.algebra == "classical" ? classical_count : susy_count)++;
  CHECK(classical_count == 13);
  CHECK(susy_count == 28);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hydrosym/grassmann.hpp>
#include <hydrosym/symexpr.hpp>

#include <random>

using namespace hydrosym;

namespace {

int gen(const char* name) { return GeneratorRegistry::instance().register_generator(name); }

GrassmannElement g1(const char* name) {
  return GrassmannElement::generator(gen(name));
}
GrassmannElement q(long long n, long long d = 1) {
  return GrassmannElement::scalar(rational(n, d));
}

ExactGrassmann random_element(std::mt19937_64& rng, const std::vector<int>& gens,
                              int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pick(0, 1);
  ExactGrassmann e;
  for (int i = 0; i < terms; ++i) {
    GKey key;
    for (int g : gens)
      if (pick(rng)) key.push_back(g);
    e.accumulate(key, Rational(coeff(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("addition merges and prunes") {
  init_standard_symbols();
  auto eta1 = g1("eta1");
  CHECK(gadd(eta1, eta1).str() == "2*eta1");
  CHECK(gadd(eta1, GrassmannElement(ExactGrassmann() - eta1.exact())).is_zero());
  auto one_plus = gadd(q(1), gmul(g1("eta1"), g1("eta2")));
  CHECK(gadd(one_plus, q(2)).str() == "3 + 1*eta1*eta2");
}

TEST_CASE("multiplication anticommutes and annihilates") {
  auto eta1 = g1("eta1"), eta2 = g1("eta2");
  CHECK(gmul(eta2, eta1).exact().coefficient({gen("eta1"), gen("eta2")}) == -1);
  // (1 + eta1)^2 = 1 + 2 eta1
  auto e = gadd(q(1), eta1);
  auto sq = gmul(e, e);
  CHECK(sq.exact().coefficient({}) == 1);
  CHECK(sq.exact().coefficient({gen("eta1")}) == 2);
  // eta1 eta2 * eta1 = 0
  CHECK(gmul(gmul(eta1, eta2), eta1).is_zero());
}

TEST_CASE("parity classification") {
  auto eta1 = g1("eta1"), eta2 = g1("eta2");
  CHECK(parity(eta1) == Parity::Odd);
  CHECK(parity(gmul(eta1, eta2)) == Parity::Even);
  CHECK(parity(gadd(q(1), eta1)) == Parity::Mixed);
  CHECK(parity(GrassmannElement()) == Parity::Even);
}

TEST_CASE("kind mismatch raises") {
  auto exact = q(1);
  auto flt = GrassmannElement::scalar(1.0);
  CHECK_THROWS_AS((void)gadd(exact, flt), KindMismatchError);
  CHECK_THROWS_AS((void)gmul(exact, flt), KindMismatchError);
}

TEST_CASE("substitution") {
  auto eta1 = g1("eta1"), eta2 = g1("eta2");
  // eta2 <- eta1 makes eta1 eta2 vanish
  std::map<int, GrassmannElement> sub1 = {{gen("eta2"), eta1}};
  CHECK(gsubstitute(gmul(eta1, eta2), sub1).is_zero());
  // eta1 <- -eta1 in 3 eta1
  std::map<int, GrassmannElement> sub2 = {
      {gen("eta1"), GrassmannElement(ExactGrassmann() - eta1.exact())}};
  CHECK(gsubstitute(gmul(q(3), eta1), sub2).str() == "-3*eta1");
  // eta1 <- eta2 in eta1 + eta2
  std::map<int, GrassmannElement> sub3 = {{gen("eta1"), eta2}};
  CHECK(gsubstitute(gadd(eta1, eta2), sub3).str() == "2*eta2");
  // even-valued substitution is a parity error
  std::map<int, GrassmannElement> bad = {{gen("eta1"), q(2)}};
  CHECK_THROWS_AS((void)gsubstitute(eta1, bad), ParityError);
}

TEST_CASE("algebra laws on random elements") {
  std::mt19937_64 rng(7);
  std::vector<int> gens = {gen("eta1"), gen("eta2"), gen("K_"), gen("L_")};
  for (int trial = 0; trial < 50; ++trial) {
    ExactGrassmann a = random_element(rng, gens, 3);
    ExactGrassmann b = random_element(rng, gens, 3);
    ExactGrassmann c = random_element(rng, gens, 3);
    CHECK(((a * b) * c - a * (b * c)).is_zero());
    CHECK((a * (b + c) - (a * b + a * c)).is_zero());
  }
}

TEST_CASE("graded commutativity on homogeneous elements") {
  std::mt19937_64 rng(11);
  std::vector<int> gens = {gen("eta1"), gen("eta2"), gen("K_")};
  for (int trial = 0; trial < 60; ++trial) {
    ExactGrassmann a = random_element(rng, gens, 2);
    ExactGrassmann b = random_element(rng, gens, 2);
    auto homogeneous = [](const ExactGrassmann& e, Parity p) {
      ExactGrassmann h;
      for (const auto& [k, c] : e.terms())
        if ((k.size() % 2 == 0) == (p == Parity::Even)) h.accumulate(k, c);
      return h;
    };
    for (Parity pa : {Parity::Even, Parity::Odd})
      for (Parity pb : {Parity::Even, Parity::Odd}) {
        ExactGrassmann ha = homogeneous(a, pa), hb = homogeneous(b, pb);
        int sign = (pa == Parity::Odd && pb == Parity::Odd) ? -1 : 1;
        ExactGrassmann lhs = ha * hb;
        ExactGrassmann rhs = hb * ha;
        if (sign < 0) rhs = ExactGrassmann() - rhs;
        CHECK((lhs - rhs).is_zero());
      }
  }
}

TEST_CASE("nilpotency and saturation") {
  std::vector<int> gens = {gen("theta"), gen("eta1"), gen("eta2"), gen("K_")};
  for (int g : gens) {
    auto e = ExactGrassmann::generator(g);
    CHECK((e * e).is_zero());
  }
  // with N distinct generators any product of N+1 odd factors vanishes:
  // a product of 5 factors drawn from 4 generators repeats one of them
  ExactGrassmann prod(Rational(1));
  for (int i = 0; i < 5; ++i) prod = prod * ExactGrassmann::generator(gens[i % 4]);
  CHECK(prod.is_zero());
}

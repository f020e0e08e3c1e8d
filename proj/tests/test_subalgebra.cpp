#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "omalg/series.hpp"
#include "omalg/subalgebra.hpp"

using namespace omalg;

namespace {

Monomial x(int i) { return Monomial::leaf(i); }
Monomial nu2(const Monomial& a, const Monomial& b) { return Monomial::app(2, 1, {a, b}); }

const OrderingSpec kLex{ChildRule::Lex, {}};
const OmegaSignature kBinary = OmegaSignature::binary();

Series catalan_series(int trunc) {
  Series s(trunc);
  for (int k = 1; k <= trunc; ++k) s.set(k, Rat(catalan(k)));
  return s;
}

}  // namespace

TEST_CASE("elementary transformations remove dependent generators") {
  Monomial xx = nu2(x(1), x(1));
  Polynomial pxx = Polynomial::monomial(xx);

  auto r1 = nielsen_reduce({pxx, Polynomial::monomial(nu2(xx, xx))}, kLex);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == pxx);

  auto r2 = nielsen_reduce({Polynomial::monomial(x(1))}, kLex);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == Polynomial::monomial(x(1)));

  Polynomial a = Polynomial::monomial(nu2(xx, x(1)));
  Polynomial b = Polynomial::monomial(nu2(x(1), xx));
  // the dependent set collapses to two free generators of the same subalgebra
  auto r3 = nielsen_reduce({a, b, a + b}, kLex);
  REQUIRE(r3.size() == 2);
  CHECK(leading_term(r3[0], kLex).first != leading_term(r3[1], kLex).first);
  CHECK(brute_force_subalgebra_hilbert(kBinary, r3, 6) ==
        brute_force_subalgebra_hilbert(kBinary, {a, b}, 6));

  Polynomial mixed = pxx + Polynomial::monomial(x(1));
  CHECK_THROWS_AS(nielsen_reduce({mixed}, kLex), std::domain_error);
}

TEST_CASE("free generator series") {
  // even part of the Catalan series: free generators at 1, 4, 32, 320
  Series even(8);
  for (int k = 2; k <= 8; k += 2) even.set(k, Rat(catalan(k)));
  Series g = free_gen_series(even, kBinary);
  CHECK(g[2] == 1);
  CHECK(g[4] == 4);
  CHECK(g[6] == 32);
  CHECK(g[8] == 320);
  for (int k = 1; k <= 7; k += 2) CHECK(g[k] == 0);

  CHECK(free_gen_series(catalan_series(8), kBinary) == Series::monomial(1, Rat(1), 8));

  Series bad(3);
  bad.set(0, Rat(1));
  CHECK_THROWS_AS(free_gen_series(bad, kBinary), std::domain_error);
}

TEST_CASE("brute-force dimension oracle") {
  Monomial xx = nu2(x(1), x(1));
  Series h = brute_force_subalgebra_hilbert(kBinary, {Polynomial::monomial(xx)}, 8);
  // free on one degree-2 generator: Catalan numbers on even degrees
  for (int k = 1; k <= 8; ++k) CHECK(h[k] == (k % 2 ? Rat(0) : Rat(catalan(k / 2))));

  Series full = brute_force_subalgebra_hilbert(kBinary, {Polynomial::monomial(x(1))}, 7);
  CHECK(full == catalan_series(7));

  // products (odd) * (odd) of degree <= 6 generate the even part
  std::vector<Polynomial> gens;
  for (int a = 1; a <= 5; a += 2)
    for (int b = 1; a + b <= 6; b += 2)
      for (const Monomial& u : enumerate_monomials(kBinary, 1, a))
        for (const Monomial& v : enumerate_monomials(kBinary, 1, b))
          gens.push_back(Polynomial::monomial(nu2(u, v)));
  Series evens = brute_force_subalgebra_hilbert(kBinary, gens, 6);
  CHECK(evens[2] == 1);
  CHECK(evens[4] == 5);
  CHECK(evens[6] == 42);
  CHECK(evens[3] == 0);
}

TEST_CASE("freeness certificate for reduced generator sets") {
  std::mt19937 rng(77031);
  std::uniform_int_distribution<int> degd(2, 4);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    int count = 2 + trial % 3;
    for (int i = 0; i < count; ++i) {
      int deg = degd(rng);
      Polynomial f;
      for (const Monomial& m : enumerate_monomials(kBinary, 1, deg)) f.add_term(m, Rat(coeff(rng)));
      if (!f.is_zero()) gens.push_back(f);
    }
    std::vector<Polynomial> reduced = nielsen_reduce(gens, kLex);
    // the subalgebra is unchanged
    Series before = brute_force_subalgebra_hilbert(kBinary, gens, 8);
    Series after = brute_force_subalgebra_hilbert(kBinary, reduced, 8);
    CHECK(before == after);
    // quantitative freeness: G(Omega, H) - H + G(Y) = 0
    Series gy(8);
    for (const Polynomial& f : reduced) {
      int d = f.homogeneous_degree();
      if (d <= 8) gy.set(d, gy[d] + 1);
    }
    CHECK((apply_signature(kBinary, after) - after + gy).is_zero());
    // and the output leading terms are mutually independent
    std::vector<Polynomial> twice = nielsen_reduce(reduced, kLex);
    CHECK(twice.size() == reduced.size());
  }
}

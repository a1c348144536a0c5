#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revnf/errors.hpp"
#include "revnf/poly.hpp"

using namespace revnf;

namespace {

Polynomial P(const char* s, std::size_t n) { return Polynomial::parse(s, nvars_for(n)); }

Polynomial random_poly(std::mt19937& rng, std::size_t n, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Polynomial p(nvars_for(n));
  for (int t = nterms(rng); t > 0; --t) {
    auto monos = monomials_of_degree(nvars_for(n), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    p.add_term(monos[pick(rng)], Coefficient(Rational(coef(rng), 2), Rational(coef(rng))));
  }
  return p;
}

LinearMap random_compatible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-2, 2);
  const std::size_t nv = nvars_for(n);
  LinearMap a = LinearMap::zero(nv);
  // x rows real; z rows arbitrary, zb rows the conjugates.
  for (std::size_t r = 0; r < nv; ++r) {
    if (r >= 2 && r % 2 == 1) continue;
    for (std::size_t c = 0; c < nv; ++c) {
      Coefficient v(coef(rng), r < 2 ? 0 : coef(rng));
      if (r < 2) {
        if (c >= 2 && c % 2 == 1) continue;
        Coefficient w(coef(rng), c < 2 ? 0 : coef(rng));
        a.set(r, c, w);
        a.set(r, conj_var(c), w.conj());
      } else {
        a.set(r, c, v);
        a.set(conj_var(r), conj_var(c), v.conj());
      }
    }
  }
  return a;
}

}  // namespace

TEST_CASE("coefficient arithmetic is exact") {
  Coefficient a(Rational(1, 2), Rational(3));
  Coefficient b(Rational(-2, 4), Rational(1, 3));
  CHECK(b.re() == Rational(-1, 2));
  CHECK((a * b).re() == Rational(-1, 4) - 1);
  CHECK((a / a).is_one());
  CHECK(a.conj().conj() == a);
  CHECK(Coefficient::imaginary_unit() * Coefficient::imaginary_unit() == Coefficient(-1));
  CHECK(Coefficient(Rational(1, 2), -1).to_string() == "(1/2-i)");
  CHECK(Coefficient(0, Rational(-3, 2)).to_string() == "-3/2*i");
}

TEST_CASE("add, mul, scale") {
  CHECK(add(P("x1", 1), P("-x1", 1)).is_zero());
  Polynomial z1 = P("z1", 1);
  Polynomial zb1 = P("zb1", 1);
  Polynomial prod = mul(z1, zb1);
  REQUIRE(prod.size() == 1);
  CHECK(prod.leading_monomial().exponents() == std::vector<int>{0, 0, 1, 1});
  CHECK(scale(Coefficient(0), z1).is_zero());
  CHECK(scale(Coefficient(2), z1) == P("2*z1", 1));
}

TEST_CASE("resonant relation v4^2 + v5^2 = v2^n2 v3^n1") {
  for (auto [n1, n2] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
    const std::size_t nv = nvars_for(3);
    Polynomial w = Polynomial::variable(nv, var_z(1)).pow(n2) * Polynomial::variable(nv, var_zb(2)).pow(n1);
    Polynomial v4 = Coefficient(Rational(1, 2)) * (w + w.conj());
    Polynomial v5 = Coefficient(0, Rational(-1, 2)) * (w - w.conj());
    CHECK(v4.is_real());
    CHECK(v5.is_real());
    Polynomial v2 = P("z1*zb1", 3);
    Polynomial v3 = P("z2*zb2", 3);
    CHECK(v4 * v4 + v5 * v5 == v2.pow(n2) * v3.pow(n1));
  }
}

TEST_CASE("homogeneous_component") {
  Polynomial p = P("x1 + x1^2", 1);
  CHECK(homogeneous_component(p, 1) == P("x1", 1));
  CHECK(homogeneous_component(p, 3).is_zero());
  Polynomial w = P("z1^2*zb2 + zb1^2*z2", 3) * Coefficient(Rational(1, 2));
  CHECK(w.is_homogeneous());
  CHECK(homogeneous_component(w, 3) == w);
}

TEST_CASE("substitute_linear examples") {
  const std::size_t n = 2;
  const std::size_t nv = nvars_for(n);
  LinearMap phi = LinearMap::zero(nv);
  phi.set(0, 0, 1);
  phi.set(1, 1, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    phi.set(var_z(j), var_zb(j), 1);
    phi.set(var_zb(j), var_z(j), 1);
  }
  CHECK(substitute_linear(P("x2", n), phi) == P("-x2", n));
  Polynomial p = P("x1^2*z1 - 3/2*i*zb2*x2 + 7", n);
  CHECK(substitute_linear(p, LinearMap::identity(nv)) == p);
  for (int a1 : {1, -1}) {
    LinearMap psi = phi;
    psi.set(var_z(1), var_zb(1), a1);
    psi.set(var_zb(1), var_z(1), a1);
    CHECK(substitute_linear(P("z1*zb1", n), psi) == P("z1*zb1", n));
  }
  LinearMap bad = LinearMap::identity(nv);
  bad.set(var_z(1), var_z(1), Coefficient(0, 1));
  CHECK_THROWS_AS(substitute_linear(p, bad), IncompatibleMatrix);
}

TEST_CASE("ring axioms, conjugation and substitution composition on random inputs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    Polynomial a = random_poly(rng, n, 3), b = random_poly(rng, n, 3), c = random_poly(rng, n, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    LinearMap A = random_compatible(rng, n), B = random_compatible(rng, n);
    REQUIRE(A.is_conjugation_compatible());
    CHECK(substitute_linear(substitute_linear(a, A), B) == substitute_linear(a, A * B));
    Polynomial r = a + a.conj();
    CHECK(r.is_real());
    CHECK(substitute_linear(r, A).is_real());
  }
}

TEST_CASE("PolyMap reality is preserved") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2;
    Polynomial x1 = random_poly(rng, n, 2), x2 = random_poly(rng, n, 2);
    PolyMap g(x1 + x1.conj(), x2 + x2.conj(), {random_poly(rng, n, 2), random_poly(rng, n, 2)});
    REQUIRE(g.is_real());
    CHECK((g + g).is_real());
    CHECK((Coefficient(Rational(-3, 7)) * g).is_real());
    LinearMap A = random_compatible(rng, n);
    CHECK(g.compose_linear(A).is_real());
    CHECK(g.apply_linear(A).is_real());
  }
}

TEST_CASE("text round trip and parse errors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(rng, 2, 4);
    CHECK(Polynomial::parse(p.to_string(), p.nvars()) == p);
  }
  CHECK(P("x1 - x1", 1).to_string() == "0");
  CHECK(P("(1/2 + i)*z1*zb1 - x2^2", 1).to_string() == "-x2^2 + (1/2+i)*z1*zb1");
  CHECK(P("x1^2 + 2*x1*x2", 1).to_latex() == "x_{1}^{2} + 2 x_{1} x_{2}");
  CHECK(P("-i*zb1/2", 1).to_latex() == "-\\frac{1}{2} i \\bar{z}_{1}");
  CHECK_THROWS_AS(P("z3", 1), ParseError);
  CHECK_THROWS_AS(P("x1 +", 1), ParseError);
  CHECK_THROWS_AS(P("x1/x2", 1), ParseError);
  PolyMap g = PolyMap::parse("(x1, x2, i*z1)", 1);
  CHECK(g.to_string() == "(x1, x2, i*z1)");
  CHECK_THROWS_AS(PolyMap::parse("(x1, x2)", 1), ParseError);
}

TEST_CASE("linear map helpers") {
  const std::size_t nv = nvars_for(1);
  LinearMap phi = LinearMap::zero(nv);
  phi.set(0, 0, 1);
  phi.set(1, 1, -1);
  phi.set(2, 3, 1);
  phi.set(3, 2, 1);
  CHECK((phi * phi).is_identity());
  CHECK(phi.inverse() == phi);
  CHECK(phi.fix_dimension() == 2);
  CHECK_THROWS_AS(LinearMap::zero(nv).inverse(), DimensionError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revnf/catalog.hpp"
#include "revnf/errors.hpp"
#include "revnf/group.hpp"

using namespace revnf;

namespace {

Polynomial P(const char* s, std::size_t n) { return Polynomial::parse(s, nvars_for(n)); }

// Swaps x1 with Re z1 in real coordinates; an involution that mixes the blocks.
SignedElement block_mixer() {
  const Rational h(1, 2);
  std::vector<std::vector<Coefficient>> rows = {
      {0, 0, Coefficient(h), Coefficient(h)},
      {0, 1, 0, 0},
      {1, 0, Coefficient(h), Coefficient(-h)},
      {1, 0, Coefficient(-h), Coefficient(h)},
  };
  return SignedElement(LinearMap(rows), -1, "mixer");
}

}  // namespace

TEST_CASE("close_group examples") {
  const std::size_t n = 2;
  SignedElement phi = make_phi(n);
  SignedElement psi = make_psi({-1, -1, -1});
  FiniteSignedGroup g = close_group({phi, psi});
  CHECK(g.order() == 4);
  for (const auto& a : g.elements) {
    CHECK((a.matrix() * a.matrix()).is_identity());
    for (const auto& b : g.elements) {
      auto idx = g.find((a * b).matrix());
      REQUIRE(idx);
      CHECK(g.elements[*idx].sign() == a.sign() * b.sign());
    }
  }
  CHECK(close_group({SignedElement(LinearMap::identity(nvars_for(n)), 1)}).order() == 1);
  FiniteSignedGroup z2 = close_group({phi});
  CHECK(z2.order() == 2);
  CHECK(z2.elements[z2.generator_indices[0]].sign() == -1);
  CHECK(z2.elements[*z2.find((phi * phi).matrix())].sign() == 1);
}

TEST_CASE("close_group errors") {
  SignedElement phi = make_phi(1);
  CHECK_THROWS_AS(close_group({phi, SignedElement(phi.matrix(), 1)}), SignInconsistency);
  LinearMap rot = LinearMap::identity(nvars_for(1));
  rot.set(var_z(1), var_z(1), Coefficient(0, 1));
  rot.set(var_zb(1), var_zb(1), Coefficient(0, -1));
  CHECK(close_group({SignedElement(rot, 1)}).order() == 4);
  CHECK_THROWS_AS(close_group({SignedElement(rot, 1)}, 2), OrderExceeded);
  CHECK_THROWS_AS(SignedElement(LinearMap::zero(4), 1), DimensionError);
  LinearMap bad = LinearMap::identity(4);
  bad.set(2, 2, Coefficient(0, 1));
  CHECK_THROWS_AS(SignedElement(bad, 1), IncompatibleMatrix);
}

TEST_CASE("semidirect condition") {
  SGroupData s = catalog(CatalogCase::parse("res_n1n2_C3:1,2"));
  GroupContext gamma1 = GroupContext::of_S(s);
  SemidirectReport r = check_semidirect_condition(gamma1, make_phi(3));
  CHECK(r.holds);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0] == "phi * N * phi^-1 = -1*N + 0*E1 + 0*E2");
  CHECK(r.checks[1] == "phi * E1 * phi^-1 = 0*N + -1*E1 + 0*E2");

  GroupContext stage2 = gamma1.with(make_phi(3));
  for (const auto& p : enumerate_involution_pairs(LinearPart(3, {{-2, 1, 0}})))
    CHECK(check_semidirect_condition(stage2, p.psi).holds);

  SGroupData s1 = catalog(CatalogCase::parse("non_resonant:1"));
  CHECK_THROWS_AS(check_semidirect_condition(GroupContext::of_S(s1), block_mixer()), ConditionViolated);
  CHECK(check_semidirect_condition(GroupContext::finite(1, {make_phi(1)}), block_mixer()).holds);
  GroupContext finite1 = GroupContext::finite(1, {make_psi({-1, 1})});
  CHECK_THROWS_AS(check_semidirect_condition(finite1, block_mixer()), ConditionViolated);
}

TEST_CASE("product sigma") {
  const std::size_t n = 2;
  SignedElement phi = make_phi(n);
  SignedElement psi = make_psi({1, -1, 1});
  ProductSigma ps = product_sigma(close_group({phi}), psi);
  CHECK(ps.product.order() == 4);
  CHECK(ps.sigma((phi * psi).matrix()) == 1);
  CHECK(ps.sigma(LinearMap::identity(nvars_for(n))) == 1);
  CHECK(ps.sigma(phi.matrix()) == -1);
  CHECK(ps.sigma_tilde_of(phi.matrix()) == 1);
  CHECK(ps.sigma_tilde_of(LinearMap::identity(nvars_for(n))) == 1);
  CHECK(ps.sigma_tilde_of(psi.matrix()) == -1);
  for (const auto& a : ps.product.elements)
    for (const auto& b : ps.product.elements) CHECK(ps.sigma((a * b).matrix()) == a.sign() * b.sign());

  // Conjugating a reversing symmetry into a symmetry breaks sigma1.
  LinearMap swap = LinearMap::zero(nvars_for(2));
  swap.set(0, 0, 1);
  swap.set(1, 1, 1);
  swap.set(var_z(1), var_z(2), 1);
  swap.set(var_zb(1), var_zb(2), 1);
  swap.set(var_z(2), var_z(1), 1);
  swap.set(var_zb(2), var_zb(1), 1);
  LinearMap flip1 = LinearMap::identity(nvars_for(2));
  flip1.set(var_z(1), var_z(1), -1);
  flip1.set(var_zb(1), var_zb(1), -1);
  LinearMap flip2 = LinearMap::identity(nvars_for(2));
  flip2.set(var_z(2), var_z(2), -1);
  flip2.set(var_zb(2), var_zb(2), -1);
  FiniteSignedGroup g = close_group({SignedElement(flip1, -1, "f1"), SignedElement(flip2, 1, "f2")});
  CHECK_THROWS_AS(product_sigma(g, SignedElement(swap, -1, "s")), NotAHomomorphism);
}

TEST_CASE("membership examples") {
  const std::size_t n = 2;
  GroupContext phi_only = GroupContext::finite(n, {make_phi(n)});
  CHECK(membership(P("z1*zb1", n), phi_only, MembershipKind::invariant));
  CHECK(membership(P("x2", n), phi_only, MembershipKind::anti_invariant));
  CHECK_FALSE(membership(P("x2", n), phi_only, MembershipKind::invariant));
  PolyMap h3 = PolyMap::parse("(0, 0, i*z1, 0)", n);
  CHECK(membership(h3, phi_only, MembershipKind::reversible_equivariant));
  CHECK_FALSE(membership(h3, phi_only, MembershipKind::equivariant));
  PolyMap h2 = PolyMap::parse("(0, 0, z1, 0)", n);
  CHECK(membership(h2, phi_only, MembershipKind::equivariant));
  CHECK_THROWS_AS(membership(h2, phi_only, MembershipKind::invariant), std::invalid_argument);

  SGroupData s = catalog(CatalogCase::parse("non_resonant:2"));
  GroupContext full = GroupContext::of_S(s).with(make_phi(n)).with(make_psi({-1, 1, -1}));
  CHECK(membership(PolyMap::parse("(0, x1, 0, 0)", n), full, MembershipKind::reversible_equivariant));
  CHECK_FALSE(membership(PolyMap::parse("(0, 1, 0, 0)", n), full, MembershipKind::reversible_equivariant));
}

TEST_CASE("reversible equivariance is stable under the group action") {
  const std::size_t n = 2;
  SGroupData s = catalog(CatalogCase::parse("non_resonant:2"));
  SignedElement phi = make_phi(n), psi = make_psi({1, -1, 1});
  GroupContext ctx = GroupContext::of_S(s).with(phi).with(psi);
  FiniteSignedGroup g = close_group({phi, psi});
  std::vector<PolyMap> samples = {PolyMap::parse("(0, 1, 0, 0)", n), PolyMap::parse("(0, 0, i*z1, 0)", n),
                                  PolyMap::parse("(x1, x2, 0, 0)", n), PolyMap::parse("(0, 0, z1*x1, 0)", n),
                                  PolyMap::parse("(0, 0, 0, i*z2*z1*zb1)", n)};
  for (const auto& sample : samples)
    for (const auto& gamma : g.elements) {
      PolyMap moved =
          Coefficient(gamma.sign()) * sample.compose_linear(gamma.matrix().inverse()).apply_linear(gamma.matrix());
      CHECK(membership(sample, ctx, MembershipKind::reversible_equivariant) ==
            membership(moved, ctx, MembershipKind::reversible_equivariant));
    }
}

TEST_CASE("anticommute_check") {
  LinearPart L(3, {{-2, 1, 0}});
  CHECK(anticommute_check(make_phi(3), L));
  CHECK_FALSE(anticommute_check(SignedElement(LinearMap::identity(L.nvars()), 1), L));
  CHECK_THROWS_AS(LinearPart(1, {{1}}), DimensionError);
}

TEST_CASE("signed element json round trip") {
  SignedElement psi = make_psi({-1, 1, -1});
  auto j = to_json(psi);
  CHECK(j["sign"] == -1);
  CHECK(j["matrix"][0][0] == "-1");
  SignedElement back = signed_element_from_json(j);
  CHECK(back == psi);
  CHECK(back.name() == "psi");
  j["matrix"][2][2] = "i";
  CHECK_THROWS_AS(signed_element_from_json(j), IncompatibleMatrix);
  j["matrix"][2][2] = "x1";
  CHECK_THROWS_AS(signed_element_from_json(j), ParseError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revnf/catalog.hpp"
#include "revnf/linalg.hpp"
#include "revnf/samples.hpp"
#include "revnf/symmetry_ops.hpp"

using namespace revnf;

namespace {

std::vector<std::string> names(const std::vector<RingElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.name());
  return out;
}

std::vector<std::string> names(const std::vector<ModuleElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.name());
  return out;
}

const RingElement& by_name(const std::vector<RingElement>& v, const std::string& name) {
  for (const auto& e : v)
    if (e.name() == name) return e;
  throw std::out_of_range(name);
}

const ModuleElement& by_name(const std::vector<ModuleElement>& v, const std::string& name) {
  for (const auto& e : v)
    if (e.name() == name) return e;
  throw std::out_of_range(name);
}

std::vector<int> random_signs(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<int> s(n + 1);
  for (auto& a : s) a = bit(rng) ? 1 : -1;
  return s;
}

PipelineResult run(const std::string& c, const std::vector<int>& signs) {
  return pipeline(SymmetryContext::from_catalog(CatalogCase::parse(c), signs));
}

// S x| <kappa> where kappa keeps sign -1 and phi, when given, is relabelled as a symmetry.
GroupContext tilde_context(const SGroupData& s, const std::optional<SignedElement>& phi, const SignedElement& kappa) {
  GroupContext g = GroupContext::of_S(s);
  if (phi) g = g.with(SignedElement(phi->matrix(), 1, "phi+"));
  return g.with(kappa);
}

}  // namespace

TEST_CASE("operators are idempotent and R + S is the identity") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const SignedElement kappa = trial % 2 ? make_phi(n) : make_psi(random_signs(rng, n));
    Polynomial f = random_polynomial(rng, n, 6);
    CHECK(reynolds_R(reynolds_R(f, kappa), kappa) == reynolds_R(f, kappa));
    CHECK(reynolds_S(reynolds_S(f, kappa), kappa) == reynolds_S(f, kappa));
    CHECK(reynolds_R(f, kappa) + reynolds_S(f, kappa) == f);
    CHECK(reynolds_R(reynolds_S(f, kappa), kappa).is_zero());
    PolyMap g = random_map(rng, n, 4);
    CHECK(transfer_T(transfer_T(g, kappa), kappa) == transfer_T(g, kappa));
  }
}

TEST_CASE("decomposition lemma on random invariants") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::vector<int> signs = random_signs(rng, n);
    SymmetryContext ctx = SymmetryContext::from_catalog(CatalogCase::parse("non_resonant:" + std::to_string(n)), signs);
    Polynomial f = random_ring_element(rng, ctx.s.hilbert_basis, 6);
    CHECK(membership(reynolds_R(f, ctx.phi), ctx.inner_group(), MembershipKind::invariant));
    CHECK(membership(reynolds_S(f, ctx.phi), tilde_context(ctx.s, std::nullopt, ctx.phi), MembershipKind::anti_invariant));

    PipelineResult r = pipeline(ctx);
    Polynomial h = random_ring_element(rng, r.stage1.ring_basis, 6);
    CHECK(membership(reynolds_R(h, ctx.psi), ctx.full_group(), MembershipKind::invariant));
    CHECK(membership(reynolds_S(h, ctx.psi), tilde_context(ctx.s, ctx.phi, ctx.psi), MembershipKind::anti_invariant));
  }
}

TEST_CASE("decomposition lemma on the resonant C3 ring") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    SymmetryContext ctx = SymmetryContext::from_catalog(CatalogCase::parse("res_n1n2_C3:1,2"), random_signs(rng, 3));
    Polynomial f = random_ring_element(rng, ctx.s.hilbert_basis, 6);
    CHECK(membership(reynolds_R(f, ctx.phi), ctx.inner_group(), MembershipKind::invariant));
    CHECK(membership(reynolds_S(f, ctx.phi), tilde_context(ctx.s, std::nullopt, ctx.phi), MembershipKind::anti_invariant));
  }
}

TEST_CASE("T is a module homomorphism over kappa-invariants and lands in the reversible-equivariants") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 2;
    SymmetryContext ctx = SymmetryContext::from_catalog(CatalogCase::parse("non_resonant:" + std::to_string(n)),
                                                        random_signs(rng, n));
    PipelineResult r = pipeline(ctx);
    Polynomial h = random_ring_element(rng, r.stage1.ring_basis, 3);
    h = reynolds_R(h, ctx.psi);
    PolyMap g = random_map(rng, n, 3);
    CHECK(transfer_T(h * g, ctx.psi) == h * transfer_T(g, ctx.psi));

    PolyMap q = random_module_element(rng, r.stage1.ring_basis, r.stage1.module_generators, 5);
    CHECK(membership(transfer_T(q, ctx.psi), ctx.full_group(), MembershipKind::reversible_equivariant));
    PolyMap p = random_module_element(rng, ctx.s.hilbert_basis, ctx.s.equivariant_generators, 5);
    CHECK(membership(transfer_T(p, ctx.phi), ctx.inner_group(), MembershipKind::reversible_equivariant));
  }
}

TEST_CASE("operator examples") {
  SymmetryContext c3 = SymmetryContext::from_catalog(CatalogCase::parse("res_n1n2_C3:1,2"), {1, 1, 1, 1});
  const auto& basis = c3.s.hilbert_basis;
  const Polynomial& v4 = by_name(basis, "v4").poly;
  const Polynomial& v5 = by_name(basis, "v5").poly;
  CHECK(reynolds_R(v4, c3.phi) == v4);
  CHECK(reynolds_S(v4, c3.phi).is_zero());
  CHECK(reynolds_R(v5, c3.phi).is_zero());
  CHECK(reynolds_S(v5, c3.phi) == v5);
  CHECK(reynolds_S(by_name(basis, "v2").poly, c3.phi).is_zero());
  CoordinateBuilder b(3);
  CHECK(reynolds_R(b.x(2), c3.phi).is_zero());
  CHECK(reynolds_R(b.one(), c3.phi) == b.one());

  for (int a0 : {1, -1}) {
    SymmetryContext nr = SymmetryContext::from_catalog(CatalogCase::parse("non_resonant:2"), {a0, 1, -1});
    const Polynomial& v1 = by_name(nr.s.hilbert_basis, "v1").poly;
    CHECK(reynolds_S(v1, nr.psi) == Coefficient(Rational(1 - a0, 2)) * v1);
    const auto& gens = nr.s.equivariant_generators;
    CHECK(transfer_T(by_name(gens, "H1").map, nr.phi) == by_name(gens, "H1").map);
    CHECK(transfer_T(by_name(gens, "H0").map, nr.phi).is_zero());
    CHECK(transfer_T(by_name(gens, "H3").map, nr.phi) == by_name(gens, "H3").map);
    CHECK(transfer_T(by_name(gens, "H2").map, nr.phi).is_zero());
  }
  CHECK_THROWS_AS(reynolds_R(b.x(1), SignedElement(LinearMap::identity(8) * Coefficient(2), 1)), std::invalid_argument);
}

TEST_CASE("proportionality and scalar normalization") {
  CoordinateBuilder b(1);
  Polynomial p = b.x(1) + b.norm2(1);
  CHECK(proportionality(Coefficient(3) * p, p) == Coefficient(3));
  CHECK_FALSE(proportionality(p, b.x(1)));
  CHECK_FALSE(proportionality(p, b.zero()));
  CHECK(normalize_scalar(Coefficient(Rational(-2, 3)) * p) == p);
  PolyMap h3 = b.in_component(2, b.i() * b.z(1));
  CHECK(normalize_scalar(Coefficient(5) * h3) == h3);
  CHECK(proportionality(Coefficient(-4) * h3, h3) == Coefficient(-4));
  // Purely imaginary leading coefficients are divided by their imaginary part only.
  PolyMap g = Coefficient(0, 2) * b.in_component(2, b.z(1) * b.x(1));
  CHECK(normalize_scalar(g) == b.in_component(2, b.i() * b.z(1) * b.x(1)));
  CHECK(normalize_scalar(PolyMap(1)).is_zero());
}

TEST_CASE("extend_hilbert_basis examples") {
  SymmetryContext nr = SymmetryContext::from_catalog(CatalogCase::parse("non_resonant:3"), {1, 1, 1, 1});
  auto ext = extend_hilbert_basis(nr.s.hilbert_basis, nr.phi);
  CHECK(ext == nr.s.hilbert_basis);

  SymmetryContext c3 = SymmetryContext::from_catalog(CatalogCase::parse("res_n1n2_C3:1,2"), {-1, 1, -1, 1});
  auto stage1 = extend_hilbert_basis(c3.s.hilbert_basis, c3.phi);
  CHECK(names(stage1) == std::vector<std::string>{"v1", "v2", "v3", "v4", "v6"});
  auto stage2 = extend_hilbert_basis(stage1, c3.psi);
  CHECK(names(stage2) == std::vector<std::string>{"v1^2", "v2", "v3", "v4^2", "v1*v4", "v6"});
  for (const auto& u : stage2) CHECK(membership(u.poly, c3.full_group(), MembershipKind::invariant));
}

TEST_CASE("generators_over_extension examples") {
  SymmetryContext c3 = SymmetryContext::from_catalog(CatalogCase::parse("res_n1n2_C3:1,2"), {1, 1, 1, 1});
  auto g = generators_over_extension(c3.s.hilbert_basis, c3.s.equivariant_generators, c3.phi);
  REQUIRE(g.size() == 24);
  for (std::size_t j = 0; j < 12; ++j) {
    CHECK(g[j].name() == "H" + std::to_string(j));
    CHECK(g[12 + j].name() == "v5*H" + std::to_string(j));
  }
  SymmetryContext nr = SymmetryContext::from_catalog(CatalogCase::parse("non_resonant:2"), {1, -1, 1});
  PipelineResult r = pipeline(nr);
  auto same = generators_over_extension(r.stage1.ring_basis, r.stage1.module_generators, nr.psi);
  CHECK(same == r.stage1.module_generators);
}

TEST_CASE("simplify examples") {
  CoordinateBuilder b(2);
  SymmetryContext nr = SymmetryContext::from_catalog(CatalogCase::parse("non_resonant:2"), {1, 1, 1});
  GeneratorSet g;
  g.context = nr.full_group();
  g.ring_basis = nr.s.hilbert_basis;
  const ModuleElement L1{b.in_component(2, b.i() * b.z(1)), Label::generator("L1")};
  g.module_generators = {{PolyMap(2), Label::generator("zero")}, L1};
  CHECK(names(simplify(g).module_generators) == std::vector<std::string>{"L1"});
  g.module_generators = {L1, {Coefficient(2) * L1.map, Label::generator("L1b")}};
  CHECK(simplify(g).module_generators == std::vector<ModuleElement>{L1});
  g.module_generators = {{Coefficient(2) * L1.map, Label::generator("L0")}};
  CHECK(simplify(g).module_generators.front().map == L1.map);
  // v2 * L1 lies in the module generated by L1.
  g.module_generators = {{b.norm2(1) * L1.map, Label::generator("M")}, L1};
  CHECK(names(simplify(g).module_generators) == std::vector<std::string>{"L1"});
  // Ring: v1^2 is a product of v1 and constants are dropped.
  g.ring_basis = {{b.x(1) * b.x(1), Label::invariant("w")}, {b.one(), Label::invariant("c")},
                  {b.x(1), Label::invariant("v1")}};
  CHECK(names(simplify(g).ring_basis) == std::vector<std::string>{"v1"});
}

TEST_CASE("pipeline on the non-resonant case") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string c = "non_resonant:" + std::to_string(n);
    for (int a0 : {1, -1}) {
      std::vector<int> signs(n + 1, 1);
      signs[0] = a0;
      if (n > 1) signs[n] = -1;
      PipelineResult r = run(c, signs);
      std::vector<std::string> gens = {a0 == 1 ? "H1" : "v1*H1"};
      for (std::size_t j = 1; j <= n; ++j) gens.push_back("H" + std::to_string(2 * j + 1));
      CHECK(names(r.result.module_generators) == gens);
      std::vector<std::string> ring = {a0 == 1 ? "v1" : "v1^2"};
      for (std::size_t j = 1; j <= n; ++j) ring.push_back("v" + std::to_string(j + 1));
      CHECK(names(r.result.ring_basis) == ring);
      CHECK(soundness_failures(r.result).empty());
      CHECK(r.phi_report.holds);
      CHECK(r.psi_report.holds);
    }
  }
  // phi = psi: the second stage changes nothing.
  PipelineResult same = run("non_resonant:2", {1, 1, 1});
  CHECK(same.result.module_generators == same.stage1.module_generators);
  CHECK(same.result.ring_basis == same.stage1.ring_basis);
}

TEST_CASE("pipeline on the resonant C3 case for the four types") {
  struct Row {
    std::vector<int> signs;
    std::vector<std::string> ring;
    std::vector<std::string> gens;
  };
  const std::vector<Row> rows = {
      {{1, 1, 1, 1},
       {"v1", "v2", "v3", "v4", "v6"},
       {"v5*H0", "H1", "H3", "H5", "H7", "H9", "H11", "v5*H10"}},
      {{1, 1, -1, 1},
       {"v1", "v2", "v3", "v4^2", "v6"},
       {"v4*v5*H0", "H1", "H3", "v4*H5", "H7", "v4*H9", "H11", "v4*v5*H10"}},
      {{-1, 1, 1, 1},
       {"v1^2", "v2", "v3", "v4", "v6"},
       {"v5*H0", "v1*H1", "H3", "H5", "H7", "H9", "H11", "v5*H10"}},
      {{-1, 1, -1, 1},
       {"v1^2", "v2", "v3", "v4^2", "v1*v4", "v6"},
       {"v1*v5*H0", "v4*v5*H0", "v1*H1", "v4*H1", "H3", "v1*H5", "v4*H5", "H7", "v1*H9", "v4*H9", "H11",
        "v1*v5*H10", "v4*v5*H10"}},
  };
  for (const auto& row : rows) {
    PipelineResult r = run("res_n1n2_C3:1,2", row.signs);
    CHECK(names(r.result.ring_basis) == row.ring);
    CHECK(names(r.result.module_generators) == row.gens);
    CHECK(soundness_failures(r.result).empty());
    CHECK(soundness_failures(r.stage1).empty());
  }
}

TEST_CASE("pipeline output does not depend on generator order or scaling") {
  SymmetryContext ctx = SymmetryContext::from_catalog(CatalogCase::parse("res_n1n2_C3:1,2"), {-1, 1, -1, 1});
  PipelineResult base = pipeline(ctx);
  std::mt19937 rng(8);
  std::shuffle(ctx.s.equivariant_generators.begin(), ctx.s.equivariant_generators.end(), rng);
  for (auto& g : ctx.s.equivariant_generators) g.map = Coefficient(Rational(-3, 2)) * g.map;
  PipelineResult moved = pipeline(ctx);
  CHECK(compare_spans(maps_of(base.result.module_generators), maps_of(moved.result.module_generators)).equal);
  CHECK(base.result.module_generators.size() == moved.result.module_generators.size());
  CHECK(soundness_failures(moved.result).empty());
}

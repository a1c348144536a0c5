#include "revnf/symmetry_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "revnf/errors.hpp"
#include "revnf/graded.hpp"
#include "revnf/linalg.hpp"

namespace revnf {

SymmetryContext SymmetryContext::from_catalog(const CatalogCase& c, const std::vector<int>& signs) {
  SymmetryContext ctx = from_data(catalog_linear_part(c), catalog(c), signs);
  ctx.catalog_case = c;
  return ctx;
}

SymmetryContext SymmetryContext::from_data(LinearPart L, SGroupData s, const std::vector<int>& signs) {
  if (signs.size() != L.n() + 1)
    throw std::invalid_argument("expected " + std::to_string(L.n() + 1) + " involution signs");
  if (s.action.n != L.n()) throw DimensionError("S data and linear part have different block counts");
  SymmetryContext ctx;
  ctx.phi = make_phi(L.n());
  ctx.psi = make_psi(signs);
  ctx.linear_part = std::move(L);
  ctx.s = std::move(s);
  ctx.signs = signs;
  return ctx;
}

namespace {

void require_involution(const SignedElement& kappa) {
  if (!kappa.is_involution()) throw std::invalid_argument("kappa must be an involution");
}

const Coefficient half(Rational(1, 2));

}  // namespace

Polynomial reynolds_R(const Polynomial& f, const SignedElement& kappa) {
  require_involution(kappa);
  return half * (f + substitute_linear(f, kappa.matrix()));
}

Polynomial reynolds_S(const Polynomial& f, const SignedElement& kappa) {
  require_involution(kappa);
  return half * (f - substitute_linear(f, kappa.matrix()));
}

PolyMap transfer_T(const PolyMap& g, const SignedElement& kappa) {
  require_involution(kappa);
  return half * (g - g.compose_linear(kappa.matrix()).apply_linear(kappa.matrix()));
}

std::optional<Coefficient> proportionality(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero() || a.nvars() != b.nvars()) return std::nullopt;
  const Monomial& m = b.leading_monomial();
  Coefficient c = a.coeff(m) / b.leading_coefficient();
  if (c * b != a) return std::nullopt;
  return c;
}

std::optional<Coefficient> proportionality(const PolyMap& a, const PolyMap& b) {
  if (a.blocks() != b.blocks()) return std::nullopt;
  for (std::size_t k = 0; k < b.ncomponents(); ++k) {
    if (b.stored(k).is_zero()) continue;
    auto c = proportionality(a.stored(k), b.stored(k));
    if (!c || *c * b != a) return std::nullopt;
    return c;
  }
  return std::nullopt;
}

namespace {

Coefficient real_scale(const Coefficient& lead) {
  return sgn(lead.re()) != 0 ? Coefficient(Rational(1 / lead.re())) : Coefficient(Rational(1 / lead.im()));
}

int first_component(const PolyMap& g) {
  for (std::size_t k = 0; k < g.ncomponents(); ++k)
    if (!g.stored(k).is_zero()) return static_cast<int>(k);
  return -1;
}

}  // namespace

Polynomial normalize_scalar(const Polynomial& p) {
  if (p.is_zero()) return p;
  return real_scale(p.leading_coefficient()) * p;
}

PolyMap normalize_scalar(const PolyMap& g) {
  const int k = first_component(g);
  if (k < 0) return g;
  return real_scale(g.stored(k).leading_coefficient()) * g;
}

namespace {

Label image_label(const std::string& op, const Label& src, bool proportional) {
  if (proportional) return src;
  return Label::derived(op + "(" + src.text() + ")");
}

Label product_label(const Label& a, const Label& b) {
  if (a.is_product() && b.is_product()) return Label::product(a, b);
  auto wrap = [](const Label& l) { return l.is_product() ? l.text() : "(" + l.text() + ")"; };
  return Label::derived(wrap(a) + "*" + wrap(b));
}

struct AntiPart {
  Polynomial poly;
  Label label;
};

// S(u) with its label: the label of u when S(u) is a multiple of u.
AntiPart anti_part(const RingElement& u, const SignedElement& kappa) {
  Polynomial s = reynolds_S(u.poly, kappa);
  return {s, image_label("S", u.label, s.is_zero() || proportionality(s, u.poly).has_value())};
}

}  // namespace

std::vector<RingElement> extend_hilbert_basis(const std::vector<RingElement>& basis, const SignedElement& kappa) {
  std::vector<RingElement> out;
  std::vector<AntiPart> anti;
  for (const auto& u : basis) {
    Polynomial r = reynolds_R(u.poly, kappa);
    if (!r.is_zero()) out.push_back({normalize_scalar(r), image_label("R", u.label, proportionality(r, u.poly).has_value())});
    anti.push_back(anti_part(u, kappa));
    const AntiPart& sk = anti.back();
    if (sk.poly.is_zero()) continue;
    out.push_back({normalize_scalar(sk.poly * sk.poly), product_label(sk.label, sk.label)});
    for (std::size_t i = 0; i + 1 < anti.size(); ++i) {
      if (anti[i].poly.is_zero()) continue;
      out.push_back({normalize_scalar(anti[i].poly * sk.poly), product_label(anti[i].label, sk.label)});
    }
  }
  return prune_ring(out);
}

std::vector<ModuleElement> generators_over_extension(const std::vector<RingElement>& basis,
                                                     const std::vector<ModuleElement>& gens,
                                                     const SignedElement& kappa) {
  std::vector<ModuleElement> out;
  for (const auto& l : gens)
    if (!l.map.is_zero()) out.push_back(l);
  for (const auto& u : basis) {
    AntiPart s = anti_part(u, kappa);
    if (s.poly.is_zero()) continue;
    for (const auto& l : gens) {
      PolyMap g = s.poly * l.map;
      if (!g.is_zero()) out.push_back({g, product_label(s.label, l.label)});
    }
  }
  return out;
}

std::vector<ModuleElement> project_generators(const std::vector<ModuleElement>& gens, const SignedElement& kappa) {
  std::vector<ModuleElement> out;
  for (const auto& g : gens) {
    PolyMap t = transfer_T(g.map, kappa);
    if (t.is_zero()) continue;
    out.push_back({normalize_scalar(t), image_label("T", g.label, proportionality(t, g.map).has_value())});
  }
  return out;
}

namespace {

// Indices sorted by (degree, position).
template <class T, class Deg>
std::vector<std::size_t> degree_order(const std::vector<T>& v, Deg deg) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deg(v[a]) < deg(v[b]); });
  return idx;
}

}  // namespace

std::vector<RingElement> prune_ring(const std::vector<RingElement>& ring) {
  std::vector<RingElement> input;
  for (const auto& r : ring) {
    if (r.poly.degree() <= 0) continue;
    if (!r.poly.is_homogeneous()) throw std::invalid_argument("ring elements must be homogeneous");
    input.push_back(r);
  }
  const auto order = degree_order(input, [](const RingElement& r) { return r.poly.degree(); });
  std::vector<bool> keep(input.size(), false);
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int d = input[order[pos]].poly.degree();
    std::vector<Polynomial> lower;
    for (std::size_t k = 0; k < input.size(); ++k)
      if (keep[k]) lower.push_back(input[k].poly);
    Coordinates coords;
    EchelonBasis eb;
    if (!lower.empty()) {
      ProductCache cache(lower);
      for (const auto& p : cache.products_of_degree(d)) eb.insert(coords.embed(p));
    }
    for (; pos < order.size() && input[order[pos]].poly.degree() == d; ++pos)
      keep[order[pos]] = eb.insert(coords.embed(input[order[pos]].poly));
  }
  std::vector<RingElement> out;
  for (std::size_t k = 0; k < input.size(); ++k)
    if (keep[k]) out.push_back(input[k]);
  return out;
}

std::vector<ModuleElement> prune_module(const std::vector<RingElement>& ring, const std::vector<ModuleElement>& gens) {
  std::vector<ModuleElement> input;
  for (const auto& g : gens) {
    if (g.map.is_zero()) continue;
    if (!g.map.is_homogeneous()) throw std::invalid_argument("module generators must be homogeneous");
    input.push_back(g);
  }
  std::vector<Polynomial> rp;
  for (const auto& r : ring)
    if (r.poly.degree() > 0) rp.push_back(r.poly);
  ProductCache cache(rp);
  const auto order = degree_order(input, [](const ModuleElement& g) { return g.map.degree(); });
  std::vector<bool> keep(input.size(), false);
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int d = input[order[pos]].map.degree();
    std::vector<PolyMap> lower;
    for (std::size_t k = 0; k < input.size(); ++k)
      if (keep[k]) lower.push_back(input[k].map);
    Coordinates coords;
    EchelonBasis eb;
    for (const auto& m : module_products(cache, lower, d)) eb.insert(coords.embed(m));
    for (; pos < order.size() && input[order[pos]].map.degree() == d; ++pos)
      keep[order[pos]] = eb.insert(coords.embed(input[order[pos]].map));
  }
  std::vector<ModuleElement> out;
  for (std::size_t k = 0; k < input.size(); ++k)
    if (keep[k]) out.push_back(input[k]);
  return out;
}

GeneratorSet simplify(const GeneratorSet& g) {
  GeneratorSet out;
  out.context = g.context;
  out.symbols = g.symbols;
  std::vector<RingElement> ring;
  for (const auto& r : g.ring_basis)
    if (!r.poly.is_zero()) ring.push_back({normalize_scalar(r.poly), r.label});
  out.ring_basis = prune_ring(ring);
  std::vector<ModuleElement> gens;
  for (const auto& m : g.module_generators)
    if (!m.map.is_zero()) gens.push_back({normalize_scalar(m.map), m.label});
  out.module_generators = prune_module(out.ring_basis, gens);
  std::stable_sort(out.module_generators.begin(), out.module_generators.end(),
                   [](const ModuleElement& a, const ModuleElement& b) {
                     return first_component(a.map) < first_component(b.map);
                   });
  return out;
}

PipelineResult pipeline(const SymmetryContext& ctx) {
  PipelineResult r;
  const GroupContext s_only = GroupContext::of_S(ctx.s);
  r.phi_report = check_semidirect_condition(s_only, ctx.phi);
  const GroupContext inner = ctx.inner_group();
  r.psi_report = check_semidirect_condition(inner, ctx.psi);
  const FiniteSignedGroup phi_group = close_group({ctx.phi});
  if (!phi_group.find(ctx.psi.matrix())) product_sigma(phi_group, ctx.psi);

  GeneratorSet stage1;
  stage1.context = inner;
  stage1.symbols = ctx.s.symbols;
  stage1.ring_basis = extend_hilbert_basis(ctx.s.hilbert_basis, ctx.phi);
  stage1.module_generators = project_generators(
      generators_over_extension(ctx.s.hilbert_basis, ctx.s.equivariant_generators, ctx.phi), ctx.phi);
  r.stage1 = simplify(stage1);

  GeneratorSet stage2;
  stage2.context = ctx.full_group();
  stage2.symbols = ctx.s.symbols;
  stage2.ring_basis = extend_hilbert_basis(r.stage1.ring_basis, ctx.psi);
  stage2.module_generators = project_generators(
      generators_over_extension(r.stage1.ring_basis, r.stage1.module_generators, ctx.psi), ctx.psi);
  r.result = simplify(stage2);
  return r;
}

std::vector<std::string> soundness_failures(const GeneratorSet& g) {
  std::vector<std::string> out;
  for (const auto& r : g.ring_basis)
    if (!membership(r.poly, g.context, MembershipKind::invariant)) out.push_back(r.name());
  for (const auto& m : g.module_generators)
    if (!membership(m.map, g.context, MembershipKind::reversible_equivariant)) out.push_back(m.name());
  return out;
}

}  // namespace revnf

#include "revnf/samples.hpp"

#include "revnf/graded.hpp"

namespace revnf {

namespace {

Coefficient random_coefficient(std::mt19937& rng, bool real) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Coefficient(Rational(num(rng), den(rng)), real ? Rational(0) : Rational(num(rng), den(rng)));
}

Polynomial random_product(std::mt19937& rng, ProductCache& cache, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int d = deg(rng);
  auto exps = weighted_compositions(cache.degrees(), d);
  if (exps.empty()) return Polynomial(0);
  std::uniform_int_distribution<std::size_t> pick(0, exps.size() - 1);
  return cache.product(exps[pick(rng)]);
}

}  // namespace

Polynomial random_polynomial(std::mt19937& rng, std::size_t n, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Polynomial p(nvars_for(n));
  for (int t = nterms(rng); t > 0; --t) {
    auto monos = monomials_of_degree(nvars_for(n), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    p.add_term(monos[pick(rng)], random_coefficient(rng, false));
  }
  return p;
}

PolyMap random_map(std::mt19937& rng, std::size_t n, int max_deg, int max_terms) {
  std::vector<Polynomial> comps;
  for (std::size_t c = 0; c < n + 2; ++c) {
    Polynomial p = random_polynomial(rng, n, max_deg, max_terms);
    comps.push_back(c < 2 ? Coefficient(Rational(1, 2)) * (p + p.conj()) : p);
  }
  return PolyMap::from_components(std::move(comps));
}

Polynomial random_ring_element(std::mt19937& rng, const std::vector<RingElement>& ring, int max_deg, int max_terms) {
  const std::size_t nv = ring.empty() ? 2 : ring.front().poly.nvars();
  Polynomial out(nv);
  ProductCache cache(polys_of(ring));
  std::uniform_int_distribution<int> nterms(1, max_terms);
  for (int t = nterms(rng); t > 0; --t) {
    Polynomial m = random_product(rng, cache, max_deg);
    if (m.nvars() == nv) out += random_coefficient(rng, true) * m;
  }
  return out;
}

PolyMap random_module_element(std::mt19937& rng, const std::vector<RingElement>& ring,
                              const std::vector<ModuleElement>& gens, int max_deg, int max_terms) {
  PolyMap out(gens.front().map.blocks());
  ProductCache cache(polys_of(ring));
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int t = nterms(rng); t > 0; --t) {
    const PolyMap& g = gens[pick(rng)].map;
    if (g.degree() > max_deg) continue;
    Polynomial m = random_product(rng, cache, max_deg - g.degree());
    if (m.nvars() == g.nvars()) out += random_coefficient(rng, true) * (m * g);
  }
  return out;
}

}  // namespace revnf

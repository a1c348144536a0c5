#pragma once

#include <random>
#include <vector>

#include "revnf/elements.hpp"

namespace revnf {

/// Random Gaussian-rational polynomial with up to max_terms terms of degree <= max_deg.
Polynomial random_polynomial(std::mt19937& rng, std::size_t n, int max_deg, int max_terms = 5);
/// Random map with independent random components.
PolyMap random_map(std::mt19937& rng, std::size_t n, int max_deg, int max_terms = 3);
/// Real-rational combination of products of ring elements, degree <= max_deg.
Polynomial random_ring_element(std::mt19937& rng, const std::vector<RingElement>& ring, int max_deg,
                               int max_terms = 3);
/// Combination of generators with random ring-element coefficients, degree <= max_deg.
PolyMap random_module_element(std::mt19937& rng, const std::vector<RingElement>& ring,
                              const std::vector<ModuleElement>& gens, int max_deg, int max_terms = 3);

}  // namespace revnf

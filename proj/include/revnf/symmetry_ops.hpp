#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revnf/catalog.hpp"
#include "revnf/group.hpp"

namespace revnf {

/// Hilbert basis of an invariant ring and generators of the reversible-equivariants over it.
struct GeneratorSet {
  std::vector<RingElement> ring_basis;
  std::vector<ModuleElement> module_generators;
  GroupContext context;
  /// Display data for every name the labels refer to.
  std::vector<Symbol> symbols;
};

/// Linear part, S data and the pair of reversing involutions.
struct SymmetryContext {
  LinearPart linear_part;
  SGroupData s;
  SignedElement phi;
  SignedElement psi;
  std::vector<int> signs;
  std::optional<CatalogCase> catalog_case;

  /// Throws UnsupportedCase for a bad case and std::invalid_argument for bad signs.
  static SymmetryContext from_catalog(const CatalogCase& c, const std::vector<int>& signs);
  static SymmetryContext from_data(LinearPart L, SGroupData s, const std::vector<int>& signs);

  GroupContext inner_group() const { return GroupContext::of_S(s).with(phi); }
  GroupContext full_group() const { return inner_group().with(psi); }
};

/// (f + f o kappa) / 2.
Polynomial reynolds_R(const Polynomial& f, const SignedElement& kappa);
/// (f - f o kappa) / 2.
Polynomial reynolds_S(const Polynomial& f, const SignedElement& kappa);
/// (g - kappa g kappa) / 2.
PolyMap transfer_T(const PolyMap& g, const SignedElement& kappa);

/// c with a = c b, if a is a scalar multiple of a nonzero b.
std::optional<Coefficient> proportionality(const Polynomial& a, const Polynomial& b);
std::optional<Coefficient> proportionality(const PolyMap& a, const PolyMap& b);

/// Divides by the real (else imaginary) part of the leading coefficient:
/// first nonzero component, largest monomial. Zero stays zero.
Polynomial normalize_scalar(const Polynomial& p);
PolyMap normalize_scalar(const PolyMap& g);

/// For k = 1..s: R(u_k), S(u_k)^2, then S(u_i) S(u_k) for i < k; zeros removed,
/// scalars normalized and algebra-redundant elements pruned.
std::vector<RingElement> extend_hilbert_basis(const std::vector<RingElement>& basis, const SignedElement& kappa);
/// S(u_i) L_j with S(u_0) = 1, i-major, zeros removed.
std::vector<ModuleElement> generators_over_extension(const std::vector<RingElement>& basis,
                                                     const std::vector<ModuleElement>& gens,
                                                     const SignedElement& kappa);
/// T(G_i) with zeros removed and scalars normalized.
std::vector<ModuleElement> project_generators(const std::vector<ModuleElement>& gens, const SignedElement& kappa);

/// Ring elements that survive algebra pruning, in input order. Constants are dropped.
std::vector<RingElement> prune_ring(const std::vector<RingElement>& ring);
/// Module generators that survive pruning over the algebra of ring, in input order.
std::vector<ModuleElement> prune_module(const std::vector<RingElement>& ring, const std::vector<ModuleElement>& gens);

/// Removes zeros, normalizes scalars, prunes both lists exactly at each degree
/// (earlier elements win ties) and groups generators by first nonzero component.
GeneratorSet simplify(const GeneratorSet& g);

struct PipelineResult {
  /// Invariants and reversible-equivariants of S x| Z2^phi.
  GeneratorSet stage1;
  /// Invariants and reversible-equivariants of S x| (Z2^phi x Z2^psi).
  GeneratorSet result;
  SemidirectReport phi_report;
  SemidirectReport psi_report;
};

PipelineResult pipeline(const SymmetryContext& ctx);

/// Soundness: every ring element invariant and every generator reversible-equivariant.
/// Returns the names of the failing elements.
std::vector<std::string> soundness_failures(const GeneratorSet& g);

}  // namespace revnf

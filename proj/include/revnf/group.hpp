#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revnf/continuous.hpp"
#include "revnf/signed_element.hpp"

namespace revnf {

/// Explicit element list closed under products; signs form a homomorphism.
struct FiniteSignedGroup {
  std::vector<SignedElement> elements;
  std::vector<std::size_t> generator_indices;

  std::size_t order() const { return elements.size(); }
  /// Index of the element with this matrix, if present.
  std::optional<std::size_t> find(const LinearMap& m) const;
};

/// Throws OrderExceeded or SignInconsistency.
FiniteSignedGroup close_group(const std::vector<SignedElement>& generators, std::size_t max_order = 64);

/// The group a membership question refers to: S through its infinitesimal
/// action (absent for a purely finite group) together with finite generators.
struct GroupContext {
  std::size_t n = 0;
  std::optional<ContinuousAction> continuous;
  std::vector<SignedElement> finite_generators;

  static GroupContext of_S(const SGroupData& s) { return {s.action.n, s.action, {}}; }
  static GroupContext finite(std::size_t n, std::vector<SignedElement> gens) { return {n, std::nullopt, std::move(gens)}; }
  GroupContext with(const SignedElement& g) const;
};

enum class MembershipKind { invariant, anti_invariant, equivariant, reversible_equivariant };
std::string to_string(MembershipKind k);

/// Checks the defining identity on every finite generator and the infinitesimal
/// condition for S, whose elements all carry sign +1.
bool membership(const Polynomial& f, const GroupContext& group, MembershipKind kind);
bool membership(const PolyMap& g, const GroupContext& group, MembershipKind kind);

/// gamma L + L gamma = 0 for the nilpotent block and every torus generator.
bool anticommute_check(const SignedElement& gamma, const LinearPart& L);

struct SemidirectReport {
  bool holds = true;
  std::vector<std::string> checks;
};

/// Verifies that conjugation by kappa maps Gamma1 into itself: finite generators
/// must land in the closure of the finite part, the shear and torus generators of S
/// in the span of the infinitesimal generators (integer coefficients on the torus).
/// Throws ConditionViolated naming the offending generator pair.
SemidirectReport check_semidirect_condition(const GroupContext& gamma1, const SignedElement& kappa);

/// Sign maps on Gamma1 x| Gamma2 for Gamma2 = <kappa>: sigma = sigma1 sigma2, sigma~ = sigma2.
struct ProductSigma {
  FiniteSignedGroup product;
  std::vector<int> sigma_tilde;

  int sigma(const LinearMap& m) const;
  int sigma_tilde_of(const LinearMap& m) const;
};

/// Builds the finite part of the product and checks that conjugation by kappa
/// preserves sigma1 on the generators; throws NotAHomomorphism otherwise.
ProductSigma product_sigma(const FiniteSignedGroup& gamma1, const SignedElement& kappa);

}  // namespace revnf

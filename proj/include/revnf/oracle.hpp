#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revnf/group.hpp"
#include "revnf/symmetry_ops.hpp"

namespace revnf {

constexpr std::size_t kDefaultMonomialLimit = 200000;

/// Basis of the degree-d part of one of the four spaces.
struct DegreeSlice {
  int degree = 0;
  MembershipKind kind = MembershipKind::invariant;
  /// Filled for invariant and anti_invariant.
  std::vector<Polynomial> functions;
  /// Filled for equivariant and reversible_equivariant.
  std::vector<PolyMap> maps;

  bool holds_maps() const { return kind == MembershipKind::equivariant || kind == MembershipKind::reversible_equivariant; }
  std::size_t dimension() const { return holds_maps() ? maps.size() : functions.size(); }
};

/// Brute-force slice: all degree-d monomials passing the torus filter, then the shear and
/// finite-group conditions as exact linear constraints. Throws ResourceLimit when the number
/// of (component, monomial) candidates exceeds the limit.
DegreeSlice slice(const GroupContext& group, int d, MembershipKind kind, std::size_t limit = kDefaultMonomialLimit);

/// Degree-d part of the module generated by the generators over the algebra of the ring basis.
/// Throws ResourceLimit when the number of products exceeds the limit.
DegreeSlice module_slice(const GeneratorSet& g, int d, std::size_t limit = kDefaultMonomialLimit);
/// Degree-d part of the algebra generated by the ring basis.
DegreeSlice ring_slice(const GeneratorSet& g, int d, std::size_t limit = kDefaultMonomialLimit);

struct SliceComparison {
  bool equal = true;
  /// Element in one span but not the other.
  std::optional<Polynomial> function_witness;
  std::optional<PolyMap> map_witness;
  bool witness_from_first = false;

  std::string witness_text() const;
};

/// Throws std::invalid_argument when degree or kind differ.
SliceComparison spans_equal(const DegreeSlice& a, const DegreeSlice& b);

/// Dimensions of slice(group, d, kind) on a degree x kind grid.
struct DimensionTable {
  std::vector<int> degrees;
  std::vector<MembershipKind> kinds;
  /// dims[i][k]: degree degrees[i], kind kinds[k].
  std::vector<std::vector<std::size_t>> dims;

  nlohmann::json to_json() const;
  /// Aligned columns, one row per degree.
  std::string to_text() const;
};

DimensionTable dimension_table(const GroupContext& group, const std::vector<int>& degrees,
                               const std::vector<MembershipKind>& kinds, std::size_t limit = kDefaultMonomialLimit);

}  // namespace revnf

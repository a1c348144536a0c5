#pragma once

#include <string>
#include <vector>

#include "revnf/elements.hpp"
#include "revnf/signed_element.hpp"

namespace revnf {

/// Linearization L = N + sum_j omega_j J_j: one nilpotent 2x2 block (x1' = x2)
/// and n rotation blocks z_j' = -i omega_j z_j, with integer resonance relations
/// sum_j c_j omega_j = 0 among the symbolic frequencies.
class LinearPart {
 public:
  LinearPart() = default;
  /// Throws DimensionError if n = 0, a relation has the wrong length, or the
  /// relations force some omega_j = 0.
  explicit LinearPart(std::size_t n, std::vector<std::vector<long>> relations = {},
                      std::vector<std::string> omegas = {});

  std::size_t n() const { return n_; }
  std::size_t nvars() const { return nvars_for(n_); }
  const std::vector<std::string>& omegas() const { return omegas_; }
  const std::vector<std::vector<long>>& resonance_relations() const { return relations_; }
  /// Integer basis of the frequency lattice, one row per free frequency parameter.
  const std::vector<std::vector<long>>& torus_weights() const { return weights_; }

  /// N as a coordinate matrix.
  LinearMap nilpotent_matrix() const;
  /// Rotation generator sum_j w_j J_j with J_j = diag(-i on z_j, +i on zb_j).
  LinearMap rotation_matrix(const std::vector<long>& w) const;

  friend bool operator==(const LinearPart& a, const LinearPart& b) {
    return a.n_ == b.n_ && a.omegas_ == b.omegas_ && a.relations_ == b.relations_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> omegas_;
  std::vector<std::vector<long>> relations_;
  std::vector<std::vector<long>> weights_;
};

/// Infinitesimal data of the continuous group S: torus weights (rows) and the shear.
struct ContinuousAction {
  std::size_t n = 0;
  std::vector<std::vector<long>> torus_weights;
  bool has_shear = true;
  friend bool operator==(const ContinuousAction& a, const ContinuousAction& b) {
    return a.n == b.n && a.torus_weights == b.torus_weights && a.has_shear == b.has_shear;
  }
};

struct SGroupData {
  ContinuousAction action;
  std::vector<RingElement> hilbert_basis;
  std::vector<ModuleElement> equivariant_generators;
  /// Display data for the basis and generator names.
  std::vector<Symbol> symbols;
};

/// Torus rank, weights and shear flag of S; basis and generators left empty.
SGroupData structure_of_S(const LinearPart& L);

bool infinitesimal_check(const Polynomial& f, const ContinuousAction& s);
bool infinitesimal_check(const PolyMap& g, const ContinuousAction& s);
inline bool infinitesimal_check(const Polynomial& f, const SGroupData& s) { return infinitesimal_check(f, s.action); }
inline bool infinitesimal_check(const PolyMap& g, const SGroupData& s) { return infinitesimal_check(g, s.action); }

/// (x1, x2, z, zb) -> (x1, -x2, zb, z), sign -1.
SignedElement make_phi(std::size_t n);
/// (x1, x2, z_j, zb_j) -> (a0 x1, -a0 x2, a_j zb_j, a_j z_j), sign -1.
SignedElement make_psi(const std::vector<int>& signs);

struct InvolutionPair {
  std::vector<int> signs;
  SignedElement phi;
  SignedElement psi;
};

/// One pair per sign tuple (a0, ..., an): 2^(n+1) pairs, lexicographic with +1 first.
std::vector<InvolutionPair> enumerate_involution_pairs(const LinearPart& L);

enum class NormalFormType { A, B, C, D };
char type_letter(NormalFormType t);
/// a1^n2 * a2^n1.
int resonance_sign(int a1, int a2, int n1, int n2);
NormalFormType classify_type(int a0, int a1, int a2, int n1, int n2);

}  // namespace revnf

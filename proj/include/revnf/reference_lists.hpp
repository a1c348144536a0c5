#pragma once

#include <string>
#include <vector>

#include "revnf/continuous.hpp"
#include "revnf/elements.hpp"

namespace revnf {

/// Published generator list for one type: ring generators and module generators.
struct ReferenceRow {
  NormalFormType type = NormalFormType::A;
  std::vector<RingElement> ring;
  std::vector<ModuleElement> generators;
};

/// Two readings of the Type C row on R^2 x C^3: the catalog H's or the L's.
enum class TypeCReading { h_list, l_list };

/// Generators L_0..L_{2n+5} over the ring extended by phi, for the (n1:n2:0) resonance
/// on n blocks, named prefix0, prefix1, ...
std::vector<ModuleElement> resonant_phi_generators(int n1, int n2, std::size_t n, const std::string& prefix);

/// Row of the generator table on R^2 x C^3.
ReferenceRow table_c3_row(NormalFormType t, int n1, int n2, TypeCReading reading = TypeCReading::l_list);
/// Row of the generator table on R^2 x C^n, n >= 3.
ReferenceRow table_cn_row(NormalFormType t, int n1, int n2, std::size_t n);

/// Factor (1 + sign * a0^[a0] p1^[p1] p2^[p2]) with p1 = a1^n2 a2^n1 and p2 = a3^m2 a4^m1.
struct SignFactor {
  int sign = 1;
  bool a0 = false;
  bool p1 = false;
  bool p2 = false;

  int value(int a0v, int p1v, int p2v) const;
  std::string text() const;
};

/// Entry T(S(v_a) G) of the published double-resonance list, kept as printed.
struct JEntry {
  /// Printed label, e.g. "J15j".
  std::string label;
  /// Index a of S(v_a), with S(v_0) = 1.
  int a = 0;
  /// Multiplier of the base generator over the phi-extended ring: "", "u5" or "u9".
  std::string base_factor;
  /// Index set named by the label.
  char label_set = '1';
  /// Index set of the H in the printed formula.
  char printed_set = '1';
  /// Index set used when recomputing the entry.
  char resolved_set = '1';
  std::vector<SignFactor> factors;
  /// Invariant multiplicands in the printed formula, e.g. {"v1", "u5"}.
  std::vector<std::string> multiplicands;
  bool printed_zero = false;
  /// Typesetting defect in the printed entry, if any.
  std::string typo;
};

/// The published list, in printed order.
const std::vector<JEntry>& double_resonance_list();
/// H indices of an index-set letter: '1', 'i', 'k', 'l' (odd) and 'j', 'r', 's' (even).
const std::vector<int>& double_index_set(char c);

/// Result of recomputing the double-resonance list for one parameter set.
struct JAudit {
  /// Deterministic, one line per finding.
  std::vector<std::string> discrepancies;
  /// (entry, index, sign regime) triples recomputed.
  std::size_t checked = 0;
  /// Recomputed nonzero instances.
  std::size_t nonzero = 0;
  /// Recomputed nonzero instances failing reversible equivariance.
  std::size_t membership_failures = 0;
  /// Printed instances with a nonzero factor failing reversible equivariance.
  std::size_t printed_membership_failures = 0;
};

/// Sign tuples (a0, 1, a2, 1, a4) covering every (a0, p1, p2) regime.
std::vector<std::vector<int>> double_sign_regimes(int n1, int n2, int m1, int m2);

/// Recomputed nonzero entries for one sign tuple, scalars normalized.
std::vector<ModuleElement> double_resonance_generators(int n1, int n2, int m1, int m2, const std::vector<int>& signs);

/// Recomputes every entry for every regime and compares with the printed list.
JAudit audit_double_resonance(int n1, int n2, int m1, int m2);

}  // namespace revnf

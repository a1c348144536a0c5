#pragma once

#include <string>
#include <utility>
#include <vector>

#include "revnf/poly.hpp"

namespace revnf {

/// Provenance of a generated element: up to a nonzero scalar it equals
/// the product of the factor invariants times the base generator. When
/// `formula` is set the element is not of that form and the formula names
/// the operation that produced it.
struct Label {
  std::vector<std::pair<std::string, int>> factors;
  std::string base;
  std::string formula;

  bool is_product() const { return formula.empty(); }
  /// "v1^2*v4*H3", "H1", "v2", "1", or the formula.
  std::string text() const;
  /// Product of two product labels (at most one may carry a base).
  static Label product(const Label& a, const Label& b);
  static Label invariant(const std::string& name) { return Label{{{name, 1}}, "", ""}; }
  static Label generator(const std::string& name) { return Label{{}, name, ""}; }
  static Label derived(const std::string& formula) { return Label{{}, "", formula}; }

  friend bool operator==(const Label& a, const Label& b) {
    return a.factors == b.factors && a.base == b.base && a.formula == b.formula;
  }
};

/// Natural order on symbol names: "v2" < "v10", "u9" < "v1".
bool symbol_less(const std::string& a, const std::string& b);

struct RingElement {
  Polynomial poly;
  Label label;
  std::string name() const { return label.text(); }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.poly == b.poly && a.label == b.label;
  }
};

struct ModuleElement {
  PolyMap map;
  Label label;
  std::string name() const { return label.text(); }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.map == b.map && a.label == b.label;
  }
};

/// Display data for a named invariant or generator.
struct Symbol {
  std::string name;
  std::string text;
  std::string latex;
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.name == b.name && a.text == b.text && a.latex == b.latex;
  }
};

std::vector<Polynomial> polys_of(const std::vector<RingElement>& v);
std::vector<PolyMap> maps_of(const std::vector<ModuleElement>& v);

}  // namespace revnf

#pragma once

#include <string>
#include <vector>

#include "revnf/continuous.hpp"

namespace revnf {

enum class CatalogKind { non_resonant, res_n1n2_C3, res_n1n2_Cn, res_double_C4 };

/// A built-in case: non_resonant(n), res_n1n2_C3(n1,n2), res_n1n2_Cn(n1,n2,n),
/// res_double_C4(n1,n2,m1,m2).
struct CatalogCase {
  CatalogKind kind = CatalogKind::non_resonant;
  std::vector<int> params;

  std::string name() const;
  /// "name:p1,p2,...".
  std::string to_string() const;
  /// Number of complex blocks.
  std::size_t blocks() const;
  /// Parses "name" plus an optional ":p1,p2,..." suffix; throws UnsupportedCase.
  static CatalogCase parse(const std::string& text);
  /// Throws UnsupportedCase if the parameters are outside the catalog's range.
  void validate() const;
};

/// Frequency relations of the case.
LinearPart catalog_linear_part(const CatalogCase& c);
/// Hilbert basis of P(S), generators of the S-equivariants, and display symbols.
SGroupData catalog(const CatalogCase& c);

/// Builders for invariants and maps in the coordinates of n blocks.
class CoordinateBuilder {
 public:
  explicit CoordinateBuilder(std::size_t n) : n_(n) {}
  std::size_t blocks() const { return n_; }
  Polynomial zero() const { return Polynomial(nvars_for(n_)); }
  Polynomial one() const { return Polynomial::constant(nvars_for(n_), 1); }
  Polynomial x(std::size_t k) const { return Polynomial::variable(nvars_for(n_), var_x(k)); }
  Polynomial z(std::size_t j, unsigned e = 1) const;
  Polynomial zb(std::size_t j, unsigned e = 1) const;
  Polynomial norm2(std::size_t j) const { return z(j) * zb(j); }
  Polynomial re(const Polynomial& w) const;
  Polynomial im(const Polynomial& w) const;
  /// Map with a single nonzero stored component.
  PolyMap in_component(std::size_t comp, const Polynomial& p) const;
  PolyMap h0() const;
  PolyMap h1() const;
  Coefficient i() const { return Coefficient::imaginary_unit(); }

 private:
  std::size_t n_;
};

}  // namespace revnf

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "revnf/poly.hpp"

namespace revnf {

/// Exponent vectors e with sum_i e_i * degrees[i] = d, in descending lexicographic order.
/// Entries with degree 0 are skipped (their exponent is always 0).
std::vector<std::vector<int>> weighted_compositions(const std::vector<int>& degrees, int d);

/// Products of powers of a fixed list of homogeneous polynomials, memoized by exponent vector.
class ProductCache {
 public:
  explicit ProductCache(std::vector<Polynomial> factors);

  const std::vector<Polynomial>& factors() const { return factors_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const Polynomial& product(const std::vector<int>& exponents);
  /// All products of total degree d.
  std::vector<Polynomial> products_of_degree(int d);
  /// Number of products of total degree d.
  std::size_t count_of_degree(int d) const;

 private:
  std::vector<Polynomial> factors_;
  std::vector<int> degrees_;
  std::size_t nvars_ = 2;
  std::map<std::vector<int>, Polynomial> cache_;
};

/// Degree-d part of the module generated by gens over the algebra generated by ring:
/// every product m * G with m a monomial in the ring elements and deg(m) + deg(G) = d.
std::vector<PolyMap> module_products(ProductCache& ring, const std::vector<PolyMap>& gens, int d);

}  // namespace revnf

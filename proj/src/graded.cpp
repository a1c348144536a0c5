#include "revnf/graded.hpp"

#include <stdexcept>

namespace revnf {

namespace {

void compositions(const std::vector<int>& degrees, std::size_t k, int left, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (k == degrees.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  if (degrees[k] <= 0) {
    cur[k] = 0;
    compositions(degrees, k + 1, left, cur, out);
    return;
  }
  for (int e = left / degrees[k]; e >= 0; --e) {
    cur[k] = e;
    compositions(degrees, k + 1, left - e * degrees[k], cur, out);
  }
  cur[k] = 0;
}

}  // namespace

std::vector<std::vector<int>> weighted_compositions(const std::vector<int>& degrees, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> cur(degrees.size(), 0);
  compositions(degrees, 0, d, cur, out);
  return out;
}

ProductCache::ProductCache(std::vector<Polynomial> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("ring factors must be nonzero and homogeneous");
    degrees_.push_back(f.degree());
    nvars_ = f.nvars();
  }
}

const Polynomial& ProductCache::product(const std::vector<int>& e) {
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;
  std::size_t k = 0;
  while (k < e.size() && e[k] == 0) ++k;
  Polynomial value = Polynomial::constant(nvars_, 1);
  if (k < e.size()) {
    std::vector<int> rest = e;
    --rest[k];
    value = product(rest) * factors_[k];
  }
  return cache_.emplace(e, std::move(value)).first->second;
}

std::vector<Polynomial> ProductCache::products_of_degree(int d) {
  std::vector<Polynomial> out;
  for (const auto& e : weighted_compositions(degrees_, d)) out.push_back(product(e));
  return out;
}

std::size_t ProductCache::count_of_degree(int d) const { return weighted_compositions(degrees_, d).size(); }

std::vector<PolyMap> module_products(ProductCache& ring, const std::vector<PolyMap>& gens, int d) {
  std::vector<PolyMap> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : ring.products_of_degree(e)) out.push_back(m * g);
  }
  return out;
}

}  // namespace revnf

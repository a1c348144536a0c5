#include "revnf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace revnf {

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& [i, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) {
    if (sgn(q) == 0) continue;
    Integer x = q.get_num() * (l / q.get_den());
    out.emplace_back(i, std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void make_primitive(IntVector& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [i, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(v.front().second) < 0) g = -g;
  if (g == 1) return;
  for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector combine(const Integer& a, const IntVector& v, const Integer& b, const IntVector& w) {
  IntVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -b * w[j].second);
      ++j;
    } else {
      t = a * v[i].second - b * w[j].second;
      if (sgn(t) != 0) out.emplace_back(v[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

const Integer* entry_at(const IntVector& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

// Eliminates v's entry at the pivot of row r; r's first entry is its pivot.
void eliminate(IntVector& v, const Integer& coeff, const IntVector& r) {
  const Integer& p = r.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), coeff.get_mpz_t());
  Integer a = p / g;
  Integer b = coeff / g;
  v = combine(a, v, b, r);
  make_primitive(v);
}

}  // namespace

IntVector EchelonBasis::reduce(IntVector v) const {
  std::size_t cursor = 0;
  while (!v.empty() && !rows_.empty()) {
    bool progressed = false;
    auto it = std::lower_bound(v.begin(), v.end(), cursor,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    for (; it != v.end(); ++it) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      cursor = it->first + 1;
      Integer c = it->second;
      eliminate(v, c, row->second);
      progressed = true;
      break;
    }
    if (!progressed) break;
  }
  return v;
}

bool EchelonBasis::insert(IntVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  make_primitive(v);
  const std::size_t pivot = v.front().first;
  // Keep every pivot row reduced against the new pivot so reduce() stays a single pass.
  for (auto& [p, row] : rows_) {
    if (p > pivot) continue;
    if (const Integer* e = entry_at(row, pivot)) {
      Integer c = *e;
      eliminate(row, c, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<IntVector> EchelonBasis::rref() const {
  std::vector<IntVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  for (auto& row : out) make_primitive(row);
  return out;
}

std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, std::size_t ncols) {
  EchelonBasis eb;
  for (const auto& r : rows) eb.insert(r);
  std::vector<IntVector> rr = eb.rref();
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& r : rr) is_pivot.at(r.front().first) = true;
  // Column -> rows carrying a nonzero entry there.
  std::vector<std::vector<std::pair<std::size_t, const Integer*>>> by_col(ncols);
  for (std::size_t k = 0; k < rr.size(); ++k)
    for (std::size_t e = 1; e < rr[k].size(); ++e) by_col.at(rr[k][e].first).emplace_back(k, &rr[k][e].second);
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x;
    x.emplace_back(f, Rational(1));
    for (const auto& [k, val] : by_col[f]) {
      Rational q(-*val, rr[k].front().second);
      q.canonicalize();
      x.emplace_back(rr[k].front().first, q);
    }
    IntVector v = clear_denominators(x);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

Coordinates::Coordinates(const std::set<CoordKey>& keys) {
  for (const auto& k : keys) index_of(k);
}

std::size_t Coordinates::index_of(const CoordKey& k) {
  auto [it, inserted] = index_.emplace(k, keys_.size());
  if (inserted) keys_.push_back(k);
  return it->second;
}

IntVector Coordinates::embed(const Polynomial& p) {
  RatVector v;
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c.re()) != 0) v.emplace_back(index_of({0, m, 0}), c.re());
    if (sgn(c.im()) != 0) v.emplace_back(index_of({0, m, 1}), c.im());
  }
  return clear_denominators(v);
}

IntVector Coordinates::embed(const PolyMap& g) {
  RatVector v;
  for (std::size_t comp = 0; comp < g.ncomponents(); ++comp)
    for (const auto& [m, c] : g.stored(comp).terms()) {
      if (sgn(c.re()) != 0) v.emplace_back(index_of({comp, m, 0}), c.re());
      if (sgn(c.im()) != 0) v.emplace_back(index_of({comp, m, 1}), c.im());
    }
  return clear_denominators(v);
}

Polynomial Coordinates::decode_polynomial(const IntVector& v, std::size_t nvars) const {
  Polynomial p(nvars);
  for (const auto& [i, x] : v) {
    const CoordKey& k = keys_.at(i);
    p.add_term(k.monomial, k.part == 0 ? Coefficient(Rational(x)) : Coefficient(0, Rational(x)));
  }
  return p;
}

PolyMap Coordinates::decode_map(const IntVector& v, std::size_t blocks) const {
  std::vector<Polynomial> comps(blocks + 2, Polynomial(nvars_for(blocks)));
  for (const auto& [i, x] : v) {
    const CoordKey& k = keys_.at(i);
    comps.at(k.component)
        .add_term(k.monomial, k.part == 0 ? Coefficient(Rational(x)) : Coefficient(0, Rational(x)));
  }
  return PolyMap::from_components(std::move(comps));
}

void collect_keys(const Polynomial& p, std::set<CoordKey>& out) {
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c.re()) != 0) out.insert({0, m, 0});
    if (sgn(c.im()) != 0) out.insert({0, m, 1});
  }
}

void collect_keys(const PolyMap& g, std::set<CoordKey>& out) {
  for (std::size_t comp = 0; comp < g.ncomponents(); ++comp)
    for (const auto& [m, c] : g.stored(comp).terms()) {
      if (sgn(c.re()) != 0) out.insert({comp, m, 0});
      if (sgn(c.im()) != 0) out.insert({comp, m, 1});
    }
}

}  // namespace revnf

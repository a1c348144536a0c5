#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "revnf/poly.hpp"

namespace revnf {

/// Sparse integer vector: (index, value) pairs sorted by index, no zeros.
using IntVector = std::vector<std::pair<std::size_t, Integer>>;
using RatVector = std::vector<std::pair<std::size_t, Rational>>;

/// Clears denominators; the result spans the same line.
IntVector clear_denominators(const RatVector& v);
/// Divides by the content and makes the first entry positive.
void make_primitive(IntVector& v);
/// a*v - b*w.
IntVector combine(const Integer& a, const IntVector& v, const Integer& b, const IntVector& w);

/// Row echelon basis over Q kept as primitive integer rows (fraction-free elimination).
class EchelonBasis {
 public:
  /// Reduces v modulo the stored rows; zero iff v lies in their span.
  IntVector reduce(IntVector v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool insert(IntVector v);
  bool contains(const IntVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  /// Canonical reduced row echelon form: primitive rows, positive pivots, ascending pivots.
  std::vector<IntVector> rref() const;

 private:
  std::map<std::size_t, IntVector> rows_;
};

/// Integer basis of {x : M x = 0} for a matrix given by rows over ncols columns.
std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, std::size_t ncols);

/// (component, monomial, real/imaginary part) coordinate of an embedded element.
struct CoordKey {
  std::size_t component;
  Monomial monomial;
  int part;
  friend bool operator<(const CoordKey& a, const CoordKey& b) {
    if (a.component != b.component) return a.component < b.component;
    if (a.monomial != b.monomial) return b.monomial < a.monomial;
    return a.part < b.part;
  }
};

/// Real-linear coordinates for polynomials and maps over Q.
class Coordinates {
 public:
  Coordinates() = default;
  /// Pre-assigns indices in sorted key order.
  explicit Coordinates(const std::set<CoordKey>& keys);

  IntVector embed(const Polynomial& p);
  IntVector embed(const PolyMap& g);
  Polynomial decode_polynomial(const IntVector& v, std::size_t nvars) const;
  PolyMap decode_map(const IntVector& v, std::size_t blocks) const;

  std::size_t size() const { return keys_.size(); }

 private:
  std::size_t index_of(const CoordKey& k);

  std::map<CoordKey, std::size_t> index_;
  std::vector<CoordKey> keys_;
};

void collect_keys(const Polynomial& p, std::set<CoordKey>& out);
void collect_keys(const PolyMap& g, std::set<CoordKey>& out);

namespace detail {
inline IntVector embed_any(Coordinates& c, const Polynomial& p) { return c.embed(p); }
inline IntVector embed_any(Coordinates& c, const PolyMap& g) { return c.embed(g); }
inline Polynomial decode_any(const Coordinates& c, const IntVector& v, const Polynomial& proto) {
  return c.decode_polynomial(v, proto.nvars());
}
inline PolyMap decode_any(const Coordinates& c, const IntVector& v, const PolyMap& proto) {
  return c.decode_map(v, proto.blocks());
}
}  // namespace detail

/// Canonical basis of span(elems): the reduced echelon form in sorted coordinates.
template <class T>
std::vector<T> canonical_basis(const std::vector<T>& elems) {
  std::set<CoordKey> keys;
  for (const auto& e : elems) collect_keys(e, keys);
  Coordinates coords(keys);
  EchelonBasis eb;
  for (const auto& e : elems) eb.insert(detail::embed_any(coords, e));
  std::vector<T> out;
  if (elems.empty()) return out;
  for (const auto& row : eb.rref()) out.push_back(detail::decode_any(coords, row, elems.front()));
  return out;
}

/// Dimension of span(elems).
template <class T>
std::size_t span_rank(const std::vector<T>& elems) {
  Coordinates coords;
  EchelonBasis eb;
  for (const auto& e : elems) eb.insert(detail::embed_any(coords, e));
  return eb.rank();
}

/// Result of a span comparison; the witness lies in one span but not the other.
template <class T>
struct SpanComparison {
  bool equal = true;
  std::optional<T> witness;
  /// True when the witness comes from the first argument.
  bool witness_from_first = false;
};

template <class T>
SpanComparison<T> compare_spans(const std::vector<T>& a, const std::vector<T>& b) {
  Coordinates coords;
  EchelonBasis ea, eb;
  std::vector<IntVector> va, vb;
  for (const auto& e : a) va.push_back(detail::embed_any(coords, e));
  for (const auto& e : b) vb.push_back(detail::embed_any(coords, e));
  for (auto& v : va) ea.insert(v);
  for (auto& v : vb) eb.insert(v);
  SpanComparison<T> out;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!ea.contains(vb[k])) {
      out.equal = false;
      out.witness = b[k];
      return out;
    }
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!eb.contains(va[k])) {
      out.equal = false;
      out.witness = a[k];
      out.witness_from_first = true;
      return out;
    }
  return out;
}

}  // namespace revnf

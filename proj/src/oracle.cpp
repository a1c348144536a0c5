#include "revnf/oracle.hpp"

#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "revnf/errors.hpp"
#include "revnf/graded.hpp"
#include "revnf/linalg.hpp"

namespace revnf {

namespace {

// Torus weight of a monomial per weight row: sum_j w_j (e_zj - e_zbj).
bool torus_match(const Monomial& m, const ContinuousAction& s, std::size_t comp) {
  for (const auto& w : s.torus_weights) {
    long total = 0;
    for (std::size_t j = 1; j <= s.n; ++j) total += w[j - 1] * (m[var_z(j)] - m[var_zb(j)]);
    const long target = comp >= 2 ? w[comp - 2] : 0;
    if (total != target) return false;
  }
  return true;
}

bool passes_filter(const Monomial& m, const GroupContext& g, std::size_t comp) {
  return !g.continuous || torus_match(m, *g.continuous, comp);
}

// Real-linear basis of candidate elements.
std::vector<Polynomial> function_unknowns(const GroupContext& g, int d) {
  const std::size_t nv = nvars_for(g.n);
  std::vector<Polynomial> out;
  const Coefficient i = Coefficient::imaginary_unit();
  auto monos = monomials_of_degree(nv, d);
  for (const auto& m : monos) {
    if (!passes_filter(m, g, 0)) continue;
    const Monomial c = m.conj();
    if (c == m) {
      out.push_back(Polynomial::term(m, 1));
    } else if (c < m) {
      out.push_back(Polynomial::term(m, 1) + Polynomial::term(c, 1));
      out.push_back(Polynomial::term(m, i) + Polynomial::term(c, -i));
    }
  }
  return out;
}

std::vector<PolyMap> map_unknowns(const GroupContext& g, int d) {
  const std::size_t nv = nvars_for(g.n);
  std::vector<PolyMap> out;
  const Coefficient i = Coefficient::imaginary_unit();
  auto monos = monomials_of_degree(nv, d);
  auto in_comp = [&](std::size_t comp, Polynomial p) {
    std::vector<Polynomial> comps(g.n + 2, Polynomial(nv));
    comps[comp] = std::move(p);
    return PolyMap::from_components(std::move(comps));
  };
  for (std::size_t comp = 0; comp < g.n + 2; ++comp)
    for (const auto& m : monos) {
      if (!passes_filter(m, g, comp)) continue;
      if (comp >= 2) {
        out.push_back(in_comp(comp, Polynomial::term(m, 1)));
        out.push_back(in_comp(comp, Polynomial::term(m, i)));
        continue;
      }
      const Monomial c = m.conj();
      if (c == m) {
        out.push_back(in_comp(comp, Polynomial::term(m, 1)));
      } else if (c < m) {
        out.push_back(in_comp(comp, Polynomial::term(m, 1) + Polynomial::term(c, 1)));
        out.push_back(in_comp(comp, Polynomial::term(m, i) + Polynomial::term(c, -i)));
      }
    }
  return out;
}

// Sparse rational matrix assembled column by column; rows keyed by (constraint, component, monomial, part).
class ConstraintMatrix {
 public:
  void add(std::size_t col, std::size_t constraint, std::size_t comp, const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      if (sgn(c.re()) != 0) entry(constraint, comp, m, 0).emplace_back(col, c.re());
      if (sgn(c.im()) != 0) entry(constraint, comp, m, 1).emplace_back(col, c.im());
    }
  }
  void add(std::size_t col, std::size_t constraint, const PolyMap& g) {
    for (std::size_t comp = 0; comp < g.ncomponents(); ++comp) add(col, constraint, comp, g.stored(comp));
  }
  std::vector<IntVector> rows() const {
    std::vector<IntVector> out;
    for (const auto& [key, row] : rows_) out.push_back(clear_denominators(row));
    return out;
  }

 private:
  using Key = std::tuple<std::size_t, std::size_t, Monomial, int>;
  RatVector& entry(std::size_t constraint, std::size_t comp, const Monomial& m, int part) {
    return rows_[Key{constraint, comp, m, part}];
  }
  std::map<Key, RatVector> rows_;
};

template <class T>
std::vector<T> solve(const std::vector<T>& unknowns, const ConstraintMatrix& cm, const T& zero) {
  std::vector<T> out;
  for (const auto& x : nullspace(cm.rows(), unknowns.size())) {
    T e = zero;
    for (const auto& [k, v] : x) e += Coefficient(Rational(v)) * unknowns[k];
    out.push_back(std::move(e));
  }
  return canonical_basis(out);
}

std::size_t monomial_count(std::size_t nvars, int d) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), nvars + static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(d));
  return c.fits_ulong_p() ? c.get_ui() : std::numeric_limits<std::size_t>::max();
}

void check_limit(std::size_t count, std::size_t limit, const std::string& what) {
  if (count > limit)
    throw ResourceLimit(what + " needs " + std::to_string(count) + " candidates, limit " + std::to_string(limit));
}

}  // namespace

DegreeSlice slice(const GroupContext& group, int d, MembershipKind kind, std::size_t limit) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  DegreeSlice out;
  out.degree = d;
  out.kind = kind;
  const bool shear = group.continuous && group.continuous->has_shear;
  ConstraintMatrix cm;
  if (!out.holds_maps()) {
    check_limit(monomial_count(nvars_for(group.n), d), limit, "slice");
    auto unknowns = function_unknowns(group, d);
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const Polynomial& f = unknowns[k];
      if (shear) cm.add(k, 0, 0, f.derivative(var_x(2)));
      for (std::size_t gi = 0; gi < group.finite_generators.size(); ++gi) {
        const SignedElement& g = group.finite_generators[gi];
        const int s = kind == MembershipKind::invariant ? 1 : g.sign();
        cm.add(k, 1 + gi, 0, substitute_linear(f, g.matrix()) - Coefficient(s) * f);
      }
    }
    out.functions = solve(unknowns, cm, Polynomial(nvars_for(group.n)));
    return out;
  }
  check_limit(monomial_count(nvars_for(group.n), d) * (group.n + 2), limit, "slice");
  auto unknowns = map_unknowns(group, d);
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const PolyMap& g = unknowns[k];
    if (shear) {
      const Polynomial x1 = Polynomial::variable(g.nvars(), var_x(1));
      std::vector<Polynomial> comps;
      comps.push_back(g.stored(0).derivative(var_x(2)));
      comps.push_back(x1 * g.stored(1).derivative(var_x(2)) - g.stored(0));
      for (std::size_t c = 2; c < g.ncomponents(); ++c) comps.push_back(g.stored(c).derivative(var_x(2)));
      cm.add(k, 0, PolyMap::from_components(std::move(comps)));
    }
    for (std::size_t gi = 0; gi < group.finite_generators.size(); ++gi) {
      const SignedElement& gamma = group.finite_generators[gi];
      const int s = kind == MembershipKind::equivariant ? 1 : gamma.sign();
      cm.add(k, 1 + gi, g.compose_linear(gamma.matrix()) - Coefficient(s) * g.apply_linear(gamma.matrix()));
    }
  }
  out.maps = solve(unknowns, cm, PolyMap(group.n));
  return out;
}

DegreeSlice module_slice(const GeneratorSet& g, int d, std::size_t limit) {
  DegreeSlice out;
  out.degree = d;
  out.kind = MembershipKind::reversible_equivariant;
  std::vector<Polynomial> ring;
  for (const auto& r : g.ring_basis)
    if (r.poly.degree() > 0) ring.push_back(r.poly);
  ProductCache cache(ring);
  std::size_t count = 0;
  for (const auto& m : g.module_generators)
    if (!m.map.is_zero() && m.map.degree() <= d) count += cache.count_of_degree(d - m.map.degree());
  check_limit(count, limit, "module slice");
  out.maps = canonical_basis(module_products(cache, maps_of(g.module_generators), d));
  return out;
}

DegreeSlice ring_slice(const GeneratorSet& g, int d, std::size_t limit) {
  DegreeSlice out;
  out.degree = d;
  out.kind = MembershipKind::invariant;
  std::vector<Polynomial> ring;
  for (const auto& r : g.ring_basis)
    if (r.poly.degree() > 0) ring.push_back(r.poly);
  ProductCache cache(ring);
  check_limit(cache.count_of_degree(d), limit, "ring slice");
  out.functions = canonical_basis(cache.products_of_degree(d));
  return out;
}

std::string SliceComparison::witness_text() const {
  if (function_witness) return function_witness->to_string();
  if (map_witness) return map_witness->to_string();
  return "";
}

SliceComparison spans_equal(const DegreeSlice& a, const DegreeSlice& b) {
  if (a.degree != b.degree || a.kind != b.kind) throw std::invalid_argument("slices differ in degree or kind");
  SliceComparison out;
  if (a.holds_maps()) {
    auto c = compare_spans(a.maps, b.maps);
    out.equal = c.equal;
    out.map_witness = c.witness;
    out.witness_from_first = c.witness_from_first;
  } else {
    auto c = compare_spans(a.functions, b.functions);
    out.equal = c.equal;
    out.function_witness = c.witness;
    out.witness_from_first = c.witness_from_first;
  }
  return out;
}

nlohmann::json DimensionTable::to_json() const {
  nlohmann::json j;
  j["degrees"] = degrees;
  j["kinds"] = nlohmann::json::array();
  for (auto k : kinds) j["kinds"].push_back(to_string(k));
  j["dimensions"] = dims;
  return j;
}

std::string DimensionTable::to_text() const {
  std::vector<std::string> header = {"degree"};
  for (auto k : kinds) header.push_back(to_string(k));
  std::vector<std::size_t> width;
  for (const auto& h : header) width.push_back(h.size());
  std::ostringstream os;
  for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << header[c];
  os << "\n";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    os << std::setw(static_cast<int>(width[0])) << degrees[i];
    for (std::size_t k = 0; k < kinds.size(); ++k) os << "  " << std::setw(static_cast<int>(width[k + 1])) << dims[i][k];
    os << "\n";
  }
  return os.str();
}

DimensionTable dimension_table(const GroupContext& group, const std::vector<int>& degrees,
                               const std::vector<MembershipKind>& kinds, std::size_t limit) {
  DimensionTable t;
  t.degrees = degrees;
  t.kinds = kinds;
  for (int d : degrees) {
    std::vector<std::size_t> row;
    for (auto k : kinds) row.push_back(slice(group, d, k, limit).dimension());
    t.dims.push_back(std::move(row));
  }
  return t;
}

}  // namespace revnf

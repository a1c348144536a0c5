#include "revnf/group.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "revnf/errors.hpp"

namespace revnf {

std::optional<std::size_t> FiniteSignedGroup::find(const LinearMap& m) const {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k].matrix() == m) return k;
  return std::nullopt;
}

FiniteSignedGroup close_group(const std::vector<SignedElement>& generators, std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("close_group needs at least one generator");
  const std::size_t nv = generators.front().nvars();
  FiniteSignedGroup g;
  std::map<LinearMap, std::size_t> index;
  auto add = [&](const SignedElement& e) -> std::size_t {
    auto it = index.find(e.matrix());
    if (it != index.end()) {
      if (g.elements[it->second].sign() != e.sign())
        throw SignInconsistency("the same group element is reached with signs +1 and -1");
      return it->second;
    }
    if (g.elements.size() >= max_order)
      throw OrderExceeded("group order exceeds " + std::to_string(max_order));
    index.emplace(e.matrix(), g.elements.size());
    g.elements.push_back(e);
    return g.elements.size() - 1;
  };
  add(SignedElement(LinearMap::identity(nv), 1, "id"));
  for (const auto& gen : generators) {
    if (gen.nvars() != nv) throw DimensionError("generators act on different spaces");
    g.generator_indices.push_back(add(gen));
  }
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < g.elements.size(); ++k) queue.push_back(k);
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      const std::size_t before = g.elements.size();
      add(g.elements[k] * gen);
      if (g.elements.size() > before) queue.push_back(g.elements.size() - 1);
    }
  }
  return g;
}

GroupContext GroupContext::with(const SignedElement& g) const {
  GroupContext out = *this;
  out.finite_generators.push_back(g);
  return out;
}

std::string to_string(MembershipKind k) {
  switch (k) {
    case MembershipKind::invariant: return "invariant";
    case MembershipKind::anti_invariant: return "anti_invariant";
    case MembershipKind::equivariant: return "equivariant";
    case MembershipKind::reversible_equivariant: return "reversible_equivariant";
  }
  return "";
}

bool membership(const Polynomial& f, const GroupContext& group, MembershipKind kind) {
  if (kind != MembershipKind::invariant && kind != MembershipKind::anti_invariant)
    throw std::invalid_argument("functions are tested for invariance or anti-invariance");
  if (f.blocks() != group.n) throw DimensionError("function and group act on different spaces");
  if (group.continuous && !infinitesimal_check(f, *group.continuous)) return false;
  for (const auto& g : group.finite_generators) {
    const int s = kind == MembershipKind::anti_invariant ? g.sign() : 1;
    Polynomial lhs = substitute_linear(f, g.matrix());
    if (s == 1 ? lhs != f : lhs != -f) return false;
  }
  return true;
}

bool membership(const PolyMap& g, const GroupContext& group, MembershipKind kind) {
  if (kind != MembershipKind::equivariant && kind != MembershipKind::reversible_equivariant)
    throw std::invalid_argument("maps are tested for equivariance or reversible equivariance");
  if (g.blocks() != group.n) throw DimensionError("map and group act on different spaces");
  if (group.continuous && !infinitesimal_check(g, *group.continuous)) return false;
  for (const auto& gamma : group.finite_generators) {
    const int s = kind == MembershipKind::reversible_equivariant ? gamma.sign() : 1;
    PolyMap lhs = g.compose_linear(gamma.matrix());
    PolyMap rhs = g.apply_linear(gamma.matrix());
    if (s == 1 ? lhs != rhs : lhs != -rhs) return false;
  }
  return true;
}

bool anticommute_check(const SignedElement& gamma, const LinearPart& L) {
  if (gamma.nvars() != L.nvars()) throw DimensionError("element and linear part act on different spaces");
  auto anti = [&](const LinearMap& x) {
    const LinearMap s = gamma.matrix() * x + x * gamma.matrix();
    return s == LinearMap::zero(L.nvars());
  };
  if (!anti(L.nilpotent_matrix())) return false;
  for (const auto& w : L.torus_weights())
    if (!anti(L.rotation_matrix(w))) return false;
  return true;
}

namespace {

LinearMap shear_generator(std::size_t nvars) {
  LinearMap m = LinearMap::zero(nvars);
  m.set(1, 0, 1);
  return m;
}

LinearMap torus_generator(std::size_t n, const std::vector<long>& w) {
  LinearMap m = LinearMap::zero(nvars_for(n));
  for (std::size_t j = 1; j <= n; ++j) {
    m.set(var_z(j), var_z(j), Coefficient(0, w[j - 1]));
    m.set(var_zb(j), var_zb(j), Coefficient(0, -w[j - 1]));
  }
  return m;
}

// Solves sum_i b_i w_i = c exactly; returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_weights(const std::vector<std::vector<long>>& w,
                                                   const std::vector<Rational>& c) {
  const std::size_t k = w.size();
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = w[i][j];
    a[j][k] = c[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < n; ++col) {
    std::size_t p = r;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == r || sgn(a[q][col]) == 0) continue;
      Rational f = a[q][col];
      for (std::size_t t = 0; t <= k; ++t) a[q][t] -= f * a[r][t];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t q = r; q < n; ++q)
    if (sgn(a[q][k]) != 0) return std::nullopt;
  std::vector<Rational> b(k, 0);
  for (std::size_t q = 0; q < r; ++q) b[pivot_col[q]] = a[q][k];
  return b;
}

std::string describe(const std::string& kappa, const std::string& what) {
  return kappa + " * " + what + " * " + kappa + "^-1";
}

}  // namespace

SemidirectReport check_semidirect_condition(const GroupContext& gamma1, const SignedElement& kappa) {
  SemidirectReport report;
  const std::size_t nv = nvars_for(gamma1.n);
  if (kappa.nvars() != nv) throw DimensionError("kappa acts on a different space");
  const LinearMap kinv = kappa.matrix().inverse();
  const std::string kn = kappa.name().empty() ? "kappa" : kappa.name();

  if (!gamma1.finite_generators.empty()) {
    FiniteSignedGroup fin = close_group(gamma1.finite_generators);
    for (const auto& g : gamma1.finite_generators) {
      const LinearMap c = kappa.matrix() * g.matrix() * kinv;
      const std::string what = describe(kn, g.name().empty() ? "gamma" : g.name());
      auto idx = fin.find(c);
      if (!idx) throw ConditionViolated(what + " is not in Gamma1");
      report.checks.push_back(what + " = " + (fin.elements[*idx].name().empty() ? "element" : fin.elements[*idx].name()));
    }
  }

  if (gamma1.continuous) {
    const ContinuousAction& s = *gamma1.continuous;
    std::vector<std::pair<std::string, LinearMap>> gens;
    if (s.has_shear) gens.emplace_back("N", shear_generator(nv));
    for (std::size_t i = 0; i < s.torus_weights.size(); ++i)
      gens.emplace_back("E" + std::to_string(i + 1), torus_generator(s.n, s.torus_weights[i]));
    for (const auto& [gname, x] : gens) {
      const std::string what = describe(kn, gname);
      LinearMap m = kappa.matrix() * x * kinv;
      const Coefficient a = m(1, 0);
      if (!a.is_real() || (!s.has_shear && !a.is_zero()))
        throw ConditionViolated(what + " leaves the Lie algebra of S");
      m.set(1, 0, 0);
      std::vector<Rational> c(s.n);
      bool ok = true;
      for (std::size_t r = 0; r < nv && ok; ++r)
        for (std::size_t col = 0; col < nv && ok; ++col) {
          if (r == col && r >= 2) continue;
          ok = m(r, col).is_zero();
        }
      for (std::size_t j = 1; j <= s.n && ok; ++j) {
        const Coefficient& dz = m(var_z(j), var_z(j));
        const Coefficient& dzb = m(var_zb(j), var_zb(j));
        ok = sgn(dz.re()) == 0 && dzb == dz.conj();
        c[j - 1] = dz.im();
      }
      if (!ok) throw ConditionViolated(what + " leaves the Lie algebra of S");
      auto b = solve_weights(s.torus_weights, c);
      if (!b) throw ConditionViolated(what + " is not a combination of the torus generators");
      std::string combo = rational_text(a.re()) + "*N";
      for (std::size_t i = 0; i < b->size(); ++i) {
        if ((*b)[i].get_den() != 1)
          throw ConditionViolated(what + " has a non-integer torus coefficient");
        combo += " + " + rational_text((*b)[i]) + "*E" + std::to_string(i + 1);
      }
      report.checks.push_back(what + " = " + combo);
    }
  }
  return report;
}

int ProductSigma::sigma(const LinearMap& m) const {
  auto idx = product.find(m);
  if (!idx) throw std::invalid_argument("element not in the product group");
  return product.elements[*idx].sign();
}

int ProductSigma::sigma_tilde_of(const LinearMap& m) const {
  auto idx = product.find(m);
  if (!idx) throw std::invalid_argument("element not in the product group");
  return sigma_tilde[*idx];
}

ProductSigma product_sigma(const FiniteSignedGroup& gamma1, const SignedElement& kappa) {
  const LinearMap kinv = kappa.matrix().inverse();
  for (std::size_t gi : gamma1.generator_indices) {
    const SignedElement& g = gamma1.elements[gi];
    auto idx = gamma1.find(kappa.matrix() * g.matrix() * kinv);
    if (!idx) throw NotAHomomorphism("conjugation by kappa does not preserve Gamma1");
    if (gamma1.elements[*idx].sign() != g.sign())
      throw NotAHomomorphism("conjugation by kappa does not preserve sigma1 on '" + g.name() + "'");
  }
  ProductSigma out;
  for (int k = 0; k < 2; ++k)
    for (const auto& e : gamma1.elements) {
      SignedElement p = k == 0 ? e : e * kappa;
      const int st = k == 0 ? 1 : kappa.sign();
      if (auto idx = out.product.find(p.matrix())) {
        if (out.product.elements[*idx].sign() != p.sign() || out.sigma_tilde[*idx] != st)
          throw NotAHomomorphism("kappa lies in Gamma1 with a conflicting sign");
        continue;
      }
      out.product.elements.push_back(p);
      out.sigma_tilde.push_back(st);
    }
  for (std::size_t gi : gamma1.generator_indices) out.product.generator_indices.push_back(gi);
  if (auto idx = out.product.find(kappa.matrix())) out.product.generator_indices.push_back(*idx);
  return out;
}

}  // namespace revnf

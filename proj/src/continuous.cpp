#include "revnf/continuous.hpp"

#include "revnf/errors.hpp"
#include "revnf/linalg.hpp"

namespace revnf {

LinearPart::LinearPart(std::size_t n, std::vector<std::vector<long>> relations, std::vector<std::string> omegas)
    : n_(n), omegas_(std::move(omegas)), relations_(std::move(relations)) {
  if (n_ == 0) throw DimensionError("the linear part needs at least one rotation block");
  if (omegas_.empty())
    for (std::size_t j = 1; j <= n_; ++j) omegas_.push_back("omega" + std::to_string(j));
  if (omegas_.size() != n_) throw DimensionError("one frequency label per rotation block is required");
  std::vector<IntVector> rows;
  for (const auto& r : relations_) {
    if (r.size() != n_) throw DimensionError("resonance relation has the wrong length");
    IntVector v;
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j] != 0) v.emplace_back(j, Integer(r[j]));
    rows.push_back(std::move(v));
  }
  for (const auto& v : nullspace(rows, n_)) {
    std::vector<long> w(n_, 0);
    for (const auto& [j, x] : v) w[j] = x.get_si();
    weights_.push_back(std::move(w));
  }
  for (std::size_t j = 0; j < n_; ++j) {
    bool free = false;
    for (const auto& w : weights_) free = free || w[j] != 0;
    if (!free) throw DimensionError("resonance relations force " + omegas_[j] + " = 0");
  }
}

LinearMap LinearPart::nilpotent_matrix() const {
  LinearMap m = LinearMap::zero(nvars());
  m.set(0, 1, 1);
  return m;
}

LinearMap LinearPart::rotation_matrix(const std::vector<long>& w) const {
  LinearMap m = LinearMap::zero(nvars());
  for (std::size_t j = 1; j <= n_; ++j) {
    m.set(var_z(j), var_z(j), Coefficient(0, -w.at(j - 1)));
    m.set(var_zb(j), var_zb(j), Coefficient(0, w.at(j - 1)));
  }
  return m;
}

SGroupData structure_of_S(const LinearPart& L) {
  SGroupData s;
  s.action.n = L.n();
  s.action.torus_weights = L.torus_weights();
  s.action.has_shear = true;
  return s;
}

namespace {

// Sum_j w_j (p_j - q_j) for a monomial.
long torus_charge(const Monomial& m, const std::vector<long>& w) {
  long c = 0;
  for (std::size_t j = 1; j <= w.size(); ++j) c += w[j - 1] * (m[var_z(j)] - m[var_zb(j)]);
  return c;
}

bool torus_ok(const Polynomial& p, const ContinuousAction& s, std::size_t block) {
  for (const auto& [m, c] : p.terms())
    for (const auto& w : s.torus_weights)
      if (torus_charge(m, w) != (block == 0 ? 0 : w[block - 1])) return false;
  return true;
}

}  // namespace

bool infinitesimal_check(const Polynomial& f, const ContinuousAction& s) {
  if (f.blocks() != s.n) throw DimensionError("polynomial and group act on different spaces");
  if (!torus_ok(f, s, 0)) return false;
  return !s.has_shear || f.derivative(var_x(2)).is_zero();
}

bool infinitesimal_check(const PolyMap& g, const ContinuousAction& s) {
  if (g.blocks() != s.n) throw DimensionError("map and group act on different spaces");
  for (std::size_t c = 0; c < g.ncomponents(); ++c)
    if (!torus_ok(g.stored(c), s, c < 2 ? 0 : c - 1)) return false;
  if (!s.has_shear) return true;
  const Polynomial x1 = Polynomial::variable(g.nvars(), var_x(1));
  if (!g.stored(0).derivative(var_x(2)).is_zero()) return false;
  if (x1 * g.stored(1).derivative(var_x(2)) != g.stored(0)) return false;
  for (std::size_t c = 2; c < g.ncomponents(); ++c)
    if (!g.stored(c).derivative(var_x(2)).is_zero()) return false;
  return true;
}

SignedElement make_phi(std::size_t n) {
  return SignedElement(make_psi(std::vector<int>(n + 1, 1)).matrix(), -1, "phi");
}

SignedElement make_psi(const std::vector<int>& signs) {
  if (signs.size() < 2) throw DimensionError("psi needs signs (a0, a1, ..., an) with n >= 1");
  for (int a : signs)
    if (a != 1 && a != -1) throw std::invalid_argument("involution signs must be +1 or -1");
  const std::size_t n = signs.size() - 1;
  LinearMap m = LinearMap::zero(nvars_for(n));
  m.set(0, 0, signs[0]);
  m.set(1, 1, -signs[0]);
  for (std::size_t j = 1; j <= n; ++j) {
    m.set(var_z(j), var_zb(j), signs[j]);
    m.set(var_zb(j), var_z(j), signs[j]);
  }
  return SignedElement(std::move(m), -1, "psi");
}

std::vector<InvolutionPair> enumerate_involution_pairs(const LinearPart& L) {
  std::vector<InvolutionPair> out;
  const std::size_t count = std::size_t{1} << (L.n() + 1);
  SignedElement phi = make_phi(L.n());
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> signs(L.n() + 1);
    for (std::size_t k = 0; k <= L.n(); ++k) signs[k] = (mask >> (L.n() - k)) & 1U ? -1 : 1;
    out.push_back({signs, phi, make_psi(signs)});
  }
  return out;
}

char type_letter(NormalFormType t) { return static_cast<char>('A' + static_cast<int>(t)); }

int resonance_sign(int a1, int a2, int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("resonance exponents must be positive");
  int s1 = (a1 == -1 && n2 % 2 == 1) ? -1 : 1;
  int s2 = (a2 == -1 && n1 % 2 == 1) ? -1 : 1;
  return s1 * s2;
}

NormalFormType classify_type(int a0, int a1, int a2, int n1, int n2) {
  const int e = resonance_sign(a1, a2, n1, n2);
  if (a0 == 1) return e == 1 ? NormalFormType::A : NormalFormType::B;
  return e == 1 ? NormalFormType::C : NormalFormType::D;
}

}  // namespace revnf

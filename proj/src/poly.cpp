#include "revnf/poly.hpp"

#include <numeric>
#include <stdexcept>

#include "revnf/errors.hpp"

namespace revnf {

std::string variable_name(std::size_t v) {
  if (v < 2) return "x" + std::to_string(v + 1);
  std::size_t j = v / 2;
  return (v % 2 == 0 ? "z" : "zb") + std::to_string(j);
}

std::string variable_latex(std::size_t v) {
  if (v < 2) return "x_{" + std::to_string(v + 1) + "}";
  std::size_t j = v / 2;
  return (v % 2 == 0 ? "z_{" : "\\bar{z}_{") + std::to_string(j) + "}";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_) {
    if (x < 0) throw std::invalid_argument("negative exponent");
    degree_ += x;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v, int power) {
  std::vector<int> e(nvars, 0);
  e.at(v) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.e_.size() != e_.size()) throw std::invalid_argument("monomial size mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  out.degree_ += o.degree_;
  return out;
}

Monomial Monomial::conj() const {
  Monomial out(*this);
  for (std::size_t v = 2; v + 1 < e_.size(); v += 2) std::swap(out.e_[v], out.e_[v + 1]);
  return out;
}

std::vector<int> Monomial::multidegree() const {
  std::vector<int> md(1 + blocks_for(e_.size()), 0);
  md[0] = e_[0] + e_[1];
  for (std::size_t j = 1; j < md.size(); ++j) md[j] = e_[var_z(j)] + e_[var_zb(j)];
  return md;
}

bool Monomial::divided_by_variable(std::size_t v, Monomial& out) const {
  if (e_[v] == 0) return false;
  out = *this;
  --out.e_[v];
  --out.degree_;
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  // Lexicographically descending enumeration of compositions of d.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
    e[pos] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Coefficient& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t v) {
  return term(Monomial::variable(nvars, v), Coefficient(1));
}

Polynomial Polynomial::term(const Monomial& m, const Coefficient& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Coefficient Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Polynomial Polynomial::homogeneous_component(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.conj(), c.conj());
  return out;
}

bool Polynomial::is_real() const {
  for (const auto& [m, c] : terms_)
    if (coeff(m.conj()) != c.conj()) return false;
  return true;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  Polynomial out(nvars_);
  Monomial q;
  for (const auto& [m, c] : terms_)
    if (m.divided_by_variable(v, q)) out.add_term(q, c * Coefficient(m[v]));
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Coefficient& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable sets");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Coefficient& c, const Polynomial& p) { return c * p; }
Polynomial homogeneous_component(const Polynomial& p, int d) { return p.homogeneous_component(d); }

// --------------------------------------------------------------- LinearMap

LinearMap::LinearMap(std::vector<std::vector<Coefficient>> rows) : a_(std::move(rows)) {
  for (const auto& r : a_)
    if (r.size() != a_.size()) throw std::invalid_argument("linear map must be square");
}

LinearMap LinearMap::zero(std::size_t nvars) {
  return LinearMap(std::vector<std::vector<Coefficient>>(nvars, std::vector<Coefficient>(nvars)));
}

LinearMap LinearMap::identity(std::size_t nvars) {
  LinearMap m = zero(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m.a_[i][i] = 1;
  return m;
}

bool LinearMap::is_conjugation_compatible() const {
  const std::size_t n = a_.size();
  if (n < 2 || n % 2 != 0) return false;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a_[r][c].conj() != a_[conj_var(r)][conj_var(c)]) return false;
  return true;
}

bool LinearMap::is_monomial() const {
  for (const auto& r : a_) {
    int nz = 0;
    for (const auto& c : r) nz += c.is_zero() ? 0 : 1;
    if (nz > 1) return false;
  }
  return true;
}

bool LinearMap::is_identity() const { return *this == identity(a_.size()); }

namespace {

// Row-reduces in place; returns the rank.
std::size_t row_reduce(std::vector<std::vector<Coefficient>>& m, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Coefficient inv = Coefficient(1) / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Coefficient f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t LinearMap::rank() const {
  auto m = a_;
  return row_reduce(m, a_.size());
}

std::size_t LinearMap::fix_dimension() const {
  return a_.size() - (*this - identity(a_.size())).rank();
}

LinearMap LinearMap::inverse() const {
  const std::size_t n = a_.size();
  std::vector<std::vector<Coefficient>> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m[r] = a_[r];
    m[r].resize(2 * n);
    m[r][n + r] = 1;
  }
  if (row_reduce(m, n) != n) throw DimensionError("linear map is singular");
  LinearMap out = zero(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.a_[r][c] = m[r][n + c];
  return out;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  const std::size_t n = a_.size();
  if (o.size() != n) throw std::invalid_argument("linear map size mismatch");
  LinearMap out = zero(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a_[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!o.a_[k][c].is_zero()) out.a_[r][c] += a_[r][k] * o.a_[k][c];
    }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (o.size() != size()) throw std::invalid_argument("linear map size mismatch");
  LinearMap out(*this);
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c) out.a_[r][c] += o.a_[r][c];
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + o * Coefficient(-1); }

LinearMap LinearMap::operator*(const Coefficient& k) const {
  LinearMap out(*this);
  for (auto& r : out.a_)
    for (auto& c : r) c *= k;
  return out;
}

bool operator<(const LinearMap& a, const LinearMap& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto& x = a.a_[r][c];
      const auto& y = b.a_[r][c];
      if (x.re() != y.re()) return x.re() < y.re();
      if (x.im() != y.im()) return x.im() < y.im();
    }
  return false;
}

// ------------------------------------------------------------ substitution

Polynomial substitute_linear(const Polynomial& p, const LinearMap& a) {
  const std::size_t n = p.nvars();
  if (a.size() != n) throw IncompatibleMatrix("matrix size does not match the variable count");
  if (!a.is_conjugation_compatible())
    throw IncompatibleMatrix("matrix does not respect the conjugation pairing");
  Polynomial out(n);
  if (a.is_monomial()) {
    std::vector<std::size_t> target(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!a(k, j).is_zero()) target[k] = j;
    for (const auto& [m, c] : p.terms()) {
      std::vector<int> e(n, 0);
      Coefficient coef = c;
      bool vanishes = false;
      for (std::size_t k = 0; k < n && !vanishes; ++k) {
        if (m[k] == 0) continue;
        if (target[k] == n) {
          vanishes = true;
          break;
        }
        e[target[k]] += m[k];
        for (int t = 0; t < m[k]; ++t) coef *= a(k, target[k]);
      }
      if (!vanishes) out.add_term(Monomial(std::move(e)), coef);
    }
    return out;
  }
  std::vector<Polynomial> forms;
  forms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial f(n);
    for (std::size_t j = 0; j < n; ++j) f.add_term(Monomial::variable(n, j), a(k, j));
    forms.push_back(std::move(f));
  }
  std::map<std::pair<std::size_t, int>, Polynomial> powers;
  auto power = [&](std::size_t k, int e) -> const Polynomial& {
    auto it = powers.find({k, e});
    if (it != powers.end()) return it->second;
    Polynomial r = forms[k].pow(static_cast<unsigned>(e));
    return powers.emplace(std::make_pair(k, e), std::move(r)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t k = 0; k < n && !t.is_zero(); ++k)
      if (m[k] > 0) t *= power(k, m[k]);
    out += t;
  }
  return out;
}

// ----------------------------------------------------------------- PolyMap

PolyMap::PolyMap(std::size_t blocks) : comps_(blocks + 2, Polynomial(nvars_for(blocks))) {}

PolyMap::PolyMap(Polynomial x1, Polynomial x2, std::vector<Polynomial> z) {
  comps_.reserve(z.size() + 2);
  comps_.push_back(std::move(x1));
  comps_.push_back(std::move(x2));
  for (auto& p : z) comps_.push_back(std::move(p));
  const std::size_t nv = nvars_for(comps_.size() - 2);
  for (const auto& c : comps_)
    if (c.nvars() != nv) throw std::invalid_argument("map component over wrong variable set");
}

PolyMap PolyMap::from_components(std::vector<Polynomial> comps) {
  if (comps.size() < 2) throw std::invalid_argument("a map needs at least the two x components");
  Polynomial x1 = comps[0];
  Polynomial x2 = comps[1];
  std::vector<Polynomial> z(comps.begin() + 2, comps.end());
  return PolyMap(std::move(x1), std::move(x2), std::move(z));
}

Polynomial PolyMap::component(std::size_t v) const {
  if (v < 2) return comps_[v];
  const std::size_t j = v / 2;
  return v % 2 == 0 ? comps_[1 + j] : comps_[1 + j].conj();
}

bool PolyMap::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool PolyMap::is_real() const { return comps_[0].is_real() && comps_[1].is_real(); }

int PolyMap::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

bool PolyMap::is_homogeneous() const {
  int d = -1;
  for (const auto& c : comps_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    if (d >= 0 && c.degree() != d) return false;
    d = c.degree();
  }
  return true;
}

PolyMap PolyMap::operator-() const {
  PolyMap out(*this);
  for (auto& c : out.comps_) c = -c;
  return out;
}

PolyMap& PolyMap::operator+=(const PolyMap& o) {
  if (o.comps_.size() != comps_.size()) throw std::invalid_argument("map size mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

PolyMap& PolyMap::operator-=(const PolyMap& o) {
  if (o.comps_.size() != comps_.size()) throw std::invalid_argument("map size mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

PolyMap operator*(const Polynomial& f, const PolyMap& g) {
  PolyMap out(g);
  for (auto& c : out.comps_) c = f * c;
  return out;
}

PolyMap operator*(const Coefficient& k, const PolyMap& g) {
  PolyMap out(g);
  for (auto& c : out.comps_) c *= k;
  return out;
}

PolyMap PolyMap::compose_linear(const LinearMap& a) const {
  PolyMap out(*this);
  for (auto& c : out.comps_) c = substitute_linear(c, a);
  return out;
}

PolyMap PolyMap::apply_linear(const LinearMap& a) const {
  const std::size_t nv = nvars();
  if (a.size() != nv) throw IncompatibleMatrix("matrix size does not match the variable count");
  if (!a.is_conjugation_compatible())
    throw IncompatibleMatrix("matrix does not respect the conjugation pairing");
  std::vector<Polynomial> full;
  full.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) full.push_back(component(v));
  PolyMap out(blocks());
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    const std::size_t row = component_variable(c);
    Polynomial acc(nv);
    for (std::size_t j = 0; j < nv; ++j)
      if (!a(row, j).is_zero()) acc += a(row, j) * full[j];
    out.comps_[c] = std::move(acc);
  }
  return out;
}

}  // namespace revnf

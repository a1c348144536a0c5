#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revnf/coefficient.hpp"

namespace revnf {

// Variable layout: (x1, x2, z1, zb1, ..., zn, zbn). Blocks j are 1-based.
constexpr std::size_t nvars_for(std::size_t n) { return 2 * n + 2; }
constexpr std::size_t blocks_for(std::size_t nvars) { return (nvars - 2) / 2; }
constexpr std::size_t var_x(std::size_t k) { return k - 1; }
constexpr std::size_t var_z(std::size_t j) { return 2 * j; }
constexpr std::size_t var_zb(std::size_t j) { return 2 * j + 1; }
/// Index of the conjugate partner of a variable (x's are self-paired).
constexpr std::size_t conj_var(std::size_t v) { return v < 2 ? v : (v % 2 == 0 ? v + 1 : v - 1); }

std::string variable_name(std::size_t v);
std::string variable_latex(std::size_t v);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t v, int power = 1);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t v) const { return e_[v]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Swaps every z_j / zb_j exponent pair.
  Monomial conj() const;
  /// Exponent of x-variables plus, per block, the z and zb exponents.
  std::vector<int> multidegree() const;
  /// Derivative: returns false if the variable is absent.
  bool divided_by_variable(std::size_t v, Monomial& out) const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Graded lexicographic order, x1 > x2 > z1 > zb1 > ...
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.e_ < b.e_;
  }

 private:
  std::vector<int> e_;
  int degree_ = 0;
};

/// Monomials of total degree d in nvars variables, in descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

class LinearMap;

class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  explicit Polynomial(std::size_t nvars = 2) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Coefficient& c);
  static Polynomial variable(std::size_t nvars, std::size_t v);
  static Polynomial term(const Monomial& m, const Coefficient& c);

  std::size_t nvars() const { return nvars_; }
  std::size_t blocks() const { return blocks_for(nvars_); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coeff(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(int d) const;

  Polynomial conj() const;
  bool is_real() const;
  Polynomial derivative(std::size_t v) const;
  Polynomial pow(unsigned k) const;

  /// Largest monomial in grlex order; the polynomial must be nonzero.
  const Monomial& leading_monomial() const;
  const Coefficient& leading_coefficient() const;

  void add_term(const Monomial& m, const Coefficient& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Coefficient& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coefficient& c) { return a *= c; }
  friend Polynomial operator*(const Coefficient& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;
  std::string to_latex() const;
  /// Parses the canonical text syntax (also accepts any well-formed expression).
  static Polynomial parse(std::string_view text, std::size_t nvars);

 private:
  void check_same(const Polynomial& o) const;

  std::size_t nvars_;
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Coefficient& c, const Polynomial& p);
Polynomial homogeneous_component(const Polynomial& p, int d);

/// Square Gaussian-rational matrix acting on the coordinate vector.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::vector<std::vector<Coefficient>> rows);
  static LinearMap identity(std::size_t nvars);
  static LinearMap zero(std::size_t nvars);

  std::size_t size() const { return a_.size(); }
  const Coefficient& operator()(std::size_t r, std::size_t c) const { return a_[r][c]; }
  void set(std::size_t r, std::size_t c, const Coefficient& v) { a_[r][c] = v; }
  const std::vector<std::vector<Coefficient>>& rows() const { return a_; }

  /// conj(A) = P A P where P swaps each z/zb pair.
  bool is_conjugation_compatible() const;
  /// At most one nonzero per row.
  bool is_monomial() const;
  bool is_identity() const;
  std::size_t rank() const;
  /// Complex dimension of ker(A - I), which equals the real dimension of Fix(A).
  std::size_t fix_dimension() const;
  /// Throws DimensionError if singular.
  LinearMap inverse() const;

  LinearMap operator*(const LinearMap& o) const;
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator*(const Coefficient& c) const;
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.a_ == b.a_; }
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }
  friend bool operator<(const LinearMap& a, const LinearMap& b);

 private:
  std::vector<std::vector<Coefficient>> a_;
};

/// p(Av): each variable k is replaced by sum_j A(k, j) v_j.
/// Throws IncompatibleMatrix if A does not respect the conjugation pairing.
Polynomial substitute_linear(const Polynomial& p, const LinearMap& a);

/// Polynomial map with components (x1, x2, z1..zn); zb_j components are conj(z_j).
class PolyMap {
 public:
  explicit PolyMap(std::size_t blocks = 0);
  PolyMap(Polynomial x1, Polynomial x2, std::vector<Polynomial> z);
  /// Builds a map from stored components (x1, x2, z1, ..., zn).
  static PolyMap from_components(std::vector<Polynomial> comps);

  std::size_t blocks() const { return comps_.size() - 2; }
  std::size_t nvars() const { return nvars_for(blocks()); }
  /// Stored components: 0 = x1, 1 = x2, 1 + j = z_j.
  std::size_t ncomponents() const { return comps_.size(); }
  const Polynomial& stored(std::size_t c) const { return comps_[c]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  /// Component for a coordinate variable, including the implicit zb ones.
  Polynomial component(std::size_t v) const;
  /// Variable index of a stored component.
  static std::size_t component_variable(std::size_t c) { return c < 2 ? c : 2 * (c - 1); }

  bool is_zero() const;
  bool is_real() const;
  int degree() const;
  bool is_homogeneous() const;

  PolyMap operator-() const;
  PolyMap& operator+=(const PolyMap& o);
  PolyMap& operator-=(const PolyMap& o);
  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
  friend PolyMap operator*(const Polynomial& f, const PolyMap& g);
  friend PolyMap operator*(const Coefficient& c, const PolyMap& g);
  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

  /// g o A.
  PolyMap compose_linear(const LinearMap& a) const;
  /// A g, reading zb rows from the conjugates of z rows.
  PolyMap apply_linear(const LinearMap& a) const;

  /// "(p_x1, p_x2, p_z1, ...)".
  std::string to_string() const;
  static PolyMap parse(std::string_view text, std::size_t blocks);

 private:
  std::vector<Polynomial> comps_;
};

}  // namespace revnf

#pragma once

// Slice dimensions for non-resonant S on R^2 x C^n in real coordinates
// (x1, x2, a1, b1, ..., an, bn) with z_j = a_j + i b_j, by dense rational elimination.
// Shares no code with the library apart from GMP.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

namespace real_oracle {

using Exp = std::vector<int>;
using Poly = std::map<Exp, mpq_class>;

inline void add_to(Poly& p, const Exp& e, const mpq_class& c) {
  mpq_class& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline std::vector<Exp> monomials(std::size_t nv, int d) {
  std::vector<Exp> out;
  Exp e(nv, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == nv) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline Poly derivative(const Poly& p, std::size_t v) {
  Poly out;
  for (const auto& [e, c] : p)
    if (e[v] > 0) {
      Exp f = e;
      --f[v];
      add_to(out, f, c * e[v]);
    }
  return out;
}

inline Poly times_var(const Poly& p, std::size_t v, const mpq_class& s = 1) {
  Poly out;
  for (const auto& [e, c] : p) {
    Exp f = e;
    ++f[v];
    add_to(out, f, c * s);
  }
  return out;
}

inline void add_scaled(Poly& acc, const Poly& p, const mpq_class& s) {
  for (const auto& [e, c] : p) add_to(acc, e, c * s);
}

// Substitution by a diagonal sign matrix.
inline Poly diagonal(const Poly& p, const std::vector<int>& delta) {
  Poly out;
  for (const auto& [e, c] : p) {
    int s = 1;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] % 2) s *= delta[v];
    out[e] = c * s;
  }
  return out;
}

// Rank of a sparse rational matrix.
class Rank {
 public:
  void insert(std::map<std::size_t, mpq_class> row) {
    for (const auto& [piv, r] : pivots_) {
      auto it = row.find(piv);
      if (it == row.end()) continue;
      const mpq_class f = it->second;
      for (const auto& [k, v] : r) {
        mpq_class& slot = row[k];
        slot -= f * v;
        if (slot == 0) row.erase(k);
      }
    }
    if (row.empty()) return;
    const auto [p, lead] = *row.begin();
    const mpq_class inv = 1 / lead;
    for (auto& [k, v] : row) v *= inv;
    for (auto& [piv, r] : pivots_) {
      auto it = r.find(p);
      if (it == r.end()) continue;
      const mpq_class f = it->second;
      for (const auto& [k, v] : row) {
        mpq_class& slot = r[k];
        slot -= f * v;
        if (slot == 0) r.erase(k);
      }
    }
    pivots_[p] = std::move(row);
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, std::map<std::size_t, mpq_class>> pivots_;
};

struct Setup {
  std::size_t n = 1;
  bool continuous = true;
  /// Diagonal real matrices of phi and psi.
  std::vector<std::vector<int>> reversers;
  std::size_t nv() const { return 2 + 2 * n; }
};

inline Setup non_resonant(std::size_t n, const std::vector<int>& signs, bool continuous = true) {
  Setup s;
  s.n = n;
  s.continuous = continuous;
  std::vector<int> phi = {1, -1};
  std::vector<int> psi = {signs[0], -signs[0]};
  for (std::size_t j = 1; j <= n; ++j) {
    phi.insert(phi.end(), {1, -1});
    psi.insert(psi.end(), {signs[j], -signs[j]});
  }
  s.reversers = {phi, psi};
  return s;
}

// Each constraint maps an unknown to a list of polynomials (one per output component).
using Output = std::vector<Poly>;

inline std::size_t solution_dimension(std::size_t unknowns, const std::vector<std::vector<Output>>& images) {
  // images[k][c]: constraint c applied to unknown k.
  std::map<std::tuple<std::size_t, std::size_t, Exp>, std::map<std::size_t, mpq_class>> rows;
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::size_t c = 0; c < images[k].size(); ++c)
      for (std::size_t r = 0; r < images[k][c].size(); ++r)
        for (const auto& [e, v] : images[k][c][r]) rows[{c, r, e}][k] += v;
  Rank rank;
  for (auto& [key, row] : rows) {
    std::map<std::size_t, mpq_class> clean;
    for (auto& [k, v] : row)
      if (v != 0) clean[k] = v;
    rank.insert(std::move(clean));
  }
  return unknowns - rank.rank();
}

// sign = +1: invariant; sign = -1: anti-invariant under both reversers.
inline std::size_t function_dimension(const Setup& s, int d, int sign) {
  const auto monos = monomials(s.nv(), d);
  std::vector<std::vector<Output>> images;
  for (const auto& m : monos) {
    Poly f{{m, 1}};
    std::vector<Output> out;
    if (s.continuous) {
      out.push_back({derivative(f, 1)});
      for (std::size_t j = 0; j < s.n; ++j) {
        const std::size_t a = 2 + 2 * j, b = a + 1;
        Poly r = times_var(derivative(f, a), b, -1);
        add_scaled(r, times_var(derivative(f, b), a), 1);
        out.push_back({r});
      }
    }
    for (const auto& delta : s.reversers) {
      Poly g = diagonal(f, delta);
      add_scaled(g, f, -sign);
      out.push_back({g});
    }
    images.push_back(std::move(out));
  }
  return solution_dimension(monos.size(), images);
}

// sign = +1: equivariant; sign = -1: reversible-equivariant under both reversers.
inline std::size_t map_dimension(const Setup& s, int d, int sign) {
  const auto monos = monomials(s.nv(), d);
  const std::size_t nc = s.nv();
  std::vector<std::vector<Output>> images;
  for (std::size_t comp = 0; comp < nc; ++comp)
    for (const auto& m : monos) {
      Output g(nc);
      g[comp] = Poly{{m, 1}};
      std::vector<Output> out;
      if (s.continuous) {
        Output sh(nc);
        for (std::size_t r = 0; r < nc; ++r) sh[r] = times_var(derivative(g[r], 1), 0);
        add_scaled(sh[1], g[0], -1);
        out.push_back(sh);
        for (std::size_t j = 0; j < s.n; ++j) {
          const std::size_t a = 2 + 2 * j, b = a + 1;
          Output rot(nc);
          for (std::size_t r = 0; r < nc; ++r) {
            rot[r] = times_var(derivative(g[r], a), b, -1);
            add_scaled(rot[r], times_var(derivative(g[r], b), a), 1);
          }
          add_scaled(rot[a], g[b], 1);
          add_scaled(rot[b], g[a], -1);
          out.push_back(rot);
        }
      }
      for (const auto& delta : s.reversers) {
        Output e(nc);
        for (std::size_t r = 0; r < nc; ++r) {
          e[r] = diagonal(g[r], delta);
          add_scaled(e[r], g[r], -sign * delta[r]);
        }
        out.push_back(e);
      }
      images.push_back(std::move(out));
    }
  return solution_dimension(monos.size() * nc, images);
}

}  // namespace real_oracle

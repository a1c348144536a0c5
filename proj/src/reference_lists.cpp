#include "revnf/reference_lists.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "revnf/catalog.hpp"
#include "revnf/group.hpp"
#include "revnf/symmetry_ops.hpp"

namespace revnf {

std::vector<ModuleElement> resonant_phi_generators(int n1, int n2, std::size_t n, const std::string& prefix) {
  if (n < 3) throw std::invalid_argument("the resonant lists need n >= 3");
  CoordinateBuilder b(n);
  const unsigned p = static_cast<unsigned>(n1), q = static_cast<unsigned>(n2);
  const Polynomial im = b.im(b.z(1, q) * b.zb(2, p));
  const Polynomial w1 = b.zb(1, q - 1) * b.z(2, p);
  const Polynomial w2 = b.z(1, q) * b.zb(2, p - 1);
  const Coefficient i = b.i();
  std::vector<PolyMap> maps = {
      b.h1(),
      im * b.h0(),
      b.in_component(2, i * b.z(1)),
      b.in_component(2, i * w1),
      b.in_component(2, im * b.z(1)),
      b.in_component(2, im * w1),
      b.in_component(3, i * b.z(2)),
      b.in_component(3, i * w2),
      b.in_component(3, im * b.z(2)),
      b.in_component(3, im * w2),
  };
  for (std::size_t j = 3; j <= n; ++j) {
    maps.push_back(b.in_component(1 + j, i * b.z(j)));
    maps.push_back(b.in_component(1 + j, im * b.z(j)));
  }
  std::vector<ModuleElement> out;
  for (std::size_t k = 0; k < maps.size(); ++k) out.push_back({maps[k], Label::generator(prefix + std::to_string(k))});
  return out;
}

namespace {

// Index classes of the resonant lists: plain generators and those multiplied by u4 in Types B and D.
bool in_plain_class(std::size_t k) {
  static const std::set<std::size_t> low = {0, 2, 5, 6, 9, 10};
  return k < 12 ? low.count(k) > 0 : k % 2 == 0;
}

ModuleElement times(const std::string& u, const Polynomial& up, const ModuleElement& g) {
  return {up * g.map, Label::product(Label::invariant(u), g.label)};
}

RingElement ring_product(const RingElement& a, const RingElement& b) {
  return {a.poly * b.poly, Label::product(a.label, b.label)};
}

// u-invariants of the resonant case: u1..u4 and |z_j|^2 for j >= 3 under the given names.
std::vector<RingElement> resonant_u(int n1, int n2, std::size_t n, bool skip_u5_name) {
  CoordinateBuilder b(n);
  const unsigned p = static_cast<unsigned>(n1), q = static_cast<unsigned>(n2);
  std::vector<RingElement> u = {
      {b.x(1), Label::invariant("u1")},
      {b.norm2(1), Label::invariant("u2")},
      {b.norm2(2), Label::invariant("u3")},
      {b.re(b.z(1, q) * b.zb(2, p)), Label::invariant("u4")},
  };
  for (std::size_t j = 3; j <= n; ++j)
    u.push_back({b.norm2(j), Label::invariant("u" + std::to_string(skip_u5_name ? j + 3 : j + 2))});
  return u;
}

ReferenceRow resonant_row(NormalFormType t, std::vector<RingElement> u, const std::vector<ModuleElement>& L) {
  ReferenceRow row;
  row.type = t;
  const bool a0_odd = t == NormalFormType::C || t == NormalFormType::D;
  const bool res_odd = t == NormalFormType::B || t == NormalFormType::D;
  const RingElement& u1 = u[0];
  const RingElement& u4 = u[3];
  row.ring.push_back(a0_odd ? ring_product(u1, u1) : u1);
  row.ring.push_back(u[1]);
  row.ring.push_back(u[2]);
  row.ring.push_back(res_odd ? ring_product(u4, u4) : u4);
  if (a0_odd && res_odd) row.ring.push_back(ring_product(u1, u4));
  for (std::size_t k = 4; k < u.size(); ++k) row.ring.push_back(u[k]);

  const std::string n1 = u1.label.text(), n4 = u4.label.text();
  for (std::size_t k = 0; k < L.size(); ++k) {
    const bool plain = in_plain_class(k);
    switch (t) {
      case NormalFormType::A: row.generators.push_back(L[k]); break;
      case NormalFormType::B: row.generators.push_back(plain ? L[k] : times(n4, u4.poly, L[k])); break;
      case NormalFormType::C: row.generators.push_back(k == 0 ? times(n1, u1.poly, L[k]) : L[k]); break;
      case NormalFormType::D:
        if (plain && k != 0) {
          row.generators.push_back(L[k]);
        } else {
          row.generators.push_back(times(n1, u1.poly, L[k]));
          row.generators.push_back(times(n4, u4.poly, L[k]));
        }
        break;
    }
  }
  return row;
}

}  // namespace

ReferenceRow table_c3_row(NormalFormType t, int n1, int n2, TypeCReading reading) {
  std::vector<RingElement> u = resonant_u(n1, n2, 3, false);
  if (t == NormalFormType::C && reading == TypeCReading::h_list) {
    SGroupData s = catalog(CatalogCase{CatalogKind::res_n1n2_C3, {n1, n2}});
    ReferenceRow row = resonant_row(t, u, resonant_phi_generators(n1, n2, 3, "L"));
    row.generators.clear();
    const auto& H = s.equivariant_generators;
    row.generators.push_back(times("u1", u[0].poly, H[0]));
    for (std::size_t k = 1; k < H.size(); ++k) row.generators.push_back(H[k]);
    return row;
  }
  return resonant_row(t, u, resonant_phi_generators(n1, n2, 3, "L"));
}

ReferenceRow table_cn_row(NormalFormType t, int n1, int n2, std::size_t n) {
  return resonant_row(t, resonant_u(n1, n2, n, true), resonant_phi_generators(n1, n2, n, "H"));
}

int SignFactor::value(int a0v, int p1v, int p2v) const {
  int prod = 1;
  if (a0) prod *= a0v;
  if (p1) prod *= p1v;
  if (p2) prod *= p2v;
  return 1 + sign * prod;
}

std::string SignFactor::text() const {
  std::string out = sign > 0 ? "(1+" : "(1-";
  std::vector<std::string> parts;
  if (a0) parts.push_back("a0");
  if (p1) parts.push_back("p1");
  if (p2) parts.push_back("p2");
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
  return out + ")";
}

namespace {

SignFactor plus(bool a0, bool p1, bool p2) { return {1, a0, p1, p2}; }
SignFactor minus(bool a0, bool p1, bool p2) { return {-1, a0, p1, p2}; }
const SignFactor A0p = plus(true, false, false), A0m = minus(true, false, false);
const SignFactor P1p = plus(false, true, false), P1m = minus(false, true, false);
const SignFactor P2p = plus(false, false, true), P2m = minus(false, false, true);
const SignFactor P12p = plus(false, true, true), P12m = minus(false, true, true);

JEntry entry(std::string label, int a, std::string base, char set, std::vector<SignFactor> f,
             std::vector<std::string> mult) {
  JEntry e;
  e.label = std::move(label);
  e.a = a;
  e.base_factor = std::move(base);
  e.label_set = e.printed_set = e.resolved_set = set;
  e.factors = std::move(f);
  e.multiplicands = std::move(mult);
  return e;
}

JEntry zero(std::string label, int a, std::string base, char set) {
  JEntry e = entry(std::move(label), a, std::move(base), set, {}, {});
  e.printed_zero = true;
  return e;
}

std::vector<JEntry> build_list() {
  std::vector<JEntry> v = {
      entry("J01", 0, "", '1', {A0p}, {}),
      entry("J0i", 0, "", 'i', {}, {}),
      entry("J0k", 0, "", 'k', {P1p}, {}),
      entry("J0l", 0, "", 'l', {P2p}, {}),
      entry("J11", 1, "", '1', {A0m}, {"v1"}),
      zero("J1i", 1, "", 'i'),
      entry("J1k", 1, "", 'k', {A0m, P1m}, {"v1"}),
      entry("J1l", 1, "", 'l', {A0m, P2m}, {"v1"}),
      entry("J41", 4, "", '1', {A0m, P1m}, {"v4"}),
      zero("J4i", 4, "", 'i'),
      entry("J4k", 4, "", 'k', {P1m}, {"v4"}),
      entry("J4l", 4, "", 'l', {P1m, P2m}, {"v4"}),
      entry("J71", 7, "", '1', {A0m, P2m}, {"v7"}),
      zero("J7i", 7, "", 'i'),
      entry("J7k", 7, "", 'k', {P1m, P2m}, {"v7"}),
      entry("J7l", 7, "", 'l', {P2m}, {"v7"}),
      zero("J8i", 8, "", 'i'),
      entry("J81", 8, "", '1', {A0m, P12m}, {"v8"}),
      entry("J8k", 8, "", 'k', {P1m, P12m}, {"v8"}),
      entry("J8l", 8, "", 'l', {P2m, P12m}, {"v8"}),
      entry("J05j", 0, "u5", 'j', {P1p}, {"u5"}),
      entry("J05r", 0, "u5", 'r', {}, {"u5"}),
      entry("J05s", 0, "u5", 's', {P12p}, {"u5"}),
      entry("J15j", 1, "u5", 'j', {A0m, P1p}, {"v1", "u5"}),
      entry("J15r", 1, "u5", 'r', {A0m}, {"v1", "u5"}),
      entry("J15s", 1, "u5", 's', {A0m, P12p}, {"v1", "u5"}),
      entry("J45j", 4, "u5", 'j', {P1m}, {"v4", "u5"}),
      zero("J45r", 4, "u5", 'r'),
      entry("J45s", 4, "u5", 's', {P1m, P12m}, {"v4", "u5"}),
      entry("J75j", 7, "u5", 'j', {P1m, P2m}, {"u5", "v7"}),
      zero("J75r", 7, "u5", 'r'),
      entry("J75s", 7, "u5", 's', {P2m, P12m}, {"u5", "v7"}),
      entry("J85j", 8, "u5", 'j', {P1m, P12m}, {"u5", "v8"}),
      zero("J85r", 8, "u5", 'r'),
      entry("J85s", 8, "u5", 's', {P12m}, {"u5", "v8"}),
      entry("J09j", 0, "u9", 'j', {P2p}, {"u9"}),
      entry("J09s", 0, "u9", 's', {}, {"u9"}),
      entry("J09r", 0, "u9", 'r', {P12p}, {"u9"}),
      entry("J19j", 1, "u9", 'j', {A0m, P2p}, {"v1", "u9"}),
      entry("J19r", 1, "u9", 'r', {A0m, P12p}, {"v1", "u9"}),
      entry("J19s", 1, "u9", 's', {A0m}, {"v1", "u9"}),
      entry("J49j", 4, "u9", 'j', {P2m}, {"v4", "u9"}),
      entry("J49r", 4, "u9", 'r', {P12m}, {"v4", "u9"}),
      zero("J49r", 4, "u9", 'r'),
      entry("J79j", 7, "u9", 'j', {P2m}, {"v7", "u9"}),
      entry("J79r", 7, "u9", 'r', {P2m, P12m}, {"v7", "u9"}),
      zero("J79s", 7, "u9", 's'),
      entry("J89j", 8, "u9", 'j', {P2m, P12m}, {"v8", "u9"}),
      entry("J89r", 8, "u9", 'r', {P12m}, {"v8", "u9"}),
      zero("J89s", 8, "u9", 's'),
  };
  for (auto& e : v) {
    if (e.label == "J15j") e.printed_set = 's';
    if (e.label == "J09s") e.printed_set = 'j';
    if (e.label == "J41") e.typo = "unbalanced parenthesis before H_1";
  }
  // The second J49r completes the a = 4 row over u9 and is read as J49s.
  bool seen = false;
  for (auto& e : v)
    if (e.label == "J49r") {
      if (seen) e.resolved_set = 's';
      seen = true;
    }
  return v;
}

struct DoubleData {
  SymmetryContext ctx;
  std::map<std::string, Polynomial> inv;
  std::vector<PolyMap> H;
};

DoubleData double_data(int n1, int n2, int m1, int m2, const std::vector<int>& signs) {
  CatalogCase c{CatalogKind::res_double_C4, {n1, n2, m1, m2}};
  DoubleData d{SymmetryContext::from_catalog(c, signs), {}, {}};
  for (const auto& u : d.ctx.s.hilbert_basis) d.inv[u.name()] = u.poly;
  d.inv["v1"] = d.inv.at("u1");
  d.inv["v4"] = d.inv.at("u4");
  d.inv["v7"] = d.inv.at("u8");
  d.inv["v8"] = d.inv.at("u5") * d.inv.at("u9");
  for (const auto& g : d.ctx.s.equivariant_generators) d.H.push_back(g.map);
  return d;
}

struct Regime {
  int a0, p1, p2;
};

Regime regime_of(const std::vector<int>& s, int n1, int n2, int m1, int m2) {
  return {s[0], resonance_sign(s[1], s[2], n1, n2), resonance_sign(s[3], s[4], m1, m2)};
}

int factor_value(const JEntry& e, const Regime& r) {
  int v = 1;
  for (const auto& f : e.factors) v *= f.value(r.a0, r.p1, r.p2);
  return e.printed_zero ? 0 : v;
}

PolyMap formula_map(const DoubleData& d, const JEntry& e, int idx) {
  Polynomial m = Polynomial::constant(d.H[0].nvars(), 1);
  for (const auto& name : e.multiplicands) m = m * d.inv.at(name);
  return m * d.H.at(static_cast<std::size_t>(idx));
}

PolyMap recompute(const DoubleData& d, const JEntry& e, int idx) {
  Polynomial sv = Polynomial::constant(d.H[0].nvars(), 1);
  if (e.a != 0) sv = reynolds_S(d.inv.at("v" + std::to_string(e.a)), d.ctx.psi);
  PolyMap base = d.H.at(static_cast<std::size_t>(idx));
  if (!e.base_factor.empty()) base = d.inv.at(e.base_factor) * base;
  return transfer_T(sv * base, d.ctx.psi);
}

std::string signs_text(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + ")";
}

}  // namespace

const std::vector<JEntry>& double_resonance_list() {
  static const std::vector<JEntry> list = build_list();
  return list;
}

const std::vector<int>& double_index_set(char c) {
  static const std::map<char, std::vector<int>> sets = {
      {'1', {1}},        {'i', {3, 7, 11, 15}}, {'k', {5, 9}},   {'l', {13, 17}},
      {'j', {0, 2, 6, 10, 14}}, {'r', {4, 8}},  {'s', {12, 16}},
  };
  return sets.at(c);
}

std::vector<std::vector<int>> double_sign_regimes(int n1, int n2, int m1, int m2) {
  std::vector<std::vector<int>> out;
  std::set<std::tuple<int, int, int>> seen;
  for (int a0 : {1, -1})
    for (int a2 : {1, -1})
      for (int a4 : {1, -1})
        for (int a1 : {1, -1})
          for (int a3 : {1, -1}) {
            std::vector<int> s = {a0, a1, a2, a3, a4};
            Regime r = regime_of(s, n1, n2, m1, m2);
            if (seen.insert({r.a0, r.p1, r.p2}).second) out.push_back(s);
          }
  return out;
}

std::vector<ModuleElement> double_resonance_generators(int n1, int n2, int m1, int m2, const std::vector<int>& signs) {
  DoubleData d = double_data(n1, n2, m1, m2, signs);
  std::vector<ModuleElement> out;
  for (const auto& e : double_resonance_list())
    for (int idx : double_index_set(e.resolved_set)) {
      PolyMap rec = recompute(d, e, idx);
      if (rec.is_zero()) continue;
      Label l = Label::generator("H" + std::to_string(idx));
      if (!e.base_factor.empty()) l = Label::product(Label::invariant(e.base_factor), l);
      if (e.a != 0) l = Label::product(Label::invariant("v" + std::to_string(e.a)), l);
      out.push_back({normalize_scalar(rec), l});
    }
  return out;
}

JAudit audit_double_resonance(int n1, int n2, int m1, int m2) {
  JAudit audit;
  const auto& list = double_resonance_list();

  std::map<std::string, int> count;
  for (const auto& e : list) ++count[e.label];
  for (const auto& [label, c] : count)
    if (c > 1) audit.discrepancies.push_back(label + ": label appears " + std::to_string(c) + " times");
  std::set<std::string> covered;
  for (const auto& e : list) covered.insert(e.label.substr(0, e.label.size() - 1) + e.resolved_set);
  for (const std::string a : {"0", "1", "4", "7", "8"}) {
    for (char c : std::string("1ikl"))
      if (!covered.count("J" + a + c)) audit.discrepancies.push_back("J" + a + c + ": not listed");
    for (const std::string b : {"5", "9"})
      for (char c : std::string("jrs"))
        if (!covered.count("J" + a + b + c)) audit.discrepancies.push_back("J" + a + b + c + ": not listed");
  }
  for (const auto& e : list) {
    if (e.printed_set != e.label_set)
      audit.discrepancies.push_back(e.label + ": formula uses H_" + e.printed_set + " but the label names " +
                                    e.label_set);
    if (e.resolved_set != e.label_set)
      audit.discrepancies.push_back(e.label + " (" + (e.printed_zero ? "printed 0" : "printed nonzero") +
                                    "): read as J" + e.label.substr(1, e.label.size() - 2) + e.resolved_set);
    if (!e.typo.empty()) audit.discrepancies.push_back(e.label + ": " + e.typo);
  }

  std::map<std::string, std::vector<std::string>> mismatches;
  std::map<std::string, std::vector<std::string>> printed_failures;
  for (const auto& signs : double_sign_regimes(n1, n2, m1, m2)) {
    DoubleData d = double_data(n1, n2, m1, m2, signs);
    const Regime r = regime_of(signs, n1, n2, m1, m2);
    const GroupContext full = d.ctx.full_group();
    for (const auto& e : list) {
      const std::string name = e.label.substr(0, e.label.size() - 1) + e.resolved_set;
      const int fv = factor_value(e, r);
      for (int idx : double_index_set(e.resolved_set)) {
        ++audit.checked;
        PolyMap rec = recompute(d, e, idx);
        PolyMap printed = formula_map(d, e, idx);
        if (!rec.is_zero()) ++audit.nonzero;
        const bool agrees = rec.is_zero() ? fv == 0 : fv != 0 && proportionality(rec, printed).has_value();
        if (!agrees) {
          std::string what = fv == 0 ? "printed 0, recomputed nonzero" : rec.is_zero() ? "printed nonzero, recomputed 0"
                                                                                       : "printed and recomputed differ";
          mismatches[name + ": " + what].push_back(signs_text(signs) + " H" + std::to_string(idx));
        }
        if (!rec.is_zero() && !membership(rec, full, MembershipKind::reversible_equivariant))
          ++audit.membership_failures;
      }
      if (fv == 0) continue;
      for (int idx : double_index_set(e.printed_set)) {
        PolyMap literal = formula_map(d, e, idx);
        if (!membership(literal, full, MembershipKind::reversible_equivariant)) {
          ++audit.printed_membership_failures;
          printed_failures[e.label].push_back(signs_text(signs) + " H" + std::to_string(idx));
        }
      }
    }
  }
  for (const auto& [what, where] : mismatches) {
    std::string line = what + " at " + std::to_string(where.size()) + " instance(s), first " + where.front();
    audit.discrepancies.push_back(line);
  }
  for (const auto& [label, where] : printed_failures)
    audit.discrepancies.push_back(label + " as printed is not reversible-equivariant at " +
                                  std::to_string(where.size()) + " instance(s), first " + where.front());
  return audit;
}

}  // namespace revnf

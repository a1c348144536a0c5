#include "revnf/catalog.hpp"

#include <numeric>
#include <sstream>

#include "revnf/errors.hpp"

namespace revnf {

Polynomial CoordinateBuilder::z(std::size_t j, unsigned e) const {
  return Polynomial::variable(nvars_for(n_), var_z(j)).pow(e);
}

Polynomial CoordinateBuilder::zb(std::size_t j, unsigned e) const {
  return Polynomial::variable(nvars_for(n_), var_zb(j)).pow(e);
}

Polynomial CoordinateBuilder::re(const Polynomial& w) const { return Coefficient(Rational(1, 2)) * (w + w.conj()); }

Polynomial CoordinateBuilder::im(const Polynomial& w) const {
  return Coefficient(0, Rational(-1, 2)) * (w - w.conj());
}

PolyMap CoordinateBuilder::in_component(std::size_t comp, const Polynomial& p) const {
  std::vector<Polynomial> comps(n_ + 2, zero());
  comps.at(comp) = p;
  return PolyMap::from_components(std::move(comps));
}

PolyMap CoordinateBuilder::h0() const {
  std::vector<Polynomial> comps(n_ + 2, zero());
  comps[0] = x(1);
  comps[1] = x(2);
  return PolyMap::from_components(std::move(comps));
}

PolyMap CoordinateBuilder::h1() const { return in_component(1, one()); }

std::string CatalogCase::name() const {
  switch (kind) {
    case CatalogKind::non_resonant: return "non_resonant";
    case CatalogKind::res_n1n2_C3: return "res_n1n2_C3";
    case CatalogKind::res_n1n2_Cn: return "res_n1n2_Cn";
    case CatalogKind::res_double_C4: return "res_double_C4";
  }
  return "";
}

std::string CatalogCase::to_string() const {
  std::string out = name();
  for (std::size_t k = 0; k < params.size(); ++k) out += (k ? "," : ":") + std::to_string(params[k]);
  return out;
}

namespace {

std::size_t expected_params(CatalogKind k) {
  switch (k) {
    case CatalogKind::non_resonant: return 1;
    case CatalogKind::res_n1n2_C3: return 2;
    case CatalogKind::res_n1n2_Cn: return 3;
    case CatalogKind::res_double_C4: return 4;
  }
  return 0;
}

void check_pair(int a, int b, const std::string& what) {
  if (std::gcd(a, b) != 1) throw UnsupportedCase(what + " exponents must be coprime");
  if (a == 1 && b == 1) throw UnsupportedCase(what + " 1:1 resonance has no built-in catalog");
}

}  // namespace

CatalogCase CatalogCase::parse(const std::string& text) {
  CatalogCase c;
  const auto colon = text.find(':');
  const std::string nm = text.substr(0, colon);
  if (nm == "non_resonant") {
    c.kind = CatalogKind::non_resonant;
  } else if (nm == "res_n1n2_C3") {
    c.kind = CatalogKind::res_n1n2_C3;
  } else if (nm == "res_n1n2_Cn") {
    c.kind = CatalogKind::res_n1n2_Cn;
  } else if (nm == "res_double_C4") {
    c.kind = CatalogKind::res_double_C4;
  } else {
    throw UnsupportedCase("unknown catalog case '" + nm + "'");
  }
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        c.params.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UnsupportedCase("bad catalog parameter '" + item + "'");
      }
    }
  }
  return c;
}

void CatalogCase::validate() const {
  if (params.size() != expected_params(kind))
    throw UnsupportedCase(name() + " expects " + std::to_string(expected_params(kind)) + " parameters");
  for (int p : params)
    if (p < 1) throw UnsupportedCase(name() + " parameters must be >= 1");
  switch (kind) {
    case CatalogKind::non_resonant: break;
    case CatalogKind::res_n1n2_C3: check_pair(params[0], params[1], name()); break;
    case CatalogKind::res_n1n2_Cn:
      check_pair(params[0], params[1], name());
      if (params[2] < 3) throw UnsupportedCase("res_n1n2_Cn needs n >= 3");
      break;
    case CatalogKind::res_double_C4:
      check_pair(params[0], params[1], name());
      check_pair(params[2], params[3], name());
      break;
  }
}

std::size_t CatalogCase::blocks() const {
  validate();
  switch (kind) {
    case CatalogKind::non_resonant: return static_cast<std::size_t>(params[0]);
    case CatalogKind::res_n1n2_C3: return 3;
    case CatalogKind::res_n1n2_Cn: return static_cast<std::size_t>(params[2]);
    case CatalogKind::res_double_C4: return 4;
  }
  return 0;
}

LinearPart catalog_linear_part(const CatalogCase& c) {
  const std::size_t n = c.blocks();
  std::vector<std::vector<long>> rel;
  if (c.kind != CatalogKind::non_resonant) {
    std::vector<long> r(n, 0);
    r[0] = -c.params[1];
    r[1] = c.params[0];
    rel.push_back(r);
  }
  if (c.kind == CatalogKind::res_double_C4) {
    std::vector<long> r(n, 0);
    r[2] = -c.params[3];
    r[3] = c.params[2];
    rel.push_back(r);
  }
  return LinearPart(n, rel);
}

namespace {

class CatalogWriter {
 public:
  CatalogWriter(SGroupData& out, std::size_t n) : out_(out), b_(n) {}
  const CoordinateBuilder& b() const { return b_; }

  void invariant(const std::string& name, const Polynomial& p, const std::string& text, const std::string& latex) {
    out_.hilbert_basis.push_back({p, Label::invariant(name)});
    out_.symbols.push_back({name, text, latex});
  }

  void norm_invariant(const std::string& name, std::size_t j) {
    const std::string s = std::to_string(j);
    invariant(name, b_.norm2(j), "|z" + s + "|^2", "|z_{" + s + "}|^{2}");
  }

  // Re and Im of z_a^p zb_b^q.
  void resonant_pair(const std::string& re_name, const std::string& im_name, std::size_t a, unsigned p,
                     std::size_t bb, unsigned q) {
    Polynomial w = b_.z(a, p) * b_.zb(bb, q);
    const Monomial& m = w.leading_monomial();
    invariant(re_name, b_.re(w), "Re(" + m.to_string() + ")", "\\operatorname{Re}(" + m.to_latex() + ")");
    invariant(im_name, b_.im(w), "Im(" + m.to_string() + ")", "\\operatorname{Im}(" + m.to_latex() + ")");
  }

  void generator(const PolyMap& g) {
    const std::string name = "H" + std::to_string(out_.equivariant_generators.size());
    out_.equivariant_generators.push_back({g, Label::generator(name)});
    out_.symbols.push_back({name, name, "H_{" + std::to_string(out_.equivariant_generators.size() - 1) + "}"});
  }

  // g and i*g for a polynomial in the z_j component.
  void rotation_pair(std::size_t j, const Polynomial& p) {
    generator(b_.in_component(1 + j, p));
    generator(b_.in_component(1 + j, b_.i() * p));
  }

 private:
  SGroupData& out_;
  CoordinateBuilder b_;
};

void resonant_block_generators(CatalogWriter& w, unsigned n1, unsigned n2) {
  const auto& b = w.b();
  w.rotation_pair(1, b.z(1));
  w.rotation_pair(1, b.zb(1, n2 - 1) * b.z(2, n1));
  w.rotation_pair(2, b.z(2));
  w.rotation_pair(2, b.z(1, n2) * b.zb(2, n1 - 1));
}

}  // namespace

SGroupData catalog(const CatalogCase& c) {
  c.validate();
  SGroupData out = structure_of_S(catalog_linear_part(c));
  const std::size_t n = c.blocks();
  CatalogWriter w(out, n);
  const auto& b = w.b();
  auto p = [&](std::size_t k) { return static_cast<unsigned>(c.params.at(k)); };

  switch (c.kind) {
    case CatalogKind::non_resonant:
      w.invariant("v1", b.x(1), "x1", "x_{1}");
      for (std::size_t j = 1; j <= n; ++j) w.norm_invariant("v" + std::to_string(j + 1), j);
      w.generator(b.h0());
      w.generator(b.h1());
      for (std::size_t j = 1; j <= n; ++j) w.rotation_pair(j, b.z(j));
      break;
    case CatalogKind::res_n1n2_C3:
    case CatalogKind::res_n1n2_Cn:
      w.invariant("v1", b.x(1), "x1", "x_{1}");
      w.norm_invariant("v2", 1);
      w.norm_invariant("v3", 2);
      w.resonant_pair("v4", "v5", 1, p(1), 2, p(0));
      for (std::size_t j = 3; j <= n; ++j) w.norm_invariant("v" + std::to_string(j + 3), j);
      w.generator(b.h0());
      w.generator(b.h1());
      resonant_block_generators(w, p(0), p(1));
      for (std::size_t j = 3; j <= n; ++j) w.rotation_pair(j, b.z(j));
      break;
    case CatalogKind::res_double_C4:
      w.invariant("u1", b.x(1), "x1", "x_{1}");
      w.norm_invariant("u2", 1);
      w.norm_invariant("u3", 2);
      w.resonant_pair("u4", "u5", 1, p(1), 2, p(0));
      w.norm_invariant("u6", 3);
      w.norm_invariant("u7", 4);
      w.resonant_pair("u8", "u9", 3, p(3), 4, p(2));
      w.generator(b.h0());
      w.generator(b.h1());
      resonant_block_generators(w, p(0), p(1));
      w.rotation_pair(3, b.z(3));
      w.rotation_pair(3, b.zb(3, p(3) - 1) * b.z(4, p(2)));
      w.rotation_pair(4, b.z(4));
      w.rotation_pair(4, b.z(3, p(3)) * b.zb(4, p(2) - 1));
      break;
  }
  return out;
}

}  // namespace revnf

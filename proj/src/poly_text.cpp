#include <cctype>

#include "revnf/errors.hpp"
#include "revnf/poly.hpp"

namespace revnf {

namespace {

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string s = sgn(q) < 0 ? "-" : "";
  Integer num = abs(q.get_num());
  return s + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

struct TermParts {
  bool negative = false;
  std::string body;
};

// Splits c*m into a sign and an unsigned body, for text or LaTeX.
TermParts format_term(const Coefficient& c, const Monomial& m, bool latex) {
  const std::string mono = latex ? m.to_latex() : m.to_string();
  const std::string mul = latex ? " " : "*";
  TermParts t;
  auto attach = [&](const std::string& coef, bool unit) {
    if (m.is_constant()) return unit ? std::string("1") : coef;
    return unit ? mono : coef + mul + mono;
  };
  if (c.is_real()) {
    t.negative = sgn(c.re()) < 0;
    Rational mag = abs(c.re());
    t.body = attach(latex ? latex_rational(mag) : rational_text(mag), mag == 1);
  } else if (sgn(c.re()) == 0) {
    t.negative = sgn(c.im()) < 0;
    Rational mag = abs(c.im());
    std::string unit = "i";
    std::string coef = mag == 1 ? unit : (latex ? latex_rational(mag) + " i" : rational_text(mag) + "*i");
    t.body = m.is_constant() ? coef : coef + mul + mono;
  } else {
    std::string coef;
    if (latex) {
      coef = "\\left(" + latex_rational(c.re()) + (sgn(c.im()) > 0 ? " + " : " - ") +
             (abs(c.im()) == 1 ? std::string() : latex_rational(abs(c.im())) + " ") + "i\\right)";
    } else {
      coef = c.to_string();
    }
    t.body = attach(coef, false);
  }
  return t;
}

std::string format_polynomial(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    TermParts t = format_term(it->second, it->first, latex);
    if (first) {
      out += (t.negative ? "-" : "") + t.body;
      first = false;
    } else {
      out += (t.negative ? " - " : " + ") + t.body;
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (d.is_zero() || d.degree() != 0) fail("division by a non-constant or zero");
        acc *= Coefficient(1) / d.leading_coefficient();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      return Polynomial::constant(nvars_, Coefficient(Rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(dstart, pos_ - dstart));
      if (name == "i" && digits.empty()) return Polynomial::constant(nvars_, Coefficient::imaginary_unit());
      if (digits.empty()) fail("unknown identifier '" + name + "'");
      std::size_t k = std::stoul(digits);
      std::size_t v = nvars_;
      if (name == "x" && (k == 1 || k == 2)) v = var_x(k);
      if (name == "z" && k >= 1) v = var_z(k);
      if (name == "zb" && k >= 1) v = var_zb(k);
      if (v >= nvars_) fail("unknown variable '" + name + digits + "'");
      return Polynomial::variable(nvars_, v);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t v = 0; v < e_.size(); ++v) {
    if (e_[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(v);
    if (e_[v] > 1) out += "^" + std::to_string(e_[v]);
  }
  return out;
}

std::string Monomial::to_latex() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t v = 0; v < e_.size(); ++v) {
    if (e_[v] == 0) continue;
    if (!out.empty()) out += " ";
    out += variable_latex(v);
    if (e_[v] > 1) out += "^{" + std::to_string(e_[v]) + "}";
  }
  return out;
}

std::string Polynomial::to_string() const { return format_polynomial(*this, false); }
std::string Polynomial::to_latex() const { return format_polynomial(*this, true); }

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars) {
  return Parser(text, nvars).parse_all();
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    if (c) out += ", ";
    out += comps_[c].to_string();
  }
  return out + ")";
}

PolyMap PolyMap::parse(std::string_view text, std::size_t blocks) {
  std::size_t b = text.find_first_not_of(" \t\n");
  std::size_t e = text.find_last_not_of(" \t\n");
  if (b == std::string_view::npos || text[b] != '(' || text[e] != ')')
    throw ParseError("a map must be written as (c1, c2, ...)");
  std::string_view inner = text.substr(b + 1, e - b - 1);
  std::vector<Polynomial> comps;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= inner.size(); ++k) {
    if (k == inner.size() || (inner[k] == ',' && depth == 0)) {
      comps.push_back(Polynomial::parse(inner.substr(start, k - start), nvars_for(blocks)));
      start = k + 1;
    } else if (inner[k] == '(') {
      ++depth;
    } else if (inner[k] == ')') {
      --depth;
    }
  }
  if (comps.size() != blocks + 2)
    throw ParseError("expected " + std::to_string(blocks + 2) + " map components, got " +
                     std::to_string(comps.size()));
  return from_components(std::move(comps));
}

}  // namespace revnf

#include "revnf/normalform.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "revnf/errors.hpp"
#include "revnf/graded.hpp"

namespace revnf {

namespace {

constexpr const char* kSchema = "nf-v1";

bool is_identifier(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isalnum(c) || c == '_' || c == '{' || c == '}';
         });
}

const Symbol* find_symbol(const std::vector<Symbol>& symbols, const std::string& name) {
  for (const auto& s : symbols)
    if (s.name == name) return &s;
  return nullptr;
}

std::string power_text(const std::string& base, int k, bool latex) {
  if (k == 1) return base;
  const std::string b = is_identifier(base) ? base : (latex ? "\\left(" + base + "\\right)" : "(" + base + ")");
  return latex ? b + "^{" + std::to_string(k) + "}" : b + "^" + std::to_string(k);
}

// Expansion of a ring element through the symbol definitions of its factors.
std::string argument_text(const RingElement& r, const std::vector<Symbol>& symbols, bool latex) {
  if (!r.label.is_product() || r.label.factors.empty())
    return latex ? r.poly.to_latex() : r.poly.to_string();
  std::string out;
  for (const auto& [name, k] : r.label.factors) {
    const Symbol* s = find_symbol(symbols, name);
    const std::string base = s ? (latex ? s->latex : s->text) : (latex ? name_latex(name) : name);
    if (!out.empty()) out += latex ? " " : "*";
    out += power_text(base, k, latex);
  }
  return out;
}

std::string f_name(std::size_t j, bool latex) {
  return latex ? "f_{" + std::to_string(j) + "}(X)" : "f" + std::to_string(j) + "(X)";
}

std::string summand_component(std::size_t j, const Polynomial& p, bool latex) {
  const std::string f = f_name(j, latex);
  if (p == Polynomial::constant(p.nvars(), 1)) return f;
  const bool simple = p.size() == 1 && p.terms().begin()->second == Coefficient(1);
  if (latex) return simple ? f + "\\, " + p.to_latex() : f + " \\left(" + p.to_latex() + "\\right)";
  return simple ? f + "*" + p.to_string() : f + "*(" + p.to_string() + ")";
}

std::string component_name(std::size_t c, bool latex) {
  if (latex) return c < 2 ? "\\dot{x}_{" + std::to_string(c + 1) + "}" : "\\dot{z}_{" + std::to_string(c - 1) + "}";
  return c < 2 ? "x" + std::to_string(c + 1) + "dot" : "z" + std::to_string(c - 1) + "dot";
}

std::string linear_component(const LinearPart& L, std::size_t c, bool latex) {
  if (c == 0) return latex ? "x_{2}" : "x2";
  if (c == 1) return "";
  const std::string j = std::to_string(c - 1);
  const std::string& w = L.omegas()[c - 2];
  return latex ? "-i" + name_latex(w) + " z_{" + j + "}" : "-i*" + w + "*z" + j;
}

std::vector<std::string> component_lines(const NormalForm& nf, bool latex) {
  std::vector<std::string> out;
  const std::size_t nc = nf.linear_part.n() + 2;
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<std::string> parts;
    const std::string lin = linear_component(nf.linear_part, c, latex);
    if (!lin.empty()) parts.push_back(lin);
    for (const auto& s : nf.summands)
      if (!s.map.stored(c).is_zero()) parts.push_back(summand_component(s.index, s.map.stored(c), latex));
    std::string rhs;
    for (const auto& p : parts) {
      if (!rhs.empty()) rhs += p.rfind('-', 0) == 0 ? " " : " + ";
      rhs += p;
    }
    if (rhs.empty()) rhs = "0";
    out.push_back(component_name(c, latex) + (latex ? " &= " : " = ") + rhs);
  }
  return out;
}

std::string emit_text(const NormalForm& nf) {
  std::ostringstream os;
  if (!nf.title.empty()) os << nf.title << "\n";
  os << "xdot = L x";
  if (nf.summands.empty()) return os.str();
  for (const auto& s : nf.summands) os << " + " << f_name(s.index, false) << "*" << s.generator;
  os << "\n";
  for (const auto& l : component_lines(nf, false)) os << l << "\n";
  os << "X = (";
  for (std::size_t k = 0; k < nf.arguments.size(); ++k) os << (k ? ", " : "") << nf.arguments[k].name;
  os << ")\n";
  for (const auto& s : nf.symbols) os << s.name << " = " << s.text << "\n";
  for (const auto& s : nf.summands) os << s.generator << " = " << s.map.to_string() << "\n";
  for (std::size_t k = 0; k < nf.terms.size(); ++k) {
    os << "degree " << k + 2 << ":";
    for (auto j : nf.terms[k]) os << " f" << j;
    os << (k + 1 < nf.terms.size() ? "\n" : "");
  }
  return os.str();
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '_' ? std::string("\\_") : std::string(1, c);
  return out;
}

std::string emit_latex(const NormalForm& nf, bool standalone) {
  std::ostringstream os;
  if (nf.summands.empty()) {
    os << "\\dot{x} = L x";
  } else {
    os << "\\begin{aligned}\n";
    const auto lines = component_lines(nf, true);
    for (std::size_t k = 0; k < lines.size(); ++k) os << lines[k] << (k + 1 < lines.size() ? " \\\\\n" : "\n");
    os << "\\end{aligned}\n\\qquad\n\\begin{aligned}\nX &= (";
    for (std::size_t k = 0; k < nf.arguments.size(); ++k) os << (k ? ", " : "") << name_latex(nf.arguments[k].name);
    os << ")";
    for (const auto& s : nf.symbols) os << " \\\\\n" << name_latex(s.name) << " &= " << s.latex;
    os << "\n\\end{aligned}";
  }
  if (!standalone) return os.str();
  std::ostringstream doc;
  doc << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
  if (!nf.title.empty()) doc << "\\noindent " << latex_escape(nf.title) << "\n";
  doc << "\\[\n" << os.str() << "\n\\]\n\\end{document}\n";
  return doc.str();
}

}  // namespace

std::string name_latex(const std::string& name) {
  static const std::regex factor(R"(([A-Za-z]+)(\d*)(?:\^(\d+))?)");
  std::string out;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('*', start), name.size());
    const std::string f = name.substr(start, end - start);
    std::smatch m;
    std::string piece = f;
    if (std::regex_match(f, m, factor)) {
      const std::string letters = m[1].str();
      piece = letters == "omega" ? "\\omega" : letters;
      if (m[2].length()) piece += "_{" + m[2].str() + "}";
      if (m[3].length()) piece += "^{" + m[3].str() + "}";
    }
    if (!out.empty()) out += " ";
    out += piece;
    start = end + 1;
  }
  return out;
}

std::optional<PolyMap> NormalForm::summand_instance(std::size_t j) const {
  const NormalFormSummand& s = summands.at(j);
  if (s.degree >= 2) return s.map;
  std::vector<Polynomial> polys;
  for (const auto& a : arguments) polys.push_back(a.poly);
  if (polys.empty()) return std::nullopt;
  ProductCache cache(polys);
  for (int e = 2 - s.degree; e + s.degree <= degree_max; ++e) {
    auto prods = cache.products_of_degree(e);
    if (!prods.empty()) return prods.front() * s.map;
  }
  return std::nullopt;
}

NormalForm assemble(const GeneratorSet& g, const LinearPart& L, int degree_max, const std::string& title) {
  if (degree_max < 2) throw ConfigError("degree_max must be at least 2");
  const auto failures = soundness_failures(g);
  if (!failures.empty()) {
    std::string msg = "generator set is not certified:";
    for (const auto& f : failures) msg += " " + f;
    throw UncertifiedInput(msg);
  }
  NormalForm nf;
  nf.linear_part = L;
  nf.degree_max = degree_max;
  nf.title = title;
  std::set<std::string, bool (*)(const std::string&, const std::string&)> used(symbol_less);
  for (const auto& r : g.ring_basis) {
    if (r.poly.degree() <= 0) continue;
    nf.arguments.push_back({r.name(), r.poly, argument_text(r, g.symbols, false), argument_text(r, g.symbols, true)});
    for (const auto& [name, k] : r.label.factors) used.insert(name);
  }
  for (const auto& m : g.module_generators) {
    if (m.map.is_zero()) continue;
    nf.summands.push_back({nf.summands.size(), m.name(), m.map, m.map.degree()});
    for (const auto& [name, k] : m.label.factors) used.insert(name);
  }
  for (const auto& name : used)
    if (const Symbol* s = find_symbol(g.symbols, name)) nf.symbols.push_back(*s);

  std::vector<Polynomial> polys;
  for (const auto& a : nf.arguments) polys.push_back(a.poly);
  ProductCache cache(polys);
  for (int d = 2; d <= degree_max; ++d) {
    std::vector<std::size_t> row;
    for (const auto& s : nf.summands) {
      const int e = d - s.degree;
      if (e == 0 || (e > 0 && cache.count_of_degree(e) > 0)) row.push_back(s.index);
    }
    nf.terms.push_back(std::move(row));
  }
  return nf;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "latex") return OutputFormat::latex;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown format '" + s + "' (expected latex, text or json)");
}

std::string emit(const NormalForm& nf, OutputFormat format, bool latex_standalone) {
  switch (format) {
    case OutputFormat::text:
      return emit_text(nf);
    case OutputFormat::latex:
      return emit_latex(nf, latex_standalone);
    case OutputFormat::json:
      return to_json(nf).dump(2);
  }
  return "";
}

nlohmann::json to_json(const NormalForm& nf) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["title"] = nf.title;
  j["linear_part"] = {{"n", nf.linear_part.n()},
                      {"relations", nf.linear_part.resonance_relations()},
                      {"omegas", nf.linear_part.omegas()}};
  j["degree_max"] = nf.degree_max;
  j["arguments"] = nlohmann::json::array();
  for (const auto& a : nf.arguments)
    j["arguments"].push_back({{"name", a.name}, {"poly", a.poly.to_string()}, {"text", a.text}, {"latex", a.latex}});
  j["summands"] = nlohmann::json::array();
  for (const auto& s : nf.summands)
    j["summands"].push_back(
        {{"index", s.index}, {"generator", s.generator}, {"map", s.map.to_string()}, {"degree", s.degree}});
  j["terms"] = nlohmann::json::array();
  for (std::size_t k = 0; k < nf.terms.size(); ++k)
    j["terms"].push_back({{"degree", k + 2}, {"summands", nf.terms[k]}});
  j["symbols"] = nlohmann::json::array();
  for (const auto& s : nf.symbols) j["symbols"].push_back({{"name", s.name}, {"text", s.text}, {"latex", s.latex}});
  return j;
}

NormalForm normal_form_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchema) throw ParseError("unsupported normal-form schema");
    NormalForm nf;
    const auto& lp = j.at("linear_part");
    const std::size_t n = lp.at("n").get<std::size_t>();
    nf.linear_part = LinearPart(n, lp.at("relations").get<std::vector<std::vector<long>>>(),
                                lp.at("omegas").get<std::vector<std::string>>());
    nf.title = j.at("title").get<std::string>();
    nf.degree_max = j.at("degree_max").get<int>();
    for (const auto& a : j.at("arguments"))
      nf.arguments.push_back({a.at("name").get<std::string>(), Polynomial::parse(a.at("poly").get<std::string>(), nvars_for(n)),
                              a.at("text").get<std::string>(), a.at("latex").get<std::string>()});
    for (const auto& s : j.at("summands"))
      nf.summands.push_back({s.at("index").get<std::size_t>(), s.at("generator").get<std::string>(),
                             PolyMap::parse(s.at("map").get<std::string>(), n), s.at("degree").get<int>()});
    for (const auto& t : j.at("terms")) nf.terms.push_back(t.at("summands").get<std::vector<std::size_t>>());
    for (const auto& s : j.at("symbols"))
      nf.symbols.push_back({s.at("name").get<std::string>(), s.at("text").get<std::string>(), s.at("latex").get<std::string>()});
    return nf;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed normal-form document: ") + e.what());
  }
}

}  // namespace revnf

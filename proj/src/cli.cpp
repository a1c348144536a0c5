#include "revnf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "revnf/errors.hpp"

namespace revnf {

namespace {

std::string signs_text(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + std::to_string(s[k]);
  return out + ")";
}

bool is_single_resonance(const CatalogCase& c) {
  return c.kind == CatalogKind::res_n1n2_C3 || c.kind == CatalogKind::res_n1n2_Cn;
}

std::optional<NormalFormType> type_of(const CatalogCase& c, const std::vector<int>& s) {
  if (!is_single_resonance(c)) return std::nullopt;
  return classify_type(s[0], s[1], s[2], c.params[0], c.params[1]);
}

std::string type_string(const std::optional<NormalFormType>& t) { return t ? std::string(1, type_letter(*t)) : "-"; }

nlohmann::json type_json(const std::optional<NormalFormType>& t) {
  return t ? nlohmann::json(std::string(1, type_letter(*t))) : nlohmann::json(nullptr);
}

std::string title_of(const JobConfig& c) {
  std::string t = c.catalog_case.to_string() + " signs " + signs_text(c.signs);
  if (auto ty = type_of(c.catalog_case, c.signs)) t += " Type " + type_string(ty);
  return t;
}

int int_of(const std::string& item, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(item, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != item.size()) throw ConfigError("bad " + what + " '" + item + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

// --- classify ---

ExitCode classify(const JobConfig& c, std::ostream& out) {
  const LinearPart L = catalog_linear_part(c.catalog_case);
  const auto pairs = enumerate_involution_pairs(L);
  std::optional<NormalFormType> selected;
  if (!c.signs.empty()) selected = type_of(c.catalog_case, c.signs);
  if (c.format == OutputFormat::json) {
    nlohmann::json j;
    j["case"] = c.catalog_case.to_string();
    j["n"] = L.n();
    j["pairs"] = nlohmann::json::array();
    for (const auto& p : pairs) j["pairs"].push_back({{"signs", p.signs}, {"type", type_json(type_of(c.catalog_case, p.signs))}});
    if (!c.signs.empty()) j["selected"] = {{"signs", c.signs}, {"type", type_json(selected)}};
    out << j.dump(2) << "\n";
  } else if (c.format == OutputFormat::latex) {
    out << "\\begin{tabular}{ll}\n$(a_0, \\ldots, a_" << L.n() << ")$ & Type \\\\\n\\hline\n";
    for (const auto& p : pairs)
      out << "$" << signs_text(p.signs) << "$ & " << type_string(type_of(c.catalog_case, p.signs)) << " \\\\\n";
    out << "\\end{tabular}\n";
    if (!c.signs.empty()) out << "selected $" << signs_text(c.signs) << "$: Type " << type_string(selected) << "\n";
  } else {
    out << "case " << c.catalog_case.to_string() << " (n = " << L.n() << ")\n";
    out << "involution pairs: " << pairs.size() << "\n";
    for (const auto& p : pairs) out << signs_text(p.signs) << " " << type_string(type_of(c.catalog_case, p.signs)) << "\n";
    if (!c.signs.empty()) out << "selected " << signs_text(c.signs) << ": Type " << type_string(selected) << "\n";
  }
  return ExitCode::ok;
}

// --- generators ---

GeneratorSet certified_result(const JobConfig& c, SymmetryContext& ctx) {
  ctx = SymmetryContext::from_catalog(c.catalog_case, c.signs);
  GeneratorSet r = pipeline(ctx).result;
  const auto failures = soundness_failures(r);
  if (!failures.empty()) {
    std::string msg = "pipeline output failed certification:";
    for (const auto& f : failures) msg += " " + f;
    throw CertificationFailure(msg);
  }
  return r;
}

ExitCode generators(const JobConfig& c, std::ostream& out) {
  SymmetryContext ctx;
  const GeneratorSet r = certified_result(c, ctx);
  if (c.format == OutputFormat::json) {
    nlohmann::json j;
    j["case"] = c.catalog_case.to_string();
    j["signs"] = c.signs;
    j["type"] = type_json(type_of(c.catalog_case, c.signs));
    j["ring"] = nlohmann::json::array();
    for (const auto& e : r.ring_basis) j["ring"].push_back({{"name", e.name()}, {"poly", e.poly.to_string()}});
    j["generators"] = nlohmann::json::array();
    for (const auto& g : r.module_generators)
      j["generators"].push_back({{"name", g.name()}, {"map", g.map.to_string()}, {"degree", g.map.degree()}});
    out << j.dump(2) << "\n";
  } else if (c.format == OutputFormat::latex) {
    out << "\\begin{aligned}\n";
    for (const auto& e : r.ring_basis) out << name_latex(e.name()) << " &= " << e.poly.to_latex() << " \\\\\n";
    for (std::size_t k = 0; k < r.module_generators.size(); ++k) {
      const auto& g = r.module_generators[k];
      out << name_latex(g.name()) << " &= \\left(";
      for (std::size_t i = 0; i < g.map.ncomponents(); ++i)
        out << (i ? ", " : "") << (g.map.stored(i).is_zero() ? "0" : g.map.stored(i).to_latex());
      out << "\\right)" << (k + 1 < r.module_generators.size() ? " \\\\" : "") << "\n";
    }
    out << "\\end{aligned}\n";
  } else {
    out << title_of(c) << "\n";
    out << "ring (" << r.ring_basis.size() << "):\n";
    for (const auto& e : r.ring_basis) out << "  " << e.name() << " = " << e.poly.to_string() << "\n";
    out << "generators (" << r.module_generators.size() << "):\n";
    for (const auto& g : r.module_generators) out << "  " << g.name() << " = " << g.map.to_string() << "\n";
  }
  return ExitCode::ok;
}

// --- normal-form ---

ExitCode normal_form(const JobConfig& c, std::ostream& out) {
  SymmetryContext ctx;
  const GeneratorSet r = certified_result(c, ctx);
  const NormalForm nf = assemble(r, ctx.linear_part, c.degree_max, title_of(c));
  out << emit(nf, c.format, c.latex_document) << "\n";
  return ExitCode::ok;
}

// --- verify ---

struct DegreeReport {
  int degree = 0;
  std::size_t module_dim = 0, module_oracle = 0, ring_dim = 0, ring_oracle = 0;
  SliceComparison module, ring;
};

ExitCode verify(const JobConfig& c, std::ostream& out) {
  SymmetryContext ctx;
  const GeneratorSet r = certified_result(c, ctx);
  const GroupContext full = ctx.full_group();
  std::vector<DegreeReport> reports;
  bool ok = true;
  for (int d : c.verify_degrees) {
    DegreeReport rep;
    rep.degree = d;
    const DegreeSlice ms = module_slice(r, d, c.limit_monomials);
    const DegreeSlice mo = slice(full, d, MembershipKind::reversible_equivariant, c.limit_monomials);
    const DegreeSlice rs = ring_slice(r, d, c.limit_monomials);
    const DegreeSlice ro = slice(full, d, MembershipKind::invariant, c.limit_monomials);
    rep.module_dim = ms.dimension();
    rep.module_oracle = mo.dimension();
    rep.ring_dim = rs.dimension();
    rep.ring_oracle = ro.dimension();
    rep.module = spans_equal(ms, mo);
    rep.ring = spans_equal(rs, ro);
    ok = ok && rep.module.equal && rep.ring.equal;
    reports.push_back(std::move(rep));
  }
  if (c.format == OutputFormat::json) {
    nlohmann::json j;
    j["case"] = c.catalog_case.to_string();
    j["signs"] = c.signs;
    j["type"] = type_json(type_of(c.catalog_case, c.signs));
    j["all_equal"] = ok;
    j["degrees"] = nlohmann::json::array();
    for (const auto& rep : reports) {
      nlohmann::json e = {{"degree", rep.degree},
                          {"module", {{"dimension", rep.module_dim}, {"oracle", rep.module_oracle}, {"equal", rep.module.equal}}},
                          {"ring", {{"dimension", rep.ring_dim}, {"oracle", rep.ring_oracle}, {"equal", rep.ring.equal}}}};
      if (!rep.module.equal) e["module"]["witness"] = rep.module.witness_text();
      if (!rep.ring.equal) e["ring"]["witness"] = rep.ring.witness_text();
      j["degrees"].push_back(e);
    }
    out << j.dump(2) << "\n";
  } else {
    const bool latex = c.format == OutputFormat::latex;
    if (latex) out << "\\begin{tabular}{rllll}\n$d$ & module & oracle & ring & oracle \\\\\n\\hline\n";
    else out << title_of(c) << "\n";
    for (const auto& rep : reports) {
      if (latex) {
        out << rep.degree << " & " << rep.module_dim << " & " << rep.module_oracle << " & " << rep.ring_dim << " & "
            << rep.ring_oracle << " \\\\\n";
        continue;
      }
      out << "degree " << rep.degree << ": module " << rep.module_dim << " oracle " << rep.module_oracle << " "
          << (rep.module.equal ? "equal" : "DIFFERENT") << "; ring " << rep.ring_dim << " oracle " << rep.ring_oracle
          << " " << (rep.ring.equal ? "equal" : "DIFFERENT") << "\n";
      if (!rep.module.equal) out << "  module witness: " << rep.module.witness_text() << "\n";
      if (!rep.ring.equal) out << "  ring witness: " << rep.ring.witness_text() << "\n";
    }
    if (latex) out << "\\end{tabular}\n";
    out << (ok ? "all spans equal" : "span mismatch") << "\n";
  }
  return ok ? ExitCode::ok : ExitCode::certification;
}

}  // namespace

std::vector<int> parse_degree_list(const std::string& s) {
  std::vector<int> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const int a = int_of(s.substr(0, dots), "degree range");
    const int b = int_of(s.substr(dots + 2), "degree range");
    if (a > b) throw ConfigError("empty degree range '" + s + "'");
    for (int d = a; d <= b; ++d) out.push_back(d);
  } else {
    for (const auto& item : split(s, ',')) out.push_back(int_of(item, "degree"));
  }
  if (out.empty()) throw ConfigError("empty degree list");
  return out;
}

std::vector<int> parse_signs(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) out.push_back(int_of(item, "sign"));
  return out;
}

void JobConfig::validate(Subcommand s) const {
  try {
    catalog_case.validate();
  } catch (const UnsupportedCase& e) {
    throw ConfigError(e.what());
  }
  const std::size_t n = catalog_case.blocks();
  if (s != Subcommand::classify && signs.empty()) throw ConfigError("signs (a0, ..., an) are required");
  if (!signs.empty()) {
    if (signs.size() != n + 1)
      throw ConfigError("expected " + std::to_string(n + 1) + " signs for n = " + std::to_string(n) + ", got " +
                        std::to_string(signs.size()));
    for (int a : signs)
      if (a != 1 && a != -1) throw ConfigError("signs must be +1 or -1");
  }
  if (degree_max < 2) throw ConfigError("degree_max must be at least 2");
  if (verify_degrees.empty()) throw ConfigError("verify_degrees must not be empty");
  for (int d : verify_degrees)
    if (d < 0) throw ConfigError("verify degrees must be >= 0");
  if (limit_monomials == 0) throw ConfigError("limit_monomials must be positive");
}

JobConfig JobConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> keys = {"case",   "resonance",       "n",      "signs",         "degree_max",
                                                "verify_degrees", "format", "limit_monomials", "latex_document"};
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ConfigError("unknown config key '" + k + "'");
  JobConfig c;
  try {
    std::string name;
    std::vector<int> params;
    if (j.contains("case")) {
      c.catalog_case = CatalogCase::parse(j.at("case").get<std::string>());
      params = c.catalog_case.params;
      name = c.catalog_case.name();
    } else if (j.contains("resonance")) {
      name = j.at("resonance").at("name").get<std::string>();
      params = j.at("resonance").value("params", std::vector<int>{});
    } else {
      throw ConfigError("config needs 'case' or 'resonance'");
    }
    if (j.contains("n")) {
      const int n = j.at("n").get<int>();
      if (name == "non_resonant" && params.empty()) params = {n};
      if (name == "res_n1n2_Cn" && params.size() == 2) params.push_back(n);
    }
    std::string text = name;
    for (std::size_t k = 0; k < params.size(); ++k) text += (k ? "," : ":") + std::to_string(params[k]);
    c.catalog_case = CatalogCase::parse(text);
    if (j.contains("n") && c.catalog_case.blocks() != j.at("n").get<std::size_t>())
      throw ConfigError("n = " + std::to_string(j.at("n").get<int>()) + " does not match case " + c.catalog_case.to_string());
    if (j.contains("signs")) c.signs = j.at("signs").get<std::vector<int>>();
    if (j.contains("degree_max")) c.degree_max = j.at("degree_max").get<int>();
    if (j.contains("verify_degrees")) {
      const auto& v = j.at("verify_degrees");
      c.verify_degrees = v.is_string() ? parse_degree_list(v.get<std::string>()) : v.get<std::vector<int>>();
    }
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("limit_monomials")) c.limit_monomials = j.at("limit_monomials").get<std::size_t>();
    if (j.contains("latex_document")) c.latex_document = j.at("latex_document").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  } catch (const UnsupportedCase& e) {
    throw ConfigError(e.what());
  }
  return c;
}

ExitCode run_job(Subcommand s, const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate(s);
    switch (s) {
      case Subcommand::classify:
        return classify(config, out);
      case Subcommand::generators:
        return generators(config, out);
      case Subcommand::normal_form:
        return normal_form(config, out);
      case Subcommand::verify:
        return verify(config, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return ExitCode::config;
  } catch (const UnsupportedCase& e) {
    err << "config error: " << e.what() << "\n";
    return ExitCode::config;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return ExitCode::resource;
  } catch (const Error& e) {
    err << "certification failure: " << e.what() << "\n";
    return ExitCode::certification;
  }
  return ExitCode::ok;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"revnf: reversible-equivariant normal forms under Z2 x Z2"};
  app.name(args.empty() ? "revnf" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, degree_text, signs_text_arg, case_text, format_text, verify_text, limit_text;
  bool latex_document = false;
  app.add_option("--config", config_path, "JSON job configuration");
  app.add_option("--degree", degree_text, "truncation degree k >= 2");
  app.add_option("--signs", signs_text_arg, "involution signs a0,a1,...,an");
  app.add_option("--case", case_text, "catalog case NAME:p1,p2,...");
  app.add_option("--format", format_text, "latex, text or json");
  app.add_option("--verify-degrees", verify_text, "degrees to verify, e.g. 2..6");
  app.add_option("--limit-monomials", limit_text, "candidate bound per oracle slice");
  app.add_flag("--latex-document", latex_document, "standalone LaTeX document");
  std::vector<std::pair<CLI::App*, Subcommand>> subs = {
      {app.add_subcommand("classify", "involution pairs and their types"), Subcommand::classify},
      {app.add_subcommand("generators", "invariants and reversible-equivariant generators"), Subcommand::generators},
      {app.add_subcommand("normal-form", "assembled normal form"), Subcommand::normal_form},
      {app.add_subcommand("verify", "compare generator spans with the brute-force oracle"), Subcommand::verify}};

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  }

  Subcommand which = Subcommand::classify;
  for (const auto& [sub, s] : subs)
    if (sub->parsed()) which = s;

  JobConfig c;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config '" + config_path + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config '" + config_path + "' is not valid JSON: " + e.what());
      }
      c = JobConfig::from_json(j);
    } else if (case_text.empty()) {
      throw ConfigError("either --config or --case is required");
    }
    if (!case_text.empty()) {
      try {
        c.catalog_case = CatalogCase::parse(case_text);
      } catch (const UnsupportedCase& e) {
        throw ConfigError(e.what());
      }
    }
    if (!degree_text.empty()) c.degree_max = int_of(degree_text, "degree");
    if (!signs_text_arg.empty()) c.signs = parse_signs(signs_text_arg);
    if (!format_text.empty()) c.format = parse_format(format_text);
    if (!verify_text.empty()) c.verify_degrees = parse_degree_list(verify_text);
    if (!limit_text.empty()) {
      const int v = int_of(limit_text, "monomial limit");
      if (v <= 0) throw ConfigError("monomial limit must be positive");
      c.limit_monomials = static_cast<std::size_t>(v);
    }
    if (latex_document) c.latex_document = true;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  }
  return static_cast<int>(run_job(which, c, out, err));
}

}  // namespace revnf

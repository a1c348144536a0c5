#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revnf/errors.hpp"
#include "revnf/normalform.hpp"

using namespace revnf;

namespace {

struct Built {
  SymmetryContext ctx;
  GeneratorSet result;
  NormalForm nf;
};

Built build(const std::string& c, const std::vector<int>& signs, int k = 4) {
  SymmetryContext ctx = SymmetryContext::from_catalog(CatalogCase::parse(c), signs);
  GeneratorSet r = pipeline(ctx).result;
  NormalForm nf = assemble(r, ctx.linear_part, k);
  return {ctx, r, nf};
}

std::vector<std::string> generator_names(const NormalForm& nf) {
  std::vector<std::string> out;
  for (const auto& s : nf.summands) out.push_back(s.generator);
  return out;
}

std::vector<std::string> argument_names(const NormalForm& nf) {
  std::vector<std::string> out;
  for (const auto& a : nf.arguments) out.push_back(a.name);
  return out;
}

}  // namespace

TEST_CASE("non-resonant bireversible form with a0 = 1") {
  Built b = build("non_resonant:2", {1, 1, -1});
  CHECK(generator_names(b.nf) == std::vector<std::string>{"H1", "H3", "H5"});
  CHECK(argument_names(b.nf) == std::vector<std::string>{"v1", "v2", "v3"});
  CHECK(b.nf.arguments[1].text == "|z1|^2");
  const std::string expected =
      "xdot = L x + f0(X)*H1 + f1(X)*H3 + f2(X)*H5\n"
      "x1dot = x2\n"
      "x2dot = f0(X)\n"
      "z1dot = -i*omega1*z1 + f1(X)*(i*z1)\n"
      "z2dot = -i*omega2*z2 + f2(X)*(i*z2)\n"
      "X = (v1, v2, v3)\n"
      "v1 = x1\n"
      "v2 = |z1|^2\n"
      "v3 = |z2|^2\n"
      "H1 = (0, 1, 0, 0)\n"
      "H3 = (0, 0, i*z1, 0)\n"
      "H5 = (0, 0, 0, i*z2)\n"
      "degree 2: f0 f1 f2\n"
      "degree 3: f0 f1 f2\n"
      "degree 4: f0 f1 f2";
  CHECK(emit(b.nf, OutputFormat::text) == expected);
}

TEST_CASE("non-resonant form with a0 = -1") {
  Built b = build("non_resonant:1", {-1, 1}, 5);
  CHECK(generator_names(b.nf) == std::vector<std::string>{"v1*H1", "H3"});
  CHECK(argument_names(b.nf) == std::vector<std::string>{"v1^2", "v2"});
  const std::string text = emit(b.nf, OutputFormat::text);
  CHECK(text.find("x2dot = f0(X)*x1\n") != std::string::npos);
  CHECK(b.nf.terms == std::vector<std::vector<std::size_t>>{{}, {0, 1}, {}, {0, 1}});
}

TEST_CASE("summand instances are reversible-equivariant") {
  const std::vector<std::pair<std::string, std::vector<int>>> cases = {
      {"non_resonant:3", {1, -1, 1, 1}},      {"non_resonant:2", {-1, 1, 1}},
      {"res_n1n2_C3:1,2", {1, 1, 1, 1}},      {"res_n1n2_C3:1,2", {-1, 1, -1, 1}},
      {"res_n1n2_Cn:1,2,4", {1, 1, -1, 1, 1}}};
  for (const auto& [c, s] : cases) {
    Built b = build(c, s, 6);
    CAPTURE(c);
    for (std::size_t j = 0; j < b.nf.summands.size(); ++j) {
      auto inst = b.nf.summand_instance(j);
      REQUIRE(inst);
      CHECK(inst->degree() >= 2);
      CHECK_MESSAGE(membership(*inst, b.ctx.full_group(), MembershipKind::reversible_equivariant),
                    b.nf.summands[j].generator);
    }
  }
}

TEST_CASE("empty normal form") {
  NormalForm nf;
  nf.linear_part = LinearPart(1);
  CHECK(emit(nf, OutputFormat::text) == "xdot = L x");
  CHECK(emit(nf, OutputFormat::latex) == "\\dot{x} = L x");
  GeneratorSet empty;
  empty.context = GroupContext::finite(1, {});
  NormalForm assembled = assemble(empty, LinearPart(1), 3);
  CHECK(emit(assembled, OutputFormat::text) == "xdot = L x");
}

TEST_CASE("json round trip") {
  for (const auto& b : {build("non_resonant:2", {1, 1, 1}), build("res_n1n2_C3:1,2", {-1, 1, -1, 1}),
                        build("res_double_C4:1,2,1,2", {1, 1, -1, 1, 1}, 3)}) {
    const nlohmann::json j = to_json(b.nf);
    CHECK(j["schema"] == "nf-v1");
    CHECK(normal_form_from_json(j) == b.nf);
    CHECK(normal_form_from_json(nlohmann::json::parse(emit(b.nf, OutputFormat::json))) == b.nf);
  }
  nlohmann::json bad = to_json(build("non_resonant:1", {1, 1}).nf);
  bad["schema"] = "nf-v0";
  CHECK_THROWS_AS(normal_form_from_json(bad), ParseError);
  CHECK_THROWS_AS(normal_form_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("rendering is deterministic") {
  Built a = build("res_n1n2_C3:1,2", {1, 1, -1, 1});
  Built b = build("res_n1n2_C3:1,2", {1, 1, -1, 1});
  for (auto f : {OutputFormat::text, OutputFormat::latex, OutputFormat::json}) CHECK(emit(a.nf, f) == emit(b.nf, f));
  const std::string doc = emit(a.nf, OutputFormat::latex, true);
  CHECK(doc.rfind("\\documentclass{article}", 0) == 0);
  CHECK(doc.find("\\end{document}") != std::string::npos);
  CHECK(doc.find("\\dot{z}_{3}") != std::string::npos);
}

TEST_CASE("Type A latex on R^2 x C^3") {
  Built b = build("res_n1n2_C3:1,2", {1, 1, 1, 1});
  const std::string latex = emit(b.nf, OutputFormat::latex);
  CHECK(latex.find("\\dot{x}_{2} &= f_{0}(X) \\left(") != std::string::npos);
  CHECK(latex.find("X &= (v_{1}, v_{2}, v_{3}, v_{4}, v_{6})") != std::string::npos);
  CHECK(latex.find("v_{5} &= \\operatorname{Im}(z_{1}^{2} \\bar{z}_{2})") != std::string::npos);
}

TEST_CASE("preconditions") {
  Built b = build("non_resonant:1", {1, 1});
  CHECK_THROWS_AS(assemble(b.result, b.ctx.linear_part, 1), ConfigError);
  GeneratorSet bad = b.result;
  bad.module_generators.push_back({PolyMap::parse("(x1, x2, 0)", 1), Label::generator("H0")});
  CHECK_THROWS_AS(assemble(bad, b.ctx.linear_part, 3), UncertifiedInput);
  CHECK_THROWS_AS(parse_format("pdf"), ConfigError);
  CHECK(parse_format("json") == OutputFormat::json);
}

TEST_CASE("latex names") {
  CHECK(name_latex("v4^2*H5") == "v_{4}^{2} H_{5}");
  CHECK(name_latex("omega1") == "\\omega_{1}");
  CHECK(name_latex("u1*u5*H12") == "u_{1} u_{5} H_{12}");
}

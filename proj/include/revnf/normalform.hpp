#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revnf/continuous.hpp"
#include "revnf/symmetry_ops.hpp"

namespace revnf {

/// Entry of the invariant argument tuple X.
struct NormalFormArgument {
  std::string name;
  Polynomial poly;
  /// Expansion in coordinates, e.g. "x1^2" or "Re(z1^2*zb2)".
  std::string text;
  std::string latex;
  friend bool operator==(const NormalFormArgument&, const NormalFormArgument&) = default;
};

/// Summand f_index(X) * generator.
struct NormalFormSummand {
  std::size_t index = 0;
  std::string generator;
  PolyMap map;
  int degree = 0;
  friend bool operator==(const NormalFormSummand&, const NormalFormSummand&) = default;
};

/// xdot = L x + sum_j f_j(X) G_j, truncated at degree_max.
struct NormalForm {
  LinearPart linear_part;
  int degree_max = 2;
  std::vector<NormalFormArgument> arguments;
  /// Ordered by first nonzero component.
  std::vector<NormalFormSummand> summands;
  /// terms[d - 2]: indices of the summands with a nonzero degree-d part, d = 2..degree_max.
  std::vector<std::vector<std::size_t>> terms;
  /// Definitions of the invariant names used by arguments and generators.
  std::vector<Symbol> symbols;
  /// Free-form heading, e.g. the case and signs.
  std::string title;

  /// G_j times the first product of arguments of the lowest degree that brings
  /// the total degree to at least 2; empty if none exists up to degree_max.
  std::optional<PolyMap> summand_instance(std::size_t j) const;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.linear_part == b.linear_part && a.degree_max == b.degree_max && a.arguments == b.arguments &&
           a.summands == b.summands && a.terms == b.terms && a.symbols == b.symbols && a.title == b.title;
  }
};

/// Throws UncertifiedInput when some element of g fails its membership check,
/// ConfigError when degree_max < 2.
NormalForm assemble(const GeneratorSet& g, const LinearPart& L, int degree_max, const std::string& title = "");

enum class OutputFormat { text, latex, json };
OutputFormat parse_format(const std::string& s);

/// Deterministic rendering; latex_standalone wraps the fragment in a compilable document.
std::string emit(const NormalForm& nf, OutputFormat format, bool latex_standalone = false);

nlohmann::json to_json(const NormalForm& nf);
/// Inverse of to_json; throws ParseError on schema mismatch.
NormalForm normal_form_from_json(const nlohmann::json& j);

/// "v4^2*H5" -> "v_{4}^{2} H_{5}", "omega1" -> "\omega_{1}".
std::string name_latex(const std::string& name);

}  // namespace revnf

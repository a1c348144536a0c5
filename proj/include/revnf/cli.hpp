#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revnf/catalog.hpp"
#include "revnf/normalform.hpp"
#include "revnf/oracle.hpp"

namespace revnf {

enum class ExitCode : int { ok = 0, config = 2, resource = 3, certification = 4 };

enum class Subcommand { classify, generators, normal_form, verify };

struct JobConfig {
  CatalogCase catalog_case;
  /// Empty when not given; required by every subcommand except classify.
  std::vector<int> signs;
  int degree_max = 4;
  std::vector<int> verify_degrees = {2, 3, 4, 5};
  OutputFormat format = OutputFormat::text;
  std::size_t limit_monomials = kDefaultMonomialLimit;
  /// Standalone LaTeX document instead of a fragment.
  bool latex_document = false;

  /// Throws ConfigError.
  void validate(Subcommand s) const;
  /// Reads the keys case (or resonance {name, params}), n, signs, degree_max,
  /// verify_degrees, format, limit_monomials and latex_document; unknown keys are errors.
  static JobConfig from_json(const nlohmann::json& j);
};

/// "2..6", "2,3,5" or "4".
std::vector<int> parse_degree_list(const std::string& s);
/// "1,-1,1".
std::vector<int> parse_signs(const std::string& s);

/// Runs one job. Configuration errors exit 2, resource limits 3, failed certification 4.
ExitCode run_job(Subcommand s, const JobConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: revnf <classify|generators|normal-form|verify> [flags].
/// Flags override values from --config.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revnf

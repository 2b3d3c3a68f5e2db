#pragma once

// Run configuration, report assembly and the three commands behind the CLI.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "a2ext/check.hpp"
#include "a2ext/ext.hpp"
#include "a2ext/qalgebra.hpp"

namespace a2ext {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replaces entry (row, col) of d_degree of the primary complex by entry + x1.
struct Mutation {
  unsigned degree = 2;
  std::size_t row = 0, col = 0;
};

struct RunConfig {
  unsigned N = 3;
  std::string field;  // empty: fp with L = 2N^2 (N odd) or 4 (N = 2), p the least prime = 1 mod L above 10^6
  long long q12_exp = 1;
  AlgebraMode mode = AlgebraMode::Full;
  std::optional<unsigned> n_max;  // default 8 (N = 3), 6 (N >= 5), 10 (N = 2)
  Convention convention = Convention::LeftThenRight;
  std::vector<std::string> suites{"all"};
  unsigned fuzz_cases = 500;
  bool deterministic = false;
  std::optional<Mutation> mutation;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"complex", "exact",  "dtilde",     "appendix", "relations",
                                              "e2",      "k2",     "properties", "all"};
  return names;
}

unsigned effective_n_max(const RunConfig& c);
FieldSpec effective_field(const RunConfig& c);
/// Throws ConfigError with a readable message.
void validate_config(const RunConfig& c);
nlohmann::json config_json(const RunConfig& c);

struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<std::string> lines;  // informational text (tables, parameters)
  std::vector<Check> checks;
  std::vector<std::size_t> ext_dims;
  long long timing_ms = 0;

  bool ok() const { return all_pass(checks); }
};

/// {"schema_version": 1, "config", "checks", "ext_dims", "timing_ms"}
nlohmann::json report_json(const Report& r);
std::string report_text(const Report& r);

/// Closed forms for dim Ext^n: (3n^2+8n+5)/8 or (3n^2+10n+8)/8 (N >= 3),
/// n + 1 (N = 2) and (n+1)(n+2)/2 (graded).
std::size_t closed_form_ext_dim(unsigned N, AlgebraMode mode, unsigned n);

Report cmd_info(const RunConfig& c);
Report cmd_verify(const RunConfig& c);
Report cmd_ext_dims(const RunConfig& c);

}  // namespace a2ext

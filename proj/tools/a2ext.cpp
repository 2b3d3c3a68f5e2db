#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "a2ext/report.hpp"

namespace {

// Exit codes: 0 all selected checks pass, 1 a check failed, 2 bad configuration.
int emit(const a2ext::Report& r, const std::string& json_path) {
  std::cout << a2ext::report_text(r);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << a2ext::report_json(r).dump(2) << "\n";
  }
  return r.ok() ? 0 : 1;
}

a2ext::Mutation parse_mutation(const std::string& s) {
  a2ext::Mutation m;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> m.degree >> c1 >> m.row >> c2 >> m.col) || c1 != ':' || c2 != ':' || !in.eof())
    throw a2ext::ConfigError("--mutate expects DEGREE:ROW:COL");
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext algebra of the rank-two Nichols algebra of type A2 at a root of unity"};
  app.require_subcommand(1);

  a2ext::RunConfig cfg;
  std::string mode = "full", convention = "left", json_path, mutate;
  std::vector<std::string> suites;
  unsigned n_max = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.N, "order of qbar (2 or odd >= 3)");
    sub->add_option("--field", cfg.field, "cyclotomic:L or fp:p:L");
    sub->add_option("--q12-exp", cfg.q12_exp, "q12 = z^k for the primitive L-th root z");
    sub->add_option("--mode", mode, "full or graded")->check(CLI::IsMember({"full", "graded"}));
    sub->add_option("--n-max", n_max, "top cohomological degree");
    sub->add_option("--convention", convention, "product convention")->check(CLI::IsMember({"left", "right"}));
    sub->add_option("--json", json_path, "write the JSON report here");
    sub->add_flag("--deterministic", cfg.deterministic, "report timing_ms = 0");
  };

  auto* info = app.add_subcommand("info", "parameters, dim R and basis checks");
  add_common(info);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", suites, "suite name (repeatable)")->check(CLI::IsMember(a2ext::suite_names()));
  verify->add_option("--fuzz-cases", cfg.fuzz_cases, "associativity fuzz cases");
  verify->add_option("--mutate", mutate, "DEGREE:ROW:COL, add x1 to one entry of the primary complex");
  auto* dims = app.add_subcommand("ext-dims", "dimension table with closed-form column");
  add_common(dims);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.mode = mode == "graded" ? a2ext::AlgebraMode::Graded : a2ext::AlgebraMode::Full;
    cfg.convention = convention == "right" ? a2ext::Convention::RightThenLeft : a2ext::Convention::LeftThenRight;
    if (n_max) cfg.n_max = n_max;
    if (!suites.empty()) cfg.suites = suites;
    if (!mutate.empty()) cfg.mutation = parse_mutation(mutate);

    if (info->parsed()) return emit(a2ext::cmd_info(cfg), json_path);
    if (verify->parsed()) return emit(a2ext::cmd_verify(cfg), json_path);
    return emit(a2ext::cmd_ext_dims(cfg), json_path);
  } catch (const a2ext::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <doctest.h>

#include "a2ext/report.hpp"

using namespace a2ext;

TEST_SUITE("report") {

TEST_CASE("configuration defaults and validation") {
  RunConfig c;
  CHECK(effective_n_max(c) == 8);
  CHECK(format_field_spec(effective_field(c)) == "fp:1000081:18");
  c.N = 2;
  CHECK(effective_n_max(c) == 10);
  CHECK(effective_field(c).root_order == 4);
  c.mode = AlgebraMode::Graded;
  CHECK_THROWS_AS(validate_config(c), ConfigError);

  RunConfig bad;
  bad.N = 4;
  CHECK_THROWS_AS(validate_config(bad), ConfigError);
  bad.N = 3;
  bad.field = "fp:13:4";
  CHECK_THROWS_AS(validate_config(bad), ConfigError);
  bad.field = "nonsense";
  CHECK_THROWS_AS(validate_config(bad), ConfigError);
  bad.field.clear();
  bad.suites = {"bogus"};
  CHECK_THROWS_AS(validate_config(bad), ConfigError);
  bad.suites = {"exact"};
  bad.n_max = 0;
  CHECK_THROWS_AS(validate_config(bad), ConfigError);
  bad.n_max = 3;
  CHECK_NOTHROW(validate_config(bad));
}

TEST_CASE("closed forms") {
  CHECK(closed_form_ext_dim(3, AlgebraMode::Full, 8) == 35);
  CHECK(closed_form_ext_dim(5, AlgebraMode::Full, 3) == 7);
  CHECK(closed_form_ext_dim(3, AlgebraMode::Graded, 8) == 45);
  CHECK(closed_form_ext_dim(2, AlgebraMode::Full, 10) == 11);
}

TEST_CASE("json report shape and stability") {
  RunConfig c;
  c.n_max = 5;
  c.fuzz_cases = 20;
  c.deterministic = true;
  const auto r1 = cmd_verify(c), r2 = cmd_verify(c);
  CHECK(r1.ok());
  const auto j = report_json(r1);
  CHECK(j["schema_version"] == 1);
  CHECK(j["timing_ms"] == 0);
  CHECK(j["config"]["N"] == 3);
  CHECK(j["ext_dims"] == nlohmann::json({1, 2, 5, 7, 12, 15}));
  REQUIRE(j["checks"].is_array());
  for (const auto& ch : j["checks"]) {
    CHECK(ch.contains("name"));
    CHECK(ch.contains("details"));
    const auto s = ch["status"].get<std::string>();
    CHECK((s == "pass" || s == "fail" || s == "skipped"));
  }
  CHECK(report_json(r1).dump() == report_json(r2).dump());
  CHECK(report_text(r1).find("summary:") != std::string::npos);
}

TEST_CASE("failures reach the report") {
  RunConfig c;
  c.n_max = 4;
  c.suites = {"complex", "exact"};
  c.mutation = Mutation{2, 0, 0};
  CHECK_FALSE(cmd_verify(c).ok());

  RunConfig r;
  r.n_max = 4;
  r.suites = {"relations"};
  r.convention = Convention::RightThenLeft;
  CHECK_FALSE(cmd_verify(r).ok());
  r.convention = Convention::LeftThenRight;
  CHECK(cmd_verify(r).ok());

  RunConfig m;
  m.mutation = Mutation{9, 0, 0};
  m.n_max = 3;
  CHECK_THROWS_AS(cmd_verify(m), ConfigError);
}

TEST_CASE("info and ext-dims commands") {
  RunConfig c;
  c.N = 5;
  c.n_max = 4;
  const auto info = cmd_info(c);
  CHECK(info.ok());
  CHECK(info.checks.size() == 3);
  const auto dims = cmd_ext_dims(c);
  CHECK(dims.ok());
  CHECK(dims.ext_dims == std::vector<std::size_t>{1, 2, 5, 7, 12});
}

}

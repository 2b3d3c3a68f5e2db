// End-to-end acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "a2ext/ext_checks.hpp"
#include "a2ext/report.hpp"

using namespace a2ext;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig config(unsigned N, std::vector<std::string> suites, std::optional<unsigned> n_max = {}) {
  RunConfig c;
  c.N = N;
  c.suites = std::move(suites);
  c.n_max = n_max;
  return c;
}

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool passed(const Report& r, const std::string& name) {
  const auto* c = find(r, name);
  return c && c->status == Status::Pass;
}

std::size_t count_prefix(const Report& r, const std::string& prefix, Status s) {
  std::size_t n = 0;
  for (const auto& c : r.checks) n += c.name.rfind(prefix, 0) == 0 && c.status == s;
  return n;
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) return c.name + " " + c.details;
  return {};
}

// closed forms evaluated by hand for n = 0..8
const std::vector<std::size_t> kN3{1, 2, 5, 7, 12, 15, 22, 26, 35};

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = cmd_verify(config(2, {"complex", "exact", "relations"}, 10));
  std::vector<std::size_t> expect;
  for (std::size_t n = 0; n <= 10; ++n) expect.push_back(n + 1);
  o.require(r.ok(), first_failure(r));
  o.require(passed(r, "complex/N2/d^2=0"), "d^2");
  o.require(passed(r, "exact/N2/kernel-dimensions"), "kernel dimensions");
  o.require(count_prefix(r, "exact/N2/degree", Status::Pass) == 11, "exactness degrees 0..10");
  o.require(r.ext_dims == expect, "ext dims");
  o.require(count_prefix(r, "relation/", Status::Pass) == 4, "relations");
  o.require(seconds_since(t0) < 10, "runtime");
  o.note = o.ok ? "dims n+1 to n=10, " + std::to_string(count_prefix(r, "relation/", Status::Pass)) + " relations" : o.note;
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const std::string field : {"", "cyclotomic:18"}) {
    for (long long q : {1LL, 2LL}) {
      const auto t0 = std::chrono::steady_clock::now();
      auto c = config(3, {"complex", "exact"}, 8);
      c.field = field;
      c.q12_exp = q;
      const auto r = cmd_verify(c);
      const std::string tag = (field.empty() ? "fp" : field) + " q12=z^" + std::to_string(q) + ": ";
      o.require(r.ok(), tag + first_failure(r));
      o.require(passed(r, "basis/dimension") && passed(r, "basis/reverse-pbw") && passed(r, "basis/pbw-monomials"),
                tag + "bases");
      o.require(passed(r, "complex/P/d^2=0"), tag + "d^2");
      o.require(count_prefix(r, "exact/P/degree", Status::Pass) == 9, tag + "exactness");
      o.require(r.ext_dims == kN3, tag + "ext dims");
      if (field.empty()) o.require(seconds_since(t0) < 120, tag + "runtime");
    }
  }
  if (o.ok) o.note = "dims 1 2 5 7 12 15 22 26 35 in both field modes, q12 = z, z^2";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto r = cmd_verify(config(3, {"relations"}));
  const auto n = count_prefix(r, "relation/", Status::Pass);
  o.require(r.ok(), first_failure(r));
  o.require(n >= 28, "only " + std::to_string(n) + " relations");
  for (const char* t : {"relation/b1 c2 = q12^6 c1 c1", "relation/q12^6 b2 c1 = c2 c2", "relation/b1 b2 = q12^3 c1 c2"})
    o.require(passed(r, t), std::string("missing ") + t);
  if (o.ok) o.note = std::to_string(n) + " relations hold, convention left";
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = cmd_verify(config(5, {"exact", "relations", "properties"}, 6));
  o.require(r.ok(), first_failure(r));
  for (const char* t : {"relation/c1 c1 = 0", "relation/c2 c2 = 0", "relation/c1 c2 = 0", "relation/c2 c1 = 0",
                        "relation/a1 c1 = 0", "relation/c1 a1 = 0"})
    o.require(passed(r, t), std::string("missing ") + t);
  o.require(passed(r, "ext/dimensions"), "ext dims");
  o.require(seconds_since(t0) < 600, "runtime");
  if (o.ok) o.note = std::to_string(count_prefix(r, "relation/", Status::Pass)) + " relations, dims to n=6";
  return o;
}

Outcome ac5() {
  Outcome o;
  for (unsigned N : {3u, 5u}) {
    const auto r = cmd_verify(config(N, {"complex", "exact", "appendix"}, 6));
    const std::string tag = "N=" + std::to_string(N) + ": ";
    for (const char* t : {"complex/segment/ranks", "complex/segment/d^2=0", "complex/segment/minimal",
                          "complex/segment/induced-maps-zero", "exact/segment/degree0", "exact/segment/degree1",
                          "exact/segment/degree2", "exact/segment/degree3", "ext/segment-agreement",
                          "appendix/identity/Dbar-x1", "appendix/identity/Dbar-x2"})
      o.require(passed(r, t), tag + t);
  }
  if (o.ok) o.note = "ranks 1 2 5 7 12, exact, minimal, agrees with P for N = 3, 5";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::size_t squares = 0, cases = 0;
  for (unsigned N : {3u, 5u}) {
    const auto r = cmd_verify(config(N, {"appendix", "dtilde"}, 8));
    const std::string tag = "N=" + std::to_string(N) + ": ";
    o.require(r.ok(), tag + first_failure(r));
    o.require(passed(r, "appendix/identity/X1") && passed(r, "appendix/identity/X2"), tag + "X identities");
    o.require(count_prefix(r, "appendix/f", Status::Pass) > 0 && count_prefix(r, "appendix/g", Status::Pass) > 0,
              tag + "squares");
    squares += count_prefix(r, "appendix/", Status::Pass);
    cases += count_prefix(r, "dtilde/Phi", Status::Pass);
  }
  if (o.ok) o.note = std::to_string(squares) + " appendix checks, " + std::to_string(cases) + " division cases";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto r = cmd_verify(config(3, {"e2"}, 8));
  o.require(r.ok(), first_failure(r));
  o.require(passed(r, "e2/table"), "table");
  o.require(count_prefix(r, "e2/column", Status::Pass) == 9, "column sums");
  o.require(e2_column_sums(8) == kN3, "column sums vs closed form");
  if (o.ok) o.note = "table 1 1 3 2 5 3 7 4, column sums match to n=8";
  return o;
}

Outcome ac8() {
  Outcome o;
  for (long long q : {1LL, 2LL}) {
    std::map<std::string, std::vector<std::pair<std::string, Status>>> verdicts;
    std::map<std::string, std::vector<std::size_t>> dims;
    for (const std::string field : {"cyclotomic:18", "fp:1000081:18", "fp:37:18"}) {
      auto c = config(3, {"relations"}, 6);
      c.field = field;
      c.q12_exp = q;
      const auto r = cmd_verify(c);
      for (const auto& ch : r.checks) verdicts[field].push_back({ch.name, ch.status});
      dims[field] = r.ext_dims;
    }
    for (const auto& [field, v] : verdicts) {
      o.require(v == verdicts.begin()->second, field + " relation verdicts differ");
      o.require(dims[field] == dims.begin()->second, field + " dims differ");
    }
    o.require(dims.begin()->second == std::vector<std::size_t>(kN3.begin(), kN3.begin() + 7), "dims");
  }
  if (o.ok) o.note = "cyclotomic:18, fp:1000081:18, fp:37:18 agree for q12 = z, z^2";
  return o;
}

Outcome ac9() {
  Outcome o;
  for (auto [N, expect] : {std::pair{3u, 3u}, std::pair{5u, 3u}, std::pair{2u, 2u}}) {
    const auto r = cmd_ext_dims(config(N, {"all"}));
    o.require(r.ok() && complexity_estimate(r.ext_dims) == expect, "N=" + std::to_string(N) + " complexity");
  }
  auto g = config(3, {"all"}, 8);
  g.mode = AlgebraMode::Graded;
  const auto r = cmd_ext_dims(g);
  for (std::size_t n = 0; n <= 8; ++n) o.require(r.ext_dims.at(n) == (n + 1) * (n + 2) / 2, "graded triangular");
  if (o.ok) o.note = "cx 3 (N=3,5), 2 (N=2); graded dims triangular to n=8";
  return o;
}

Outcome ac10() {
  Outcome o;
  std::size_t algebras = 0;
  for (unsigned N : {2u, 3u, 5u}) {
    auto c = config(N, {"properties"});
    c.fuzz_cases = 500;
    const auto r = cmd_verify(c);
    const std::string tag = "N=" + std::to_string(N) + ": ";
    o.require(passed(r, "associativity/fuzz"), tag + "associativity");
    o.require(passed(r, "lift-independence"), tag + "lift independence");
    ++algebras;
  }
  const auto k = cmd_verify(config(3, {"k2"}, 6));
  o.require(k.ok() && count_prefix(k, "k2/degree", Status::Pass) == 6, "K2 spanning");
  if (o.ok) o.note = "500 cases on " + std::to_string(algebras) + " algebras, lifts independent, K2 to degree 6";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1  N=2 resolution and Ext", ac1},      {"AC2  N=3 complex P to degree 8", ac2},
      {"AC3  N=3 Ext relations", ac3},           {"AC4  N=5 Ext relations", ac4},
      {"AC5  minimal segment", ac5},             {"AC6  comparison maps and division cases", ac6},
      {"AC7  E2 bookkeeping", ac7},              {"AC8  cyclotomic vs prime field", ac8},
      {"AC9  complexity and graded mode", ac9}, {"AC10 products and K2 spanning", ac10}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << "  (" << o.note << ")" << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << std::endl;
  return failed ? 1 : 0;
}

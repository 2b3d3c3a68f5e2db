#include "a2ext/report.hpp"

#include <chrono>
#include <sstream>

#include "a2ext/ext_checks.hpp"
#include "a2ext/resolution.hpp"

namespace a2ext {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

bool wants(const RunConfig& c, const std::string& suite) {
  for (const auto& s : c.suites)
    if (s == suite || s == "all") return true;
  return false;
}

Check skipped(std::string name, std::string why) { return {std::move(name), Status::Skipped, std::move(why)}; }

void append(std::vector<Check>& out, std::vector<Check> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

template <ExactField F>
class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg), n_max_(effective_n_max(cfg)) {
    const auto spec = effective_field(cfg);
    field_ = std::make_shared<const F>(spec);
    try {
      alg_ = Algebra<F>::make(field_, standard_params(*field_, cfg.N, cfg.q12_exp, cfg.mode));
    } catch (const AlgebraError& e) {
      throw ConfigError(e.what());
    }
  }

  const Algebra<F>& algebra() const { return *alg_; }
  bool n2() const { return alg_->is_n2(); }
  bool full_odd() const { return !n2() && alg_->mode() == AlgebraMode::Full; }
  const char* primary_name() const { return n2() ? "N2" : "P"; }

  const FreeComplex<F>& primary() {
    if (!primary_) {
      const unsigned top = std::max(n_max_ + 1, 6u);
      auto c = n2() ? build_resolution_N2(alg_, top) : build_P_complex(alg_, top);
      if (cfg_.mutation) {
        const auto& m = *cfg_.mutation;
        if (m.degree < 1 || m.degree > c.top_degree() || m.row >= c.d(m.degree).rows() || m.col >= c.d(m.degree).cols())
          throw ConfigError("mutation position outside the complex");
        c = c.with_entry(m.degree, m.row, m.col, c.d(m.degree).at(m.row, m.col) + alg_->x1());
      }
      primary_ = std::make_shared<const FreeComplex<F>>(std::move(c));
    }
    return *primary_;
  }

  const ExtEngine<F>& primary_engine() {
    if (!primary_engine_) {
      primary();
      primary_engine_ = std::make_unique<ExtEngine<F>>(primary_);
    }
    return *primary_engine_;
  }

  const FreeComplex<F>& segment() {
    if (!segment_) segment_ = std::make_shared<const FreeComplex<F>>(build_minimal_segment(alg_));
    return *segment_;
  }

  const ExtEngine<F>& segment_engine() {
    if (!segment_engine_) {
      segment();
      segment_engine_ = std::make_unique<ExtEngine<F>>(segment_);
    }
    return *segment_engine_;
  }

  const std::vector<std::size_t>& ext_dims() {
    if (ext_dims_.empty()) ext_dims_ = ext_dimensions(primary_engine().cochains(), n_max_);
    return ext_dims_;
  }

  std::vector<std::string> info_lines() const {
    const auto& A = *alg_;
    std::vector<std::string> out;
    out.push_back("field " + format_field_spec(field_->spec()));
    for (const auto& w : field_warnings(field_->spec())) out.push_back("warning: " + w);
    out.push_back("N = " + std::to_string(A.N()) + ", mode " + (A.mode() == AlgebraMode::Full ? "full" : "graded"));
    out.push_back("qbar = " + A.format_scalar(A.qbar()) + ", q12 = " + A.format_scalar(A.q12()) +
                  ", q21 = " + A.format_scalar(A.q21()));
    out.push_back("dim R = " + std::to_string(A.dim()));
    return out;
  }

  std::vector<Check> basis_checks() const {
    const auto& A = *alg_;
    std::vector<Check> out;
    const std::size_t expected = n2() ? 8 : static_cast<std::size_t>(A.N()) * A.N() * A.N();
    out.push_back(make_check("basis/dimension", A.dim() == expected, "dim R = " + std::to_string(A.dim())));
    if (n2()) return out;
    bool words_ok = true;
    const unsigned N = A.N();
    for (unsigned a = 0; a < N && words_ok; ++a)
      for (unsigned b = 0; b < N && words_ok; ++b)
        for (unsigned c = 0; c < N && words_ok; ++c)
          words_ok = A.power(A.x1(), a) * A.power(A.y(), b) * A.power(A.x2(), c) == A.monomial(a, b, c);
    out.push_back(make_check("basis/pbw-monomials", words_ok, "x1^a y^b x2^c multiply out to the basis elements"));
    const auto r = A.reverse_basis_rank();
    out.push_back(make_check("basis/reverse-pbw", r == A.dim(),
                             "x2^c y^b x1^a span a space of dimension " + std::to_string(r)));
    return out;
  }

  std::vector<Check> complex_suite() {
    std::vector<Check> out = basis_checks();
    const auto& p = primary();
    const std::string tag = std::string("complex/") + primary_name();
    const auto rep = verify_complex(p);
    std::string details = "d_n d_(n-1) = 0 for n = 2.." + std::to_string(p.top_degree());
    if (!rep.ok()) {
      const auto& f = rep.failures.front();
      details = std::to_string(rep.failures.size()) + " nonzero entries, first in degree " + std::to_string(f.degree) +
                " at (" + std::to_string(f.row) + "," + std::to_string(f.col) + "): " + f.residue;
    }
    out.push_back(make_check(tag + "/d^2=0", rep.ok(), details));
    const auto& hom = primary_engine().cochains();
    out.push_back(make_check(tag + "/hom-composes-to-zero", hom.composes_to_zero()));
    if (n2() || alg_->mode() == AlgebraMode::Graded)
      out.push_back(make_check(tag + "/minimal", is_minimal(p)));
    if (full_odd()) {
      out.push_back(make_check(tag + "/induced-map-degree1-nonzero", !hom.maps.at(1).is_zero(),
                               "scalar dtilde entries make P non-minimal"));
      const auto& s = segment();
      const auto srep = verify_complex(s);
      out.push_back(make_check("complex/segment/d^2=0", srep.ok(),
                               srep.ok() ? "" : std::to_string(srep.failures.size()) + " nonzero entries"));
      out.push_back(make_check("complex/segment/ranks", s.ranks() == std::vector<std::size_t>{1, 2, 5, 7, 12},
                               join(s.ranks())));
      out.push_back(make_check("complex/segment/minimal", is_minimal(s)));
      out.push_back(make_check("complex/segment/induced-maps-zero", segment_engine().cochains().all_zero()));
    }
    return out;
  }

  std::vector<Check> exact_suite() {
    std::vector<Check> out;
    const auto& p = primary();
    const auto rep = verify_exactness(p, n_max_ + 1);
    for (const auto& row : rep.rows) {
      if (row.boundary) continue;
      out.push_back(make_check(std::string("exact/") + primary_name() + "/degree" + std::to_string(row.degree), row.ok,
                               "kernel " + std::to_string(row.kernel_dim) + ", image " + std::to_string(row.image_dim)));
    }
    if (n2()) {
      bool ok = true;
      std::string bad;
      for (const auto& row : rep.rows) {
        if (row.boundary || row.degree == 0) continue;
        const unsigned n = row.degree;
        const std::size_t expected = n % 2 ? 4 * n + 5 : 4 * n + 7;
        if (row.kernel_dim != expected) {
          ok = false;
          bad = "degree " + std::to_string(n) + ": " + std::to_string(row.kernel_dim) + " vs " + std::to_string(expected);
        }
      }
      out.push_back(make_check("exact/N2/kernel-dimensions", ok, ok ? "4n+5 (n odd), 4n+7 (n even)" : bad));
    }
    const auto& dims = ext_dims();
    std::vector<std::size_t> expected;
    for (unsigned n = 0; n <= n_max_; ++n) expected.push_back(closed_form_ext_dim(alg_->N(), alg_->mode(), n));
    out.push_back(make_check("ext/dimensions", dims == expected, "computed " + join(dims) + "; closed form " + join(expected)));
    if (full_odd()) {
      const auto srep = verify_exactness(segment(), 4);
      for (const auto& row : srep.rows) {
        if (row.boundary) continue;
        out.push_back(make_check("exact/segment/degree" + std::to_string(row.degree), row.ok,
                                 "kernel " + std::to_string(row.kernel_dim) + ", image " + std::to_string(row.image_dim)));
      }
      if (n_max_ >= 4) {
        const std::vector<std::size_t> low(dims.begin(), dims.begin() + 5);
        out.push_back(make_check("ext/segment-agreement", low == segment().ranks(),
                                 "P cohomology " + join(low) + ", segment ranks " + join(segment().ranks())));
      } else {
        out.push_back(skipped("ext/segment-agreement", "needs n_max >= 4"));
      }
    }
    return out;
  }

  std::vector<Check> dtilde_suite() {
    if (!full_odd()) return {skipped("dtilde", "needs N >= 3 in full mode")};
    std::vector<Check> out;
    bool expansions = true;
    for (const auto& c : verify_dtilde_cases(*alg_, n_max_)) {
      out.push_back(make_check("dtilde/" + generator_label(c.generator), c.matches,
                               "case " + std::to_string(c.parity_case) + (c.details.empty() ? "" : ": " + c.details)));
      if (c.parity_case == 4) expansions = expansions && c.expansions_ok;
    }
    out.push_back(make_check("dtilde/k-l-expansions", expansions, "K y = L y = [x1^(N-1), x2^(N-1)]_c"));
    return out;
  }

  std::vector<Check> appendix_suite() {
    if (!n2() && !full_odd()) return {skipped("appendix", "needs full mode")};
    return verify_appendix_maps(alg_);
  }

  std::vector<Check> relations_suite() {
    if (!n2() && !full_odd()) return {skipped("relations", "needs full mode")};
    const auto& e = n2() ? primary_engine() : segment_engine();
    return relation_checks(verify_relations(e, cfg_.convention), cfg_.convention);
  }

  std::vector<Check> e2_suite() {
    if (!full_odd()) return {skipped("e2", "needs N >= 3 in full mode")};
    std::vector<Check> out;
    std::vector<std::size_t> table;
    for (unsigned q = 0; q < 8; ++q) table.push_back(e2_dimension(0, q));
    out.push_back(make_check("e2/table", table == std::vector<std::size_t>{1, 1, 3, 2, 5, 3, 7, 4},
                             "q = 0..7: " + join(table)));
    append(out, e2_column_check(ext_dims()));
    return out;
  }

  std::vector<Check> k2_suite() { return k2_spanning_check(primary_engine(), n_max_); }

  std::vector<Check> properties_suite() {
    std::vector<Check> out;
    out.push_back(associativity_fuzz(primary_engine(), cfg_.fuzz_cases, 20240601, cfg_.convention));
    out.push_back(lift_independence(full_odd() ? segment_engine() : primary_engine()));
    if (full_odd() && alg_->N() > 3) append(out, nilpotency_checks(primary_engine(), segment_engine(), n_max_, cfg_.convention));
    if (ext_dims().size() >= 5) {
      const unsigned cx = complexity_estimate(ext_dims());
      const unsigned expected = n2() ? 2 : 3;
      out.push_back(make_check("complexity", cx == expected, "estimate " + std::to_string(cx)));
    } else {
      out.push_back(skipped("complexity", "needs n_max >= 4"));
    }
    return out;
  }

  unsigned n_max() const { return n_max_; }

 private:
  RunConfig cfg_;
  unsigned n_max_;
  std::shared_ptr<const F> field_;
  std::shared_ptr<const Algebra<F>> alg_;
  std::shared_ptr<const FreeComplex<F>> primary_, segment_;
  std::unique_ptr<ExtEngine<F>> primary_engine_, segment_engine_;
  std::vector<std::size_t> ext_dims_;
};

template <class Body>
Report timed(const std::string& command, const RunConfig& cfg, Body body) {
  validate_config(cfg);
  Report r;
  r.command = command;
  r.config = config_json(cfg);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (effective_field(cfg).mode == FieldMode::Cyclotomic) {
      Runner<CyclotomicField> run(cfg);
      body(run, r);
    } else {
      Runner<PrimeField> run(cfg);
      body(run, r);
    }
  } catch (const FieldError& e) {
    throw ConfigError(e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  r.timing_ms = cfg.deterministic ? 0 : ms.count();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

unsigned effective_n_max(const RunConfig& c) {
  if (c.n_max) return *c.n_max;
  if (c.N == 2) return 10;
  return c.N == 3 ? 8 : 6;
}

FieldSpec effective_field(const RunConfig& c) {
  if (!c.field.empty()) {
    try {
      return parse_field_spec(c.field);
    } catch (const FieldError& e) {
      throw ConfigError(e.what());
    }
  }
  const unsigned L = c.N == 2 ? 4 : 2 * c.N * c.N;
  return {FieldMode::PrimeField, L, smallest_prime_1_mod(L, 1000000)};
}

void validate_config(const RunConfig& c) {
  if (c.N != 2 && (c.N < 3 || c.N % 2 == 0)) throw ConfigError("N must be 2 or an odd number >= 3");
  if (c.N > 15) throw ConfigError("N above 15 is outside the supported range");
  if (c.N == 2 && c.mode == AlgebraMode::Graded) throw ConfigError("graded mode needs N >= 3");
  const auto spec = effective_field(c);
  try {
    validate_field_spec(spec);
  } catch (const FieldError& e) {
    throw ConfigError(e.what());
  }
  if (spec.root_order % c.N != 0) {
    const unsigned L = c.N == 2 ? 4 : 2 * c.N * c.N;
    throw ConfigError("the field's root order " + std::to_string(spec.root_order) + " is not divisible by N = " +
                      std::to_string(c.N) + "; try L = " + std::to_string(L));
  }
  const unsigned n = effective_n_max(c);
  if (n < 1) throw ConfigError("n_max must be at least 1");
  if (n > 40) throw ConfigError("n_max above 40 is outside the supported range");
  for (const auto& s : c.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ConfigError("unknown suite '" + s + "'");
}

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j;
  j["N"] = c.N;
  j["field"] = format_field_spec(effective_field(c));
  j["q12_exp"] = c.q12_exp;
  j["mode"] = c.mode == AlgebraMode::Full ? "full" : "graded";
  j["n_max"] = effective_n_max(c);
  j["convention"] = convention_name(c.convention);
  j["suites"] = c.suites;
  if (c.mutation)
    j["mutation"] = {{"degree", c.mutation->degree}, {"row", c.mutation->row}, {"col", c.mutation->col}};
  return j;
}

nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["command"] = r.command;
  j["config"] = r.config;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}});
  j["ext_dims"] = r.ext_dims;
  j["timing_ms"] = r.timing_ms;
  return j;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << "a2ext " << r.command << ": N=" << r.config.value("N", 0) << " field=" << r.config.value("field", "")
      << " q12=z^" << r.config.value("q12_exp", 0LL) << " mode=" << r.config.value("mode", "")
      << " n_max=" << r.config.value("n_max", 0) << " convention=" << r.config.value("convention", "") << "\n";
  for (const auto& l : r.lines) out << "  " << l << "\n";
  if (!r.ext_dims.empty()) {
    out << "  ext_dims:";
    for (auto d : r.ext_dims) out << " " << d;
    out << "\n";
  }
  std::size_t failed = 0, skipped_count = 0;
  for (const auto& c : r.checks) {
    out << "[" << status_name(c.status) << "] " << c.name;
    if (!c.details.empty()) out << "  (" << c.details << ")";
    out << "\n";
    failed += c.status == Status::Fail;
    skipped_count += c.status == Status::Skipped;
  }
  out << "summary: " << r.checks.size() << " checks, " << failed << " failed, " << skipped_count << " skipped";
  if (r.timing_ms) out << ", " << r.timing_ms << " ms";
  out << "\n";
  return out.str();
}

std::size_t closed_form_ext_dim(unsigned N, AlgebraMode mode, unsigned n) {
  if (N == 2) return n + 1;
  if (mode == AlgebraMode::Graded) return static_cast<std::size_t>(n + 1) * (n + 2) / 2;
  const std::size_t m = n;
  return n % 2 ? (3 * m * m + 8 * m + 5) / 8 : (3 * m * m + 10 * m + 8) / 8;
}

Report cmd_info(const RunConfig& c) {
  return timed("info", c, [](auto& run, Report& r) {
    r.lines = run.info_lines();
    r.checks = run.basis_checks();
  });
}

Report cmd_verify(const RunConfig& c) {
  return timed("verify", c, [&c](auto& run, Report& r) {
    r.lines = run.info_lines();
    const auto suite = [&](const char* name, auto body) {
      if (!wants(c, name)) return;
      try {
        append(r.checks, body());
      } catch (const ExtError& e) {
        r.checks.push_back(make_check(std::string(name) + "/error", false, e.what()));
      }
    };
    suite("complex", [&] { return run.complex_suite(); });
    suite("exact", [&] { return run.exact_suite(); });
    suite("dtilde", [&] { return run.dtilde_suite(); });
    suite("appendix", [&] { return run.appendix_suite(); });
    suite("relations", [&] { return run.relations_suite(); });
    suite("e2", [&] { return run.e2_suite(); });
    suite("k2", [&] { return run.k2_suite(); });
    suite("properties", [&] { return run.properties_suite(); });
    r.ext_dims = run.ext_dims();
  });
}

Report cmd_ext_dims(const RunConfig& c) {
  return timed("ext-dims", c, [](auto& run, Report& r) {
    const auto& A = run.algebra();
    r.ext_dims = run.ext_dims();
    r.lines.push_back("n  dim Ext^n  closed form");
    std::vector<std::size_t> expected;
    for (unsigned n = 0; n <= run.n_max(); ++n) {
      expected.push_back(closed_form_ext_dim(A.N(), A.mode(), n));
      r.lines.push_back(std::to_string(n) + "  " + std::to_string(r.ext_dims[n]) + "  " + std::to_string(expected.back()));
    }
    r.checks.push_back(make_check("ext/dimensions", r.ext_dims == expected));
    if (r.ext_dims.size() >= 5) {
      const unsigned cx = complexity_estimate(r.ext_dims);
      r.lines.push_back("complexity estimate " + std::to_string(cx));
      r.checks.push_back(make_check("complexity", cx == (A.is_n2() ? 2u : 3u), "estimate " + std::to_string(cx)));
    } else {
      r.checks.push_back(skipped("complexity", "needs n_max >= 4"));
    }
  });
}

}  // namespace a2ext

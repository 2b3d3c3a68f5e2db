#include "a2ext/ext_checks.hpp"

#include <map>
#include <random>
#include <sstream>

namespace a2ext {

namespace {

// qbar^a q12^b q21^c
struct Coef {
  int qbar = 0;
  long long q12 = 0;
  long long q21 = 0;
};

std::string power_text(const char* name, long long e) {
  if (e == 0) return {};
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

std::string coef_text(const Coef& c) {
  std::string out;
  for (const auto& part : {power_text("qbar", c.qbar), power_text("q12", c.q12), power_text("q21", c.q21)}) {
    if (part.empty()) continue;
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

template <ExactField F>
typename F::Elem coef_value(const Algebra<F>& A, const Coef& c) {
  const F& f = A.field();
  return f.mul(f.pow(A.qbar(), c.qbar), f.mul(f.pow(A.q12(), c.q12), f.pow(A.q21(), c.q21)));
}

struct RelSpec {
  Coef lc;
  const char* l1;
  const char* l2;
  Coef rc;
  const char* r1;  // nullptr for "= 0"
  const char* r2;
};

std::vector<RelSpec> relation_specs(unsigned N) {
  const RelSpec zero_a[] = {{{}, "a1", "a1", {}, nullptr, nullptr},
                            {{}, "a2", "a2", {}, nullptr, nullptr},
                            {{}, "a1", "a2", {}, nullptr, nullptr},
                            {{}, "a2", "a1", {}, nullptr, nullptr}};
  if (N == 2)
    return {{{}, "a2", "a1", {}, nullptr, nullptr},
            {{}, "a1", "a2", {}, nullptr, nullptr},
            {{}, "a1", "b", {}, "b", "a1"},
            {{}, "a2", "b", {}, "b", "a2"}};
  const long long n = N, n2 = static_cast<long long>(N) * N;
  std::vector<RelSpec> r(std::begin(zero_a), std::end(zero_a));
  const std::vector<RelSpec> common_b = {
      {{}, "a1", "b1", {}, "b1", "a1"},
      {{}, "a1", "by", {0, n, 0}, "by", "a1"},
      {{}, "a1", "b2", {0, n, 0}, "b2", "a1"},
      {{0, n, 0}, "a2", "b1", {}, "b1", "a2"},
      {{0, n, 0}, "a2", "by", {}, "by", "a2"},
      {{}, "a2", "b2", {}, "b2", "a2"},
      {{}, "a1", "c2", {1, 2, 0}, "c2", "a1"},
      {{}, "a2", "c1", {1, 0, 2}, "c1", "a2"},
      {{}, "c1", "a2", {}, "c2", "a1"},
      {{}, "b1", "by", {0, n2, 0}, "by", "b1"},
      {{}, "b1", "b2", {0, n2, 0}, "b2", "b1"},
      {{}, "by", "b2", {0, n2, 0}, "b2", "by"},
      {{0, n, 0}, "c1", "b1", {}, "b1", "c1"},
      {{}, "c1", "by", {0, n, 0}, "by", "c1"},
      {{}, "c1", "b2", {0, 2 * n, 0}, "b2", "c1"},
      {{0, 2 * n, 0}, "c2", "b1", {}, "b1", "c2"},
      {{0, n, 0}, "c2", "by", {}, "by", "c2"},
      {{}, "c2", "b2", {0, n, 0}, "b2", "c2"}};
  r.insert(r.end(), common_b.begin(), common_b.end());
  if (N == 3) {
    const std::vector<RelSpec> extra = {{{}, "a1", "c1", {2, 1, 0}, "c1", "a1"},
                                        {{2, 1, 0}, "a2", "c2", {}, "c2", "a2"},
                                        {{2, 1, 0}, "a2", "b1", {}, "a1", "c1"},
                                        {{}, "a1", "b2", {2, 1, 0}, "a2", "c2"},
                                        {{}, "b1", "c2", {0, 6, 0}, "c1", "c1"},
                                        {{0, 6, 0}, "b2", "c1", {}, "c2", "c2"},
                                        {{}, "b1", "b2", {0, 3, 0}, "c1", "c2"},
                                        {{}, "c1", "c2", {0, 3, 0}, "c2", "c1"}};
    r.insert(r.end(), extra.begin(), extra.end());
  } else {
    const std::vector<RelSpec> extra = {{{}, "a1", "c1", {}, nullptr, nullptr}, {{}, "c1", "a1", {}, nullptr, nullptr},
                                        {{}, "c2", "a2", {}, nullptr, nullptr}, {{}, "a2", "c2", {}, nullptr, nullptr},
                                        {{}, "c1", "c1", {}, nullptr, nullptr}, {{}, "c2", "c2", {}, nullptr, nullptr},
                                        {{}, "c1", "c2", {}, nullptr, nullptr}, {{}, "c2", "c1", {}, nullptr, nullptr}};
    r.insert(r.end(), extra.begin(), extra.end());
  }
  return r;
}

std::string side_text(const Coef& c, const char* x, const char* y) {
  if (!x) return "0";
  const auto ct = coef_text(c);
  return (ct.empty() ? "" : ct + " ") + x + " " + y;
}

template <ExactField F>
std::map<std::string, ExtClass<F>> by_name(const std::vector<NamedClass<F>>& gens) {
  std::map<std::string, ExtClass<F>> out;
  for (const auto& g : gens) out.emplace(g.name, g.cls);
  return out;
}

template <ExactField F>
bool matrices_equal(const RMatrix<F>& a, const RMatrix<F>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).is_zero();
}

// Sets 1-based entries of a fresh matrix.
template <ExactField F>
RMatrix<F> sparse_rmatrix(const Algebra<F>& A, std::size_t rows, std::size_t cols,
                          const std::vector<std::tuple<std::size_t, std::size_t, Element<F>>>& entries) {
  RMatrix<F> m(A, rows, cols);
  for (const auto& [i, j, e] : entries) m.at(i - 1, j - 1) = e;
  return m;
}

template <ExactField F>
std::vector<Check> appendix_n2(const std::shared_ptr<const Algebra<F>>& alg) {
  const auto& A = *alg;
  auto c = build_resolution_N2(alg, 3);
  const auto one = A.one();
  const auto x2x1 = A.basis(A.word_index("21"));
  const auto x1x2 = A.basis(A.word_index("12"));
  auto f1 = sparse_rmatrix(A, 2, 1, {{1, 1, one}});
  auto f2 = sparse_rmatrix(A, 3, 2, {{1, 1, one}, {2, 2, x2x1}});
  auto f3 = sparse_rmatrix(A, 4, 3, {{1, 1, one}, {2, 2, one}});
  auto g1 = sparse_rmatrix(A, 2, 1, {{2, 1, one}});
  auto g2 = sparse_rmatrix(A, 3, 2, {{2, 1, x1x2}, {3, 2, one}});
  auto g3 = sparse_rmatrix(A, 4, 3, {{3, 2, one}, {4, 3, one}});
  auto h2 = sparse_rmatrix(A, 3, 1, {{2, 1, one}});
  auto h3 = sparse_rmatrix(A, 4, 2, {{2, 1, one}, {3, 2, one}});
  const auto &d1 = c.d(1), &d2 = c.d(2), &d3 = c.d(3);
  return {make_check("appendix/f/square1", matrices_equal(d2 * f1, f2 * d1)),
          make_check("appendix/f/square2", matrices_equal(d3 * f2, f3 * d2)),
          make_check("appendix/g/square1", matrices_equal(d2 * g1, g2 * d1)),
          make_check("appendix/g/square2", matrices_equal(d3 * g2, g3 * d2)),
          make_check("appendix/h/square", matrices_equal(d3 * h2, h3 * d1))};
}

template <ExactField F>
std::vector<Check> appendix_segment(const std::shared_ptr<const Algebra<F>>& alg) {
  const auto& A = *alg;
  const F& f = A.field();
  const long long N = A.N();
  const auto s = segment_elements(A);
  const auto c = build_minimal_segment(alg);
  const auto& qb = A.qbar();
  const auto& q12 = A.q12();
  const auto& q21 = A.q21();
  auto p12 = [&](long long e) { return f.pow(q12, e); };
  auto p21 = [&](long long e) { return f.pow(q21, e); };
  auto sc = [&](const typename F::Elem& v) { return A.scalar(v); };
  const auto x1 = A.x1(), x2 = A.x2(), y = A.y(), one = A.one();
  auto X = [&](long long e) { return A.power(x1, static_cast<unsigned>(e)); };
  auto Z = [&](long long e) { return A.power(x2, static_cast<unsigned>(e)); };
  const auto yx1 = A.power(y, N - 2) * x1;  // y^(N-2) x1
  const auto yx2 = A.power(y, N - 2) * x2;

  std::vector<RMatrix<F>> f1, f2, f3, g1, g2, g3;
  for (std::size_t i = 1; i <= 5; ++i) f1.push_back(sparse_rmatrix(A, 5, 1, {{i, 1, one}}));

  f2.push_back(sparse_rmatrix(A, 7, 2, {{1, 1, one}, {2, 2, sc(p12(N))}}));
  f2.push_back(sparse_rmatrix(A, 7, 2,
                              {{2, 1, X(N - 3)},
                               {4, 2, one},
                               {5, 1, yx2.scaled(f.mul(q12, p21(1 - N)))},
                               {5, 2, yx1.scaled(f.neg(p21(1 - N)))}}));
  f2.push_back(sparse_rmatrix(A, 7, 2, {{3, 2, one}, {5, 1, one}}));
  f2.push_back(sparse_rmatrix(A, 7, 2,
                              {{3, 1, yx2.scaled(f.neg(f.mul(f.mul(q12, q12), p21(N - 1))))},
                               {3, 2, yx1.scaled(f.mul(q12, p21(N - 1)))},
                               {4, 1, one},
                               {6, 2, Z(N - 3).scaled(p12(N))}}));
  f2.push_back(sparse_rmatrix(A, 7, 2, {{6, 1, one}, {7, 2, one}}));

  f3.push_back(sparse_rmatrix(
      A, 12, 5, {{1, 1, one}, {2, 2, sc(p12(N))}, {3, 3, sc(p12(N))}, {4, 4, sc(p12(N))}, {5, 5, sc(p12(N))}}));
  f3.push_back(sparse_rmatrix(A, 12, 5,
                              {{2, 1, one},
                               {3, 1, yx2.scaled(p21(-1))},
                               {4, 2, X(N - 3).scaled(p12(-N))},
                               {5, 4, s.X1},
                               {6, 2, yx2.scaled(f.mul(p21(1 - N), f.mul(q12, q12)))},
                               {6, 3, sc(p12(N))},
                               {8, 4, yx2.scaled(f.mul(q12, p21(N - 3)))},
                               {9, 5, sc(p12(2 * N))}}));
  f3.push_back(sparse_rmatrix(
      A, 12, 5,
      {{3, 1, sc(p12(-N * N + N))}, {6, 2, one}, {7, 3, one}, {8, 4, one}, {10, 5, sc(p12(N * N))}}));
  f3.push_back(sparse_rmatrix(A, 12, 5,
                              {{4, 1, sc(p12(-N))},
                               {5, 2, s.X2.scaled(p12(-N * N + 2 * N))},
                               {6, 2, yx1.scaled(f.mul(q12, p21(3 - N)))},
                               {8, 3, sc(p21(N))},
                               {8, 4, yx1.scaled(p21(N - 1))},
                               {9, 4, Z(N - 3).scaled(p12(2 * N))},
                               {10, 5, yx1.scaled(f.mul(p21(1 - N), f.mul(q12, q12)))},
                               {11, 5, sc(p12(N))}}));
  f3.push_back(sparse_rmatrix(
      A, 12, 5, {{5, 1, sc(p12(-N * N + N))}, {9, 2, one}, {10, 3, one}, {11, 4, one}, {12, 5, one}}));

  g1.push_back(sparse_rmatrix(A, 2, 1, {{1, 1, one}}));
  g1.push_back(sparse_rmatrix(A, 2, 1, {{2, 1, one}}));
  const auto m_q12 = f.neg(f.add(q12, f.mul(qb, q12)));  // -q12 - qbar q12
  const auto m_q21 = f.neg(f.add(q21, f.mul(qb, q21)));
  g2.push_back(sparse_rmatrix(A, 5, 2,
                              {{1, 1, X(N - 2)},
                               {2, 1, x2.scaled(f.mul(qb, f.mul(q12, q12)))},
                               {2, 2, x1.scaled(m_q12)},
                               {3, 2, A.power(y, N - 1).scaled(f.neg(q12))},
                               {4, 2, x2}}));
  g2.push_back(sparse_rmatrix(A, 5, 2,
                              {{2, 1, x1},
                               {3, 1, A.power(y, N - 1)},
                               {4, 1, x2.scaled(m_q21)},
                               {4, 2, x1.scaled(f.mul(qb, f.mul(q21, q21)))},
                               {5, 2, Z(N - 2)}}));
  g3.push_back(sparse_rmatrix(A, 7, 5,
                              {{1, 1, one},
                               {2, 2, X(N - 3).scaled(m_q12)},
                               {4, 4, sc(f.mul(qb, f.mul(q12, q12)))},
                               {5, 3, sc(p12(N))},
                               {6, 5, sc(p12(N))}}));
  g3.push_back(sparse_rmatrix(A, 7, 5,
                              {{2, 1, one},
                               {3, 3, sc(p21(N))},
                               {4, 2, sc(f.mul(qb, f.mul(q21, q21)))},
                               {6, 4, Z(N - 3).scaled(f.mul(p12(N), m_q21))},
                               {7, 5, one}}));

  std::vector<Check> out;
  const auto &d1 = c.d(1), &d2 = c.d(2), &d3 = c.d(3), &d4 = c.d(4);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto tag = "appendix/f" + std::to_string(i + 1);
    out.push_back(make_check(tag + "/square1", matrices_equal(d3 * f1[i], f2[i] * d1)));
    out.push_back(make_check(tag + "/square2", matrices_equal(d4 * f2[i], f3[i] * d2)));
  }
  for (std::size_t j = 0; j < 2; ++j) {
    const auto tag = "appendix/g" + std::to_string(j + 1);
    out.push_back(make_check(tag + "/square1", matrices_equal(d2 * g1[j], g2[j] * d1)));
    out.push_back(make_check(tag + "/square2", matrices_equal(d3 * g2[j], g3[j] * d2)));
  }
  const auto x1x2 = x1 * x2, x2x1 = x2 * x1;
  const auto bar = p12(-N * N + 2 * N);
  const auto r2b = x2x1.scaled(f.mul(qb, f.mul(q12, q12))) + x1x2.scaled(m_q12);
  out.push_back(make_check("appendix/identity/X1", s.X1 * s.r4b == s.Dbar.scaled(f.neg(bar))));
  out.push_back(make_check("appendix/identity/X2", s.X2 * r2b == -s.Dbar));
  out.push_back(make_check("appendix/identity/Dbar-x1", s.Dbar * x1 == X(N - 1) * Z(N - 2)));
  out.push_back(make_check("appendix/identity/Dbar-x2", Z(N - 1) * X(N - 2) == (s.Dbar * x2).scaled(bar)));
  return out;
}

template <ExactField F>
typename F::Elem random_scalar(const F& f, std::mt19937_64& rng) {
  return f.from_int(static_cast<long long>(rng() % 997));
}

// Independent subset by coordinates; returns the classes kept.
template <ExactField F>
struct SpanTracker {
  const ExtEngine<F>* e;
  unsigned degree;
  Subspace<F> span;
  std::vector<ExtClass<F>> kept;

  SpanTracker(const ExtEngine<F>& engine, unsigned n)
      : e(&engine), degree(n), span(engine.field(), engine.dimension(n)) {}

  void offer(const ExtClass<F>& c) {
    if (kept.size() == span.ambient()) return;
    auto coords = e->coordinates(c);
    if (span.contains(coords)) return;
    KMatrix<F> rows(e->field(), span.dim() + 1, span.ambient());
    for (std::size_t i = 0; i < span.dim(); ++i)
      for (std::size_t j = 0; j < span.ambient(); ++j) rows.at(i, j) = span.basis().at(i, j);
    for (std::size_t j = 0; j < span.ambient(); ++j) rows.at(span.dim(), j) = coords[j];
    span = Subspace<F>::row_span(rows);
    kept.push_back(c);
  }
};

}  // namespace

// ---------------------------------------------------------------------------

template <ExactField F>
std::vector<NamedClass<F>> standard_generators(const ExtEngine<F>& e) {
  const auto& c = e.complex();
  std::vector<NamedClass<F>> out{{"a1", e.unit(1, 0)}, {"a2", e.unit(1, 1)}};
  if (c.kind() == ComplexKind::N2) {
    out.push_back({"b", e.unit(2, 1)});
  } else if (c.kind() == ComplexKind::MinimalSegment) {
    const char* names[] = {"b1", "c1", "by", "c2", "b2"};
    for (std::size_t i = 0; i < 5; ++i) out.push_back({names[i], e.unit(2, i)});
  } else {
    throw ExtError(ExtError::Kind::Mismatch, "standard generators live on the N = 2 resolution or the minimal segment");
  }
  return out;
}

template <ExactField F>
std::vector<Relation<F>> relation_table(const Algebra<F>& A) {
  std::vector<Relation<F>> out;
  for (const auto& r : relation_specs(A.N())) {
    Relation<F> rel;
    rel.text = side_text(r.lc, r.l1, r.l2) + " = " + side_text(r.rc, r.r1, r.r2);
    rel.lhs_coeff = coef_value(A, r.lc);
    rel.l1 = r.l1;
    rel.l2 = r.l2;
    rel.rhs_coeff = coef_value(A, r.rc);
    if (r.r1) {
      rel.r1 = r.r1;
      rel.r2 = r.r2;
    }
    out.push_back(std::move(rel));
  }
  return out;
}

template <ExactField F>
std::vector<RelationVerdict> verify_relations(const ExtEngine<F>& e, Convention conv) {
  const auto gens = by_name(standard_generators(e));
  const auto table = relation_table(e.algebra());
  std::map<std::tuple<int, std::string, std::string>, ExtClass<F>> cache;
  auto prod = [&](Convention c, const std::string& x, const std::string& y) -> const ExtClass<F>& {
    const auto key = std::make_tuple(static_cast<int>(c), x, y);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, e.product(gens.at(x), gens.at(y), c)).first->second;
  };
  auto holds = [&](const Relation<F>& r, Convention c) {
    const auto lhs = e.scaled(prod(c, r.l1, r.l2), r.lhs_coeff);
    if (r.r1.empty()) return e.is_zero(lhs);
    return e.equal(lhs, e.scaled(prod(c, r.r1, r.r2), r.rhs_coeff));
  };
  std::vector<RelationVerdict> out;
  for (const auto& r : table) {
    RelationVerdict v{r.text, holds(r, conv), false, false};
    if (!v.holds) {
      v.tried_opposite = true;
      v.holds_opposite = holds(r, opposite(conv));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Check> relation_checks(const std::vector<RelationVerdict>& verdicts, Convention conv) {
  std::vector<Check> out;
  for (const auto& v : verdicts) {
    std::string details = std::string("convention ") + convention_name(conv) + (v.holds ? ": holds" : ": fails");
    if (v.tried_opposite)
      details += std::string("; convention ") + convention_name(opposite(conv)) +
                 (v.holds_opposite ? ": holds" : ": fails");
    out.push_back(make_check("relation/" + v.text, v.holds, details));
  }
  return out;
}

template <ExactField F>
std::vector<Check> verify_appendix_maps(std::shared_ptr<const Algebra<F>> alg) {
  return alg->is_n2() ? appendix_n2(alg) : appendix_segment(alg);
}

unsigned e2_dimension(unsigned /*p*/, unsigned q) {
  unsigned count = 0;
  if (q % 2) {
    // u1^i uy^j w1 (p even) or u1^i uy^j wy (p odd), 2(i+j)+1 = q
    for (unsigned i = 0; 2 * i + 1 <= q; ++i)
      for (unsigned j = 0; 2 * (i + j) + 1 <= q; ++j)
        if (2 * (i + j) + 1 == q) ++count;
  } else {
    for (unsigned k = 0; k <= 1; ++k)
      for (unsigned i = 0; 2 * i + 2 * k <= q; ++i)
        for (unsigned j = 0; 2 * (i + j) + 2 * k <= q; ++j)
          if (2 * (i + j) + 2 * k == q) ++count;
  }
  return count;
}

std::vector<std::size_t> e2_column_sums(unsigned n_max) {
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    std::size_t s = 0;
    for (unsigned p = 0; p <= n; ++p) s += e2_dimension(p, n - p);
    out.push_back(s);
  }
  return out;
}

std::vector<Check> e2_column_check(const std::vector<std::size_t>& ext_dims) {
  std::vector<Check> out;
  if (ext_dims.empty()) return out;
  const auto sums = e2_column_sums(static_cast<unsigned>(ext_dims.size() - 1));
  for (std::size_t n = 0; n < ext_dims.size(); ++n)
    out.push_back(make_check("e2/column" + std::to_string(n), sums[n] == ext_dims[n],
                             "E2 column sum " + std::to_string(sums[n]) + ", dim Ext " + std::to_string(ext_dims[n])));
  return out;
}

template <ExactField F>
std::vector<Check> k2_spanning_check(const ExtEngine<F>& e, unsigned n_max) {
  struct Gen {
    ExtClass<F> cls;
    ChainMapLift<F> lift;
  };
  std::vector<Gen> gens;
  for (unsigned d = 1; d <= 2 && d <= n_max; ++d)
    for (auto& g : e.basis(d)) gens.push_back({g, e.lift(g, n_max - d)});

  std::vector<SpanTracker<F>> spans;
  std::vector<Check> out;
  spans.emplace_back(e, 0);  // unused slot for degree 0
  for (unsigned n = 1; n <= n_max; ++n) {
    SpanTracker<F> t(e, n);
    for (const auto& g : gens)
      if (g.cls.degree == n) t.offer(g.cls);
    for (const auto& g : gens) {
      if (g.cls.degree >= n) continue;
      for (const auto& v : spans[n - g.cls.degree].kept) t.offer(e.compose(v, g.lift));
    }
    out.push_back(make_check("k2/degree" + std::to_string(n), t.kept.size() == t.span.ambient(),
                             "span " + std::to_string(t.kept.size()) + " of " + std::to_string(t.span.ambient())));
    spans.push_back(std::move(t));
  }
  return out;
}

unsigned complexity_estimate(const std::vector<std::size_t>& dims) {
  if (dims.size() < 5)
    throw ExtError(ExtError::Kind::InsufficientData, "complexity needs at least five dimensions (n_max >= 4)");
  unsigned growth = 0;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    std::vector<long long> s;
    for (std::size_t n = parity; n < dims.size(); n += 2) s.push_back(static_cast<long long>(dims[n]));
    unsigned degree = static_cast<unsigned>(s.size() - 1);
    for (unsigned d = 0; s.size() >= 2; ++d) {
      if (std::all_of(s.begin(), s.end(), [&](long long v) { return v == s.front(); })) {
        degree = d;
        break;
      }
      std::vector<long long> next;
      for (std::size_t i = 1; i < s.size(); ++i) next.push_back(s[i] - s[i - 1]);
      s = std::move(next);
    }
    growth = std::max(growth, degree);
  }
  return growth + 1;
}

template <ExactField F>
std::vector<NamedClass<F>> transported_generators(const ExtEngine<F>& p, const ExtEngine<F>& segment) {
  const auto comparison = segment.lift_from(p.complex(), p.unit(0, 0), 2);
  std::vector<NamedClass<F>> out;
  for (const auto& g : standard_generators(segment)) out.push_back({g.name, segment.compose(g.cls, comparison)});
  return out;
}

template <ExactField F>
std::vector<Check> nilpotency_checks(const ExtEngine<F>& p, const ExtEngine<F>& segment, unsigned n_max,
                                     Convention conv) {
  const auto gens = by_name(transported_generators(p, segment));
  std::vector<Check> out;
  for (const char* name : {"a1", "a2", "c1", "c2"}) {
    const auto& g = gens.at(name);
    out.push_back(make_check(std::string("nilpotency/") + name + "^2", p.is_zero(p.product(g, g, conv))));
  }
  if (n_max >= 6) {
    const auto ca = p.product(gens.at("c1"), gens.at("a2"), conv);
    out.push_back(make_check("nilpotency/(c1 a2)^2", p.is_zero(p.product(ca, ca, conv))));
  }
  for (const char* name : {"b1", "by", "b2"}) {
    const auto& g = gens.at(name);
    const auto l = p.lift(g, n_max - 2);
    auto power = g;
    bool ok = !p.is_zero(power);
    unsigned m = 1;
    while (ok && 2 * (m + 1) <= n_max) {
      power = p.compose(power, l);
      ++m;
      ok = !p.is_zero(power);
    }
    out.push_back(make_check(std::string("nilpotency/") + name + "^m nonzero", ok,
                             "checked m <= " + std::to_string(m)));
  }
  return out;
}

template <ExactField F>
Check associativity_fuzz(const ExtEngine<F>& e, unsigned cases, std::uint64_t seed, Convention conv) {
  const F& f = e.field();
  std::mt19937_64 rng(seed);
  const std::vector<ExtClass<F>> basis1 = e.basis(1), basis2 = e.basis(2);
  auto random_class = [&](unsigned d) {
    const auto& b = d == 1 ? basis1 : basis2;
    auto c = e.zero(d);
    for (const auto& v : b) c = e.add(c, e.scaled(v, random_scalar(f, rng)));
    const auto& cob = e.coboundaries(d).basis();
    for (std::size_t i = 0; i < cob.rows(); ++i) c = e.add(c, e.scaled({d, cob.row_vector(i)}, random_scalar(f, rng)));
    return c;
  };
  unsigned failures = 0, nonzero = 0;
  std::string first;
  for (unsigned k = 0; k < cases; ++k) {
    const unsigned dx = 1 + rng() % 2, dy = 1 + rng() % 2, dz = 1 + rng() % 2;
    const auto x = random_class(dx), y = random_class(dy), z = random_class(dz);
    const auto left = e.product(e.product(x, y, conv), z, conv);
    const auto right = e.product(x, e.product(y, z, conv), conv);
    if (!e.is_zero(left)) ++nonzero;
    if (!e.equal(left, right)) {
      if (!failures) first = "case " + std::to_string(k) + " degrees " + std::to_string(dx) + std::to_string(dy) + std::to_string(dz);
      ++failures;
    }
  }
  std::ostringstream details;
  details << cases << " cases, " << nonzero << " with nonzero product, " << failures << " failures";
  if (failures) details << " (first: " << first << ")";
  return make_check("associativity/fuzz", failures == 0, details.str());
}

template <ExactField F>
Check lift_independence(const ExtEngine<F>& e) {
  std::vector<ExtClass<F>> gens = e.basis(1);
  for (auto& g : e.basis(2)) gens.push_back(g);
  unsigned pairs = 0, failures = 0, differing_lifts = 0;
  for (const auto& x : gens) {
    const unsigned depth = std::min(2u, e.complex().top_degree() - x.degree);
    const auto canonical = e.lift(x, depth, PivotOrder::Natural);
    const auto perturbed = e.lift(x, depth, PivotOrder::Reverse);
    for (unsigned i = 1; i <= depth; ++i)
      if (!(canonical.steps[i] == perturbed.steps[i])) {
        ++differing_lifts;
        break;
      }
    for (const auto& y : gens) {
      if (y.degree > depth) continue;
      ++pairs;
      if (!e.equal(e.compose(y, canonical), e.compose(y, perturbed))) ++failures;
    }
  }
  return make_check("lift-independence", failures == 0,
                    std::to_string(pairs) + " products, " + std::to_string(differing_lifts) + " of " +
                        std::to_string(gens.size()) + " lifts differ, " + std::to_string(failures) + " failures");
}

#define A2EXT_INSTANTIATE_EXT_CHECKS(F)                                                                        \
  template std::vector<NamedClass<F>> standard_generators<F>(const ExtEngine<F>&);                             \
  template std::vector<Relation<F>> relation_table<F>(const Algebra<F>&);                                      \
  template std::vector<RelationVerdict> verify_relations<F>(const ExtEngine<F>&, Convention);                  \
  template std::vector<Check> verify_appendix_maps<F>(std::shared_ptr<const Algebra<F>>);                      \
  template std::vector<Check> k2_spanning_check<F>(const ExtEngine<F>&, unsigned);                             \
  template std::vector<NamedClass<F>> transported_generators<F>(const ExtEngine<F>&, const ExtEngine<F>&);     \
  template std::vector<Check> nilpotency_checks<F>(const ExtEngine<F>&, const ExtEngine<F>&, unsigned,         \
                                                   Convention);                                                \
  template Check associativity_fuzz<F>(const ExtEngine<F>&, unsigned, std::uint64_t, Convention);              \
  template Check lift_independence<F>(const ExtEngine<F>&);

A2EXT_INSTANTIATE_EXT_CHECKS(PrimeField)
A2EXT_INSTANTIATE_EXT_CHECKS(CyclotomicField)

}  // namespace a2ext

#include "ncalg/report.hpp"

#include "ncalg/error.hpp"

namespace ncalg {

Json word_json(const Word& w) {
  Json out = Json::array();
  for (const auto& g : w) out.push_back(g.token());
  return out;
}

Word word_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) throw ParseError("word must be an array of tokens", 0);
  Word w;
  for (const auto& tok : j) {
    const Word g = parse_word(tok.get<std::string>(), field);
    if (g.size() != 1) throw ParseError("expected a single generator token", 0);
    w.push_back(g[0]);
  }
  return w;
}

Json degree_json(const Degree& d) { return Json::array({d.alpha, d.beta}); }

Json scalar_json(const Scalar& x, const Field& field) {
  if (field.is_prime_field()) return std::stoll(field.to_string(x));
  return field.to_string(x);
}

Json rules_json(const RewriteSystem& sys) {
  Json out = Json::array();
  for (const auto& r : sys.sorted_rules()) {
    out.push_back({{"lhs", word_json(r.lhs)}, {"rhs", format_poly(r.rhs, sys.order())}});
  }
  return out;
}

RewriteSystem system_from_json(const Json& rules, const Field& field, const MonomialOrder& order,
                               const std::vector<Generator>& alphabet) {
  RewriteSystem sys(field, order, alphabet);
  for (const auto& r : rules) {
    sys.add_rule({word_from_json(r.at("lhs"), field),
                  parse_poly(r.at("rhs").get<std::string>(), field)});
  }
  return sys;
}

Json certificate_json(const CompletenessCertificate& cert, const RewriteSystem& sys) {
  Json failures = Json::array();
  for (const auto& f : cert.failures) {
    failures.push_back(
        {{"tip", word_json(f.tip)}, {"residual", format_poly(f.residual, sys.order())}});
  }
  return {{"complete", cert.complete},
          {"pair_count", cert.pairs_checked},
          {"failures", std::move(failures)}};
}

Json matrix_json(const GradedMatrix& g) {
  Json rows = Json::array();
  Json cols = Json::array();
  for (const auto& b : g.rows) rows.push_back(b.to_string());
  for (const auto& b : g.cols) cols.push_back(b.to_string());
  Json entries = Json::array();
  const Field& f = g.matrix.field();
  for (std::size_t i = 0; i < g.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < g.matrix.cols(); ++j) {
      const Scalar& x = g.matrix.at(i, j);
      if (!f.is_zero(x)) entries.push_back(Json::array({i, j, scalar_json(x, f)}));
    }
  }
  return {{"degree", degree_json(g.degree)},
          {"rows", std::move(rows)},
          {"cols", std::move(cols)},
          {"rank", g.rank()},
          {"entries", std::move(entries)}};
}

Json relation_suite_json(const std::vector<RelationCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json item = {{"relation", c.relation}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) item["residual"] = c.residual.to_string();
    out.push_back(std::move(item));
  }
  return out;
}

Json dimension_json(const DimensionReport& d) {
  return {{"expected", d.expected},
          {"basis_count", d.basis_count},
          {"irreducible_count", d.irreducible_count},
          {"pass", d.pass()}};
}

Json coefficient_checks_json(const std::vector<CoefficientCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"check", c.name},
                   {"k", c.k},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"status", c.pass ? "pass" : "fail"}});
  }
  return out;
}

Json complex_json(const ComplexReport& r) {
  return {{"eps_d0", r.eps_d0},
          {"d0_d1", r.d0_d1},
          {"d1_d2", r.d1_d2},
          {"chains_checked", r.chains_checked},
          {"failures", r.failures},
          {"pass", r.pass()}};
}

Json exactness_json(const ExactnessReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"degree", degree_json(d.degree)},
                       {"dims", {d.dim_pm1, d.dim_p0, d.dim_p1, d.dim_p2}},
                       {"ranks", {d.rank_eps, d.rank_d0, d.rank_d1, d.rank_d2}},
                       {"exact_p0", d.exact_p0()},
                       {"exact_p1", d.exact_p1()},
                       {"pass", d.pass()}});
  }
  return {{"pass", r.pass()}, {"degrees", std::move(degrees)}};
}

Json minimality_json(const MinimalityReport& r) {
  Json ext = Json::object();
  for (const auto& [i, dims] : r.ext_dims) {
    Json list = Json::array();
    for (const auto& [d, n] : dims) list.push_back({{"degree", degree_json(d)}, {"count", n}});
    ext[std::to_string(i)] = std::move(list);
  }
  return {{"smallness", {{"d0", r.small_d0}, {"d1", r.small_d1}, {"d2", r.small_d2}}},
          {"complex_d1_d2", r.complex_d1_d2},
          {"exactness_at_P1_prime", r.exact_p1_prime},
          {"degrees_checked", r.degrees_checked},
          {"ext_dims", std::move(ext)},
          {"failures", r.failures},
          {"pass", r.pass()}};
}

}  // namespace ncalg

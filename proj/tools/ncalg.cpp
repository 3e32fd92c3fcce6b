#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "ncalg/anick.hpp"
#include "ncalg/error.hpp"
#include "ncalg/kostant.hpp"
#include "ncalg/minimal.hpp"
#include "ncalg/report.hpp"

using namespace ncalg;

namespace {

constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::uint32_t p = 2;
  unsigned m = 1;
  unsigned j = 0;
  std::uint64_t max_deg = 0;
  std::string json_path;
  bool big = false;
  bool char0 = false;
  std::uint64_t bound = 0;
  std::string expr;
  std::string rules_path;

  Window window() const {
    Window w{p, j, m};
    w.validate();
    return w;
  }
  std::uint64_t deg_bound() const { return max_deg != 0 ? max_deg : 3ULL * p * p; }
  std::uint64_t divided_bound() const { return ipow(p, m) - 1; }
};

void emit(const Config& cfg, const Json& j) {
  if (cfg.json_path.empty()) return;
  if (cfg.json_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(cfg.json_path);
  if (!out) throw DomainError("cannot write " + cfg.json_path);
  out << j.dump(2) << "\n";
}

std::ostream& text(const Config& cfg) {
  static std::ofstream null;
  return cfg.json_path == "-" ? null : std::cout;
}

Json word_list(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(word_json(w));
  return out;
}

Json degree_table_json(const std::vector<Word>& chains) {
  Json out = Json::array();
  for (const auto& [w, d] : degree_table(chains)) {
    out.push_back({{"chain", word_json(w)}, {"degree", degree_json(d)}});
  }
  return out;
}

int cmd_nf(const Config& cfg) {
  const Field field = cfg.char0 ? Field::rationals() : Field::prime(cfg.p);
  const Polynomial f = parse_poly(cfg.expr, field);
  bool small = false;
  bool divided = false;
  std::uint64_t top = 0;
  for (const auto& [w, c] : f.terms()) {
    for (const auto& g : w) {
      (g.is_divided() ? divided : small) = true;
      top = std::max<std::uint64_t>(top, g.index());
    }
  }
  if (small && divided) {
    std::cerr << "error: expression mixes a/b letters with divided letters\n";
    return kUsage;
  }
  std::optional<RewriteSystem> sys;
  std::string name;
  if (divided) {
    const std::uint64_t bound = cfg.char0 ? std::max<std::uint64_t>(top, 1) : cfg.divided_bound();
    if (top > bound) {
      std::cerr << "error: divided power " << top << " exceeds the window bound " << bound << "\n";
      return kUsage;
    }
    sys.emplace(big_rewrite_system(field, bound));
    name = "big";
  } else {
    if (cfg.char0) {
      std::cerr << "error: a/b letters need a prime field\n";
      return kUsage;
    }
    const Window win = cfg.window();
    for (const auto& [w, c] : f.terms()) {
      for (const auto& g : w) {
        if (g.index() < win.j || g.index() >= win.m) {
          std::cerr << "error: " << g.token() << " is outside the window [" << win.j << ", "
                    << win.m << ")\n";
          return kUsage;
        }
      }
    }
    sys.emplace(small_groebner_basis(win));
    name = "G";
  }
  const Polynomial nf = normal_form(f, *sys);
  text(cfg) << format_poly(nf, sys->order()) << "\n";
  emit(cfg, {{"input", cfg.expr},
             {"system", name},
             {"normal_form", format_poly(nf, sys->order())}});
  return 0;
}

int cmd_gb(const Config& cfg) {
  const Field field = cfg.char0 ? Field::rationals() : Field::prime(cfg.p);
  std::optional<RewriteSystem> sys;
  if (cfg.big) {
    sys.emplace(big_rewrite_system(field, cfg.divided_bound()));
  } else {
    if (cfg.char0) {
      std::cerr << "error: --char0 applies to the divided-power system only\n";
      return kUsage;
    }
    sys.emplace(small_groebner_basis(cfg.window()));
  }
  if (!cfg.rules_path.empty()) {
    std::ifstream in(cfg.rules_path);
    if (!in) throw DomainError("cannot read " + cfg.rules_path);
    Json doc = Json::parse(in);
    sys.emplace(system_from_json(doc.at("rules"), field, sys->order(), sys->alphabet()));
  }
  const std::uint64_t tip_bound =
      cfg.bound != 0 ? cfg.bound : std::numeric_limits<std::uint64_t>::max();
  const CompletenessCertificate cert = is_complete(*sys, tip_bound);
  const bool reduced = is_reduced(*sys);

  auto& out = text(cfg);
  for (const auto& r : sys->sorted_rules()) out << "  " << format_rule(r, sys->order()) << "\n";
  out << sys->size() << " rules, " << cert.pairs_checked << " critical pairs, complete: "
      << (cert.complete ? "true" : "false") << ", reduced: " << (reduced ? "true" : "false")
      << "\n";
  for (const auto& f : cert.failures) {
    out << "  failure at " << f.tip.to_string() << ": " << format_poly(f.residual, sys->order())
        << "\n";
  }
  Json doc = {{"p", cfg.char0 ? 0 : cfg.p},
              {"system", cfg.big ? "big" : "G"},
              {"rule_count", sys->size()},
              {"rules", rules_json(*sys)},
              {"reduced", reduced}};
  doc["certificate"] = certificate_json(cert, *sys);
  emit(cfg, doc);
  return cert.complete && reduced ? 0 : kFailed;
}

int cmd_verify(const Config& cfg) {
  const Window win = cfg.window();
  const auto suite = relation_suite(win);
  const DimensionReport dim = dimension_check(win);
  const auto lemmas = coefficient_lemma_checks(win);
  bool ok = dim.pass();
  auto& out = text(cfg);
  for (const auto& c : suite) {
    ok = ok && c.pass;
    out << (c.pass ? "pass  " : "FAIL  ") << c.relation;
    if (!c.pass) out << "  residual " << c.residual.to_string();
    out << "\n";
  }
  out << (dim.pass() ? "pass  " : "FAIL  ") << "dimension expected " << dim.expected
      << ", oracle rank " << dim.basis_count << ", irreducible words " << dim.irreducible_count
      << "\n";
  for (const auto& c : lemmas) {
    ok = ok && c.pass;
    out << (c.pass ? "pass  " : "FAIL  ") << c.name << " k=" << c.k << ": " << c.actual
        << " (expected " << c.expected << ")\n";
  }
  emit(cfg, {{"p", cfg.p},
             {"window", {win.j, win.m}},
             {"relations", relation_suite_json(suite)},
             {"dimension", dimension_json(dim)},
             {"coefficient_lemmas", coefficient_checks_json(lemmas)},
             {"pass", ok}});
  return ok ? 0 : kFailed;
}

int cmd_anick(const Config& cfg) {
  const Window win = cfg.window();
  AnickResolution res(small_groebner_basis(win));
  const std::uint64_t bound = cfg.deg_bound();
  const ComplexReport cx = complex_check(res, bound);
  const ExactnessReport ex = exactness_check(res, bound);

  Json w = Json::array();
  for (const auto& [w1, w2] : matches_w(res.chains(1), res.t2())) {
    w.push_back({word_json(w1), word_json(w2)});
  }
  Json d1 = Json::array();
  Json d2 = Json::array();
  for (const Degree d : res.degrees(bound)) {
    const GradedMatrix m1 = res.d_matrix(1, d);
    if (!m1.rows.empty()) d1.push_back(matrix_json(m1));
    const GradedMatrix m2 = res.d_matrix(2, d);
    if (!m2.rows.empty()) d2.push_back(matrix_json(m2));
  }
  auto& out = text(cfg);
  out << "|T1| = " << res.chains(1).size() << ", |T2| = " << res.chains(2).size()
      << ", |W| = " << w.size() << "\n";
  out << "complex (Deg <= " << bound << "): " << (cx.pass() ? "pass" : "FAIL") << ", "
      << cx.chains_checked << " chains\n";
  for (const auto& f : cx.failures) out << "  " << f << "\n";
  out << "exactness at P0, P1: " << (ex.pass() ? "pass" : "FAIL") << ", " << ex.degrees.size()
      << " degrees\n";
  for (const auto& d : ex.degrees) {
    if (d.pass()) continue;
    out << "  degree " << d.degree.to_string() << " dims " << d.dim_p0 << "/" << d.dim_p1 << "/"
        << d.dim_p2 << " ranks " << d.rank_d0 << "/" << d.rank_d1 << "/" << d.rank_d2 << "\n";
  }
  emit(cfg, {{"p", cfg.p},
             {"window", {win.j, win.m}},
             {"max_deg", bound},
             {"t1", word_list(res.chains(1))},
             {"t2", word_list(res.chains(2))},
             {"degree_tables",
              {{"t1", degree_table_json(res.chains(1))}, {"t2", degree_table_json(res.chains(2))}}},
             {"matches_W", std::move(w)},
             {"d1", std::move(d1)},
             {"d2", std::move(d2)},
             {"complex_check", complex_json(cx)},
             {"exactness", exactness_json(ex)}});
  return cx.pass() && ex.pass() ? 0 : kFailed;
}

int cmd_minimal(const Config& cfg) {
  MinimalComplex mc(cfg.window());
  const std::uint64_t bound = cfg.deg_bound();
  const MinimalityReport rep = minimality_report(mc, bound);
  const ReducedChains req = mc.requested_chains();

  AnickResolution& res = mc.resolution();
  Json d2p = Json::array();
  for (const Degree d : res.degrees(bound)) {
    const GradedMatrix g = res.graded_matrix(req.t2_prime, mc.t1_prime(), d,
                                             [&](const Word& t) { return mc.d2_prime(t); });
    if (!g.rows.empty()) d2p.push_back(matrix_json(g));
  }
  auto& out = text(cfg);
  out << "|T'1| = " << req.t1_prime.size() << ", |T'2| = " << req.t2_prime.size()
      << " (computed over indices " << mc.extended().j << ".." << mc.extended().m - 1 << ")\n";
  out << "smallness d0 " << (rep.small_d0 ? "pass" : "FAIL") << ", d'1 "
      << (rep.small_d1 ? "pass" : "FAIL") << ", d'2 " << (rep.small_d2 ? "pass" : "FAIL")
      << "\n";
  out << "d'1 d'2 = 0: " << (rep.complex_d1_d2 ? "pass" : "FAIL") << "\n";
  out << "exact at P'1 (Deg <= " << bound << "): " << (rep.exact_p1_prime ? "pass" : "FAIL")
      << ", " << rep.degrees_checked << " degrees\n";
  for (const auto& f : rep.failures) out << "  " << f << "\n";
  out << "Ext dimensions by degree:\n";
  for (const auto& [i, dims] : rep.ext_dims) {
    out << "  Ext^" << i << ":";
    for (const auto& [d, n] : dims) out << " " << d.to_string() << (n > 1 ? "x" + std::to_string(n) : "");
    out << "\n";
  }
  Json doc = {{"p", cfg.p},
              {"window", {mc.window().j, mc.window().m}},
              {"max_deg", bound},
              {"t1_prime", word_list(req.t1_prime)},
              {"t2_prime", word_list(req.t2_prime)},
              {"d2_prime", std::move(d2p)}};
  const Json summary = minimality_json(rep);
  for (const auto& [k, v] : summary.items()) doc[k] = v;
  emit(cfg, doc);
  return rep.pass() ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and the Anick resolution for the Kostant form of U(sl3+)"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic (prime)")->check(CLI::PositiveNumber);
    sub->add_option("--m", cfg.m, "window end: generator indices j <= k <= m-1");
    sub->add_option("--j", cfg.j, "window start");
    sub->add_option("--json", cfg.json_path, "write the JSON report to PATH ('-' for stdout)");
  };

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  common(nf);
  nf->add_option("expr", cfg.expr, "polynomial in a/b or divided letters")->required();
  nf->add_flag("--char0", cfg.char0, "rational coefficients (divided letters only)");

  auto* gb = app.add_subcommand("gb", "list a Groebner basis and certify it");
  common(gb);
  gb->add_flag("--big", cfg.big, "divided-power system truncated at p^m - 1");
  gb->add_flag("--char0", cfg.char0, "rational coefficients (with --big)");
  gb->add_option("--bound", cfg.bound, "only check critical pairs with tip Deg <= bound");
  gb->add_option("--rules", cfg.rules_path, "certify the rules of a previous JSON report");

  auto* verify = app.add_subcommand("verify", "relation suite, dimension and coefficient checks");
  common(verify);

  auto* anick = app.add_subcommand("anick", "Anick chains, differentials and exactness");
  common(anick);
  anick->add_option("--max-deg", cfg.max_deg, "Deg bound (default 3p^2)");

  auto* minimal = app.add_subcommand("minimal", "the modified complex and Ext dimensions");
  common(minimal);
  minimal->add_option("--max-deg", cfg.max_deg, "Deg bound (default 3p^2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (nf->parsed()) return cmd_nf(cfg);
    if (gb->parsed()) return cmd_gb(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (anick->parsed()) return cmd_anick(cfg);
    if (minimal->parsed()) return cmd_minimal(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

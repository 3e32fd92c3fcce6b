#include "ncalg/minimal.hpp"

#include <algorithm>
#include <set>

#include "ncalg/error.hpp"

namespace ncalg {

bool radical_membership(const ModuleElement& x) {
  return std::none_of(x.terms().begin(), x.terms().end(),
                      [](const auto& term) { return term.first.m.empty(); });
}

Word braid_chain(unsigned k, std::uint32_t p) {
  return (Word(Generator::b(k, p)) * Word(Generator::a(k, p))).power(p);
}

Word removed_chain(unsigned k, std::uint32_t p) {
  return Word(Generator::a(k + 1, p)) * Word(Generator::b(k, p)).power(p);
}

bool within(const Word& w, unsigned m) {
  return std::all_of(w.begin(), w.end(), [m](const Generator& g) { return g.index() < m; });
}

ReducedChains reduced_chain_sets(const Window& win) {
  win.validate();
  const RewriteSystem sys = small_groebner_basis(win);
  std::set<Word> drop1;
  std::set<Word> drop2;
  for (unsigned k = win.j; k < win.m; ++k) {
    drop1.insert(braid_chain(k, win.p));
    if (k + 1 < win.m) drop2.insert(removed_chain(k, win.p));
  }
  ReducedChains out;
  for (const auto& w : t1_set(sys)) {
    if (!drop1.contains(w)) out.t1_prime.push_back(w);
  }
  for (const auto& c : t2_set(sys)) {
    if (!drop2.contains(c.tip)) out.t2_prime.push_back(c.tip);
  }
  return out;
}

MinimalComplex::MinimalComplex(const Window& requested)
    : requested_(requested), extended_{requested.p, requested.j, requested.m + 1} {
  requested_.validate();
  extended_.validate();
  res_ = std::make_unique<AnickResolution>(small_groebner_basis(extended_));
  const std::uint32_t p = extended_.p;
  std::set<Word> drop2;
  for (unsigned k = extended_.j; k + 1 < extended_.m; ++k) {
    removable_.emplace(braid_chain(k, p), k);
    drop2.insert(removed_chain(k, p));
  }
  for (const auto& w : res_->chains(1)) {
    if (!removable_.contains(w)) t1_prime_.push_back(w);
  }
  for (const auto& w : res_->chains(2)) {
    if (!drop2.contains(w)) t2_prime_.push_back(w);
  }
}

ReducedChains MinimalComplex::requested_chains() const {
  ReducedChains out;
  for (const auto& w : t1_prime_) {
    if (within(w, requested_.m)) out.t1_prime.push_back(w);
  }
  for (const auto& w : t2_prime_) {
    if (within(w, requested_.m)) out.t2_prime.push_back(w);
  }
  return out;
}

Scalar MinimalComplex::braid_coefficient(unsigned k) {
  if (auto it = braid_coeff_.find(k); it != braid_coeff_.end()) return it->second;
  if (k < extended_.j || k + 1 >= extended_.m) {
    throw WindowTooSmall("a_" + std::to_string(k + 1) + " is outside the window");
  }
  const std::uint32_t p = extended_.p;
  const Scalar c =
      res_->differential(2, removed_chain(k, p)).coefficient({Word{}, braid_chain(k, p)});
  if (res_->field().is_zero(c)) {
    throw InvariantViolation("d2(." + removed_chain(k, p).to_string() +
                             ") has no scalar term on the braid chain");
  }
  return braid_coeff_.emplace(k, c).first->second;
}

ModuleElement MinimalComplex::phi1(const ModuleElement& x) {
  const Field& f = res_->field();
  ModuleElement out = x;
  std::size_t rounds = 0;
  for (;;) {
    std::optional<std::pair<BasisElement, Scalar>> hit;
    for (const auto& [b, c] : out.terms()) {
      if (removable_.contains(b.t)) {
        hit.emplace(b, c);
        break;
      }
    }
    if (!hit) return out;
    if (++rounds > 100000) throw InvariantViolation("phi1 substitution does not terminate");
    const auto& [b, c] = *hit;
    const unsigned k = removable_.at(b.t);
    const Scalar r = f.neg(f.div(c, braid_coefficient(k)));
    out += res_->act(b.m, res_->differential(2, removed_chain(k, extended_.p))).scaled(r);
  }
}

const ModuleElement& MinimalComplex::d2_prime(const Word& w) {
  if (auto it = d2_prime_.find(w); it != d2_prime_.end()) return it->second;
  ModuleElement d = phi1(res_->differential(2, w));
  return d2_prime_.emplace(w, std::move(d)).first->second;
}

std::vector<CoefficientCheck> coefficient_lemma_checks(const Window& win) {
  win.validate();
  const Window ext = win.width() >= 2 ? win : Window{win.p, win.j, win.m + 1};
  ext.validate();
  AnickResolution res(small_groebner_basis(ext));
  const Field& f = res.field();
  const std::uint32_t p = ext.p;
  std::vector<CoefficientCheck> out;
  auto add = [&](std::string name, unsigned k, const Scalar& expected, const Scalar& actual) {
    out.push_back({std::move(name), k, f.to_string(expected), f.to_string(actual),
                   expected == actual});
  };
  for (unsigned k = ext.j; k + 1 < ext.m; ++k) {
    const Word a(Generator::a(k, p));
    const Word b(Generator::b(k, p));
    const Word a1(Generator::a(k + 1, p));
    const Word b1(Generator::b(k + 1, p));
    const Word ba = b * a;
    add("nf_lemma_one", k, f.one(),
        res.nf(b.power(p - 1) * a.power(p - 1)).coefficient(ba.power(p - 1)));
    add("nf_lemma_two", k, f.one(), res.nf(b1 * a.power(p - 1)).coefficient(ba.power(p - 1) * b));
    const ModuleElement& dab = res.differential(2, a1 * b.power(p));
    const ModuleElement& dba = res.differential(2, b1 * a.power(p));
    const BasisElement braid{Word{}, ba.power(p)};
    const BasisElement mixed{Word{}, a1 * b1};
    add("d2_ab_braid", k, f.from_int(-1), dab.coefficient(braid));
    add("d2_ba_braid", k, f.from_int(-1), dba.coefficient(braid));
    add("d2_ab_zero", k, f.zero(), dab.coefficient(mixed));
    add("d2_ba_zero", k, f.zero(), dba.coefficient(mixed));
    ModuleElement sub = dab;
    sub.add_term(braid, f.one());
    out.push_back({"substitution", k, "rad", radical_membership(sub) ? "rad" : "not rad",
                   radical_membership(sub)});
  }
  for (const auto& w : res.chains(2)) {
    for (const auto& u : res.chains(1)) {
      if (u.degree() != w.degree() || !res.order().less(w, u)) continue;
      add("lemma_zero " + u.to_string() + " in " + w.to_string(), 0, f.zero(),
          res.differential(2, w).coefficient({Word{}, u}));
    }
  }
  return out;
}

MinimalityReport minimality_report(MinimalComplex& mc, std::uint64_t deg_bound) {
  MinimalityReport rep;
  AnickResolution& res = mc.resolution();
  for (const auto& t : res.chains(0)) {
    if (!radical_membership(res.differential(0, t))) {
      rep.small_d0 = false;
      rep.failures.push_back("d0(." + t.to_string() + ") not in Rad(P_-1)");
    }
  }
  for (const auto& t : mc.t1_prime()) {
    if (!radical_membership(res.differential(1, t))) {
      rep.small_d1 = false;
      rep.failures.push_back("d'1(." + t.to_string() + ") not in Rad(P_0)");
    }
  }
  for (const auto& t : mc.t2_prime()) {
    const ModuleElement& d = mc.d2_prime(t);
    if (!radical_membership(d)) {
      rep.small_d2 = false;
      rep.failures.push_back("d'2(." + t.to_string() + ") not in Rad(P'_1)");
    }
    if (!res.apply_d(1, d).is_zero()) {
      rep.complex_d1_d2 = false;
      rep.failures.push_back("d'1 d'2(." + t.to_string() + ") != 0");
    }
  }
  for (const Degree d : res.degrees(deg_bound)) {
    const std::size_t dim = res.graded_basis(mc.t1_prime(), d).size();
    if (dim == 0) continue;
    ++rep.degrees_checked;
    const std::size_t r1 =
        res.graded_matrix(mc.t1_prime(), res.chains(0), d,
                          [&](const Word& t) { return res.differential(1, t); })
            .rank();
    const std::size_t r2 =
        res.graded_matrix(mc.t2_prime(), mc.t1_prime(), d,
                          [&](const Word& t) { return mc.d2_prime(t); })
            .rank();
    if (dim - r1 != r2) {
      rep.exact_p1_prime = false;
      rep.failures.push_back("P'1 not exact in degree " + d.to_string() + ": kernel " +
                             std::to_string(dim - r1) + ", image " + std::to_string(r2));
    }
  }
  const ReducedChains req = mc.requested_chains();
  const unsigned m = mc.window().m;
  rep.ext_dims[0][Degree{}] = 1;
  for (const auto& t : res.chains(0)) {
    if (within(t, m)) ++rep.ext_dims[1][t.degree()];
  }
  for (const auto& t : req.t1_prime) ++rep.ext_dims[2][t.degree()];
  for (const auto& t : req.t2_prime) ++rep.ext_dims[3][t.degree()];
  return rep;
}

}  // namespace ncalg

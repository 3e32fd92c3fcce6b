#include "ncalg/anick.hpp"

#include <algorithm>
#include <set>

#include "ncalg/error.hpp"

namespace ncalg {

std::vector<Word> t1_set(const RewriteSystem& sys) {
  std::vector<Word> out;
  for (const auto& r : sys.rules()) out.push_back(r.lhs);
  std::sort(out.begin(), out.end(),
            [&](const Word& x, const Word& y) { return sys.order().less(x, y); });
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j && out[j].contains(out[i])) {
        throw InvariantViolation("T1 is not an anti-chain: " + out[i].to_string() + " divides " +
                                 out[j].to_string());
      }
    }
  }
  return out;
}

std::vector<Chain2> t2_set(const RewriteSystem& sys) {
  const auto t1 = t1_set(sys);
  std::map<Word, std::vector<Chain2>> by_tip;
  for (const auto& m1 : t1) {
    for (const auto& m2 : t1) {
      for (const auto& ov : find_overlaps(m1, m2)) {
        if (ov.containment) continue;
        by_tip[ov.tip].push_back({ov.tip, m1, ov.v, ov.u, m2});
      }
    }
  }
  std::vector<Chain2> out;
  for (const auto& [tip, decomps] : by_tip) {
    bool minimal = true;
    for (const auto& [other, unused] : by_tip) {
      if (other != tip && other.size() < tip.size() && tip.contains(other)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (decomps.size() != 1) {
      throw InvariantViolation("minimal overlap " + tip.to_string() + " has " +
                               std::to_string(decomps.size()) + " decompositions");
    }
    out.push_back(decomps.front());
  }
  std::sort(out.begin(), out.end(),
            [&](const Chain2& x, const Chain2& y) { return sys.order().less(x.tip, y.tip); });
  return out;
}

std::vector<std::pair<Word, Degree>> degree_table(const std::vector<Word>& chains) {
  std::vector<std::pair<Word, Degree>> out;
  out.reserve(chains.size());
  for (const auto& w : chains) out.emplace_back(w, w.degree());
  return out;
}

std::vector<std::pair<Word, Word>> matches_w(const std::vector<Word>& t1,
                                             const std::vector<Chain2>& t2) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& w1 : t1) {
    for (const auto& c : t2) {
      if (w1.degree() == c.tip.degree()) out.emplace_back(w1, c.tip);
    }
  }
  return out;
}

std::strong_ordering compare_basis(const BasisElement& x, const BasisElement& y,
                                   const MonomialOrder& order) {
  if (auto c = order.compare(x.m * x.t, y.m * y.t); c != 0) return c;
  if (auto c = order.compare(x.t, y.t); c != 0) return c;
  return order.compare(x.m, y.m);
}

ModuleElement ModuleElement::basis(const Field& field, BasisElement b) {
  ModuleElement x(field);
  x.terms_.emplace(std::move(b), field.one());
  return x;
}

Scalar ModuleElement::coefficient(const BasisElement& b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? field_.zero() : it->second;
}

Polynomial ModuleElement::coordinate(const Word& t) const {
  Polynomial out(field_);
  for (const auto& [b, c] : terms_) {
    if (b.t == t) out.add_term(b.m, c);
  }
  return out;
}

void ModuleElement::add_term(const BasisElement& b, const Scalar& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& g) {
  if (!(field_ == g.field_)) throw FieldMismatch();
  for (const auto& [b, c] : g.terms_) add_term(b, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& g) {
  if (!(field_ == g.field_)) throw FieldMismatch();
  for (const auto& [b, c] : g.terms_) add_term(b, field_.neg(c));
  return *this;
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
  ModuleElement out(field_);
  if (field_.is_zero(c)) return out;
  for (const auto& [b, x] : terms_) out.terms_.emplace(b, field_.mul(x, c));
  return out;
}

std::pair<BasisElement, Scalar> ModuleElement::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw EmptyPolynomial();
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (compare_basis(best->first, it->first, order) < 0) best = it;
  }
  return *best;
}

std::string ModuleElement::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<BasisElement, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    return compare_basis(y.first, x.first, order) < 0;
  });
  std::string out;
  bool first = true;
  for (const auto& [b, c] : sorted) {
    const bool neg = field_.is_negative(c);
    const Scalar mag = neg ? field_.neg(c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (!field_.is_one(mag)) out += field_.to_string(mag) + "*";
    out += b.m.empty() ? "." + b.t.to_string() : b.to_string();
  }
  return out;
}

AnickResolution::AnickResolution(const RewriteSystem& sys) : sys_(sys), reducer_(sys_) {
  if (!is_reduced(sys_)) throw InvariantViolation("Anick resolution needs a reduced system");
  if (!is_complete(sys_).complete) {
    throw InvariantViolation("Anick resolution needs a complete system");
  }
  chains_[0] = {Word{}};
  for (const auto& g : sys_.alphabet()) chains_[1].push_back(Word(g));
  chains_[2] = t1_set(sys_);
  t2_ = t2_set(sys_);
  for (std::size_t i = 0; i < t2_.size(); ++i) {
    chains_[3].push_back(t2_[i].tip);
    t2_index_.emplace(t2_[i].tip, i);
  }
}

const std::vector<Word>& AnickResolution::chains(int n) const {
  if (n < -1 || n > 2) throw DomainError("chain level out of range");
  return chains_[n + 1];
}

const Chain2& AnickResolution::t2_decomposition(const Word& tip) const {
  const auto it = t2_index_.find(tip);
  if (it == t2_index_.end()) throw DomainError(tip.to_string() + " is not a 2-chain");
  return t2_[it->second];
}

const Polynomial& AnickResolution::nf(const Word& w) { return reducer_.word_nf(w); }

namespace {

ModuleElement with_chain(const Polynomial& f, const Word& t) {
  ModuleElement out(f.field());
  for (const auto& [m, c] : f.terms()) out.add_term({m, t}, c);
  return out;
}

}  // namespace

ModuleElement AnickResolution::delta(int n, const BasisElement& b) {
  switch (n) {
    case 0:
      return with_chain(nf(b.m * b.t), Word{});
    case 1: {
      const Word head = b.t.prefix(b.t.size() - 1);
      return with_chain(nf(b.m * head), Word(b.t.back()));
    }
    case 2: {
      const Chain2& c = t2_decomposition(b.t);
      return with_chain(nf(b.m * c.u), c.m2);
    }
    default:
      throw DomainError("delta is defined for levels 0, 1, 2");
  }
}

ModuleElement AnickResolution::jmap(int n, const BasisElement& b) {
  ModuleElement out(field());
  switch (n) {
    case 0:
      if (b.m.empty()) return out;
      out.add_term({b.m.prefix(b.m.size() - 1), Word(b.m.back())}, field().one());
      return out;
    case 1:
    case 2: {
      std::optional<BasisElement> hit;
      for (std::size_t len = 0; len <= b.m.size(); ++len) {
        const Word vt = b.m.suffix(len) * b.t;
        const bool found = n == 1 ? sys_.find_rule(vt).has_value() : t2_index_.contains(vt);
        if (!found) continue;
        if (hit) throw InvariantViolation("ambiguous factorisation of " + b.to_string());
        hit = BasisElement{b.m.prefix(b.m.size() - len), vt};
      }
      if (hit) out.add_term(*hit, field().one());
      return out;
    }
    default:
      throw DomainError("j is defined for levels 0, 1, 2");
  }
}

const ModuleElement& AnickResolution::differential(int n, const Word& t) {
  const auto key = std::make_pair(n, t);
  if (auto it = d_cache_.find(key); it != d_cache_.end()) return it->second;
  ModuleElement d(field());
  if (n == 0) {
    d = delta(0, {Word{}, t});
  } else if (n == 1 || n == 2) {
    d = delta(n, {Word{}, t});
    d -= splitting(n - 1, apply_d(n - 1, d));
  } else {
    throw DomainError("differential is defined for levels 0, 1, 2");
  }
  return d_cache_.emplace(key, std::move(d)).first->second;
}

ModuleElement AnickResolution::apply_d(int n, const ModuleElement& f) {
  ModuleElement out(field());
  for (const auto& [b, c] : f.terms()) {
    out += act(b.m, differential(n, b.t)).scaled(c);
  }
  return out;
}

std::uint64_t AnickResolution::step_budget(int n, const ModuleElement& f) {
  std::uint64_t deg = 0;
  for (const auto& [b, c] : f.terms()) deg = std::max(deg, b.degree().norm());
  auto it = budget_cache_.find(deg);
  if (it == budget_cache_.end()) {
    it = budget_cache_.emplace(deg, irreducible_words(sys_, deg).size()).first;
  }
  return it->second * chains(n).size() + 1;
}

ModuleElement AnickResolution::splitting(int n, ModuleElement f) {
  if (n != 0 && n != 1) throw DomainError("splitting is defined for levels 0, 1");
  ModuleElement out(field());
  if (f.is_zero()) return out;
  const std::uint64_t budget = step_budget(n, f);
  std::uint64_t steps = 0;
  while (!f.is_zero()) {
    const auto [b, c] = f.leading_term(order());
    const ModuleElement j = jmap(n, b);
    if (j.is_zero()) {
      throw InvariantViolation("j_" + std::to_string(n) + " vanishes on leading term " +
                               b.to_string());
    }
    const ModuleElement step = j.scaled(c);
    out += step;
    f -= apply_d(n, step);
    if (++steps > budget) throw InvariantViolation("splitting exceeded its step budget");
  }
  return out;
}

ModuleElement AnickResolution::act(const Word& a, const ModuleElement& f) {
  if (a.empty()) return f;
  ModuleElement out(field());
  for (const auto& [b, c] : f.terms()) {
    for (const auto& [m, d] : nf(a * b.m).terms()) out.add_term({m, b.t}, field().mul(c, d));
  }
  return out;
}

ModuleElement AnickResolution::act(const Polynomial& a, const ModuleElement& f) {
  ModuleElement out(field());
  for (const auto& [w, c] : a.terms()) out += act(w, f).scaled(c);
  return out;
}

Scalar AnickResolution::augmentation(const ModuleElement& f) const {
  return f.coefficient({Word{}, Word{}});
}

const std::map<Degree, std::vector<Word>>& AnickResolution::irreducible_by_degree(
    std::uint64_t bound) {
  if (!irreducible_ready_ || bound > irreducible_bound_) {
    irreducible_.clear();
    for (auto& w : irreducible_words(sys_, bound)) irreducible_[w.degree()].push_back(std::move(w));
    irreducible_bound_ = bound;
    irreducible_ready_ = true;
  }
  return irreducible_;
}

std::vector<BasisElement> AnickResolution::graded_basis(const std::vector<Word>& chains, Degree d) {
  irreducible_by_degree(d.norm());
  std::vector<BasisElement> out;
  for (const auto& t : chains) {
    const Degree dt = t.degree();
    if (!d.dominates(dt)) continue;
    const auto it = irreducible_.find(d.minus(dt));
    if (it == irreducible_.end()) continue;
    for (const auto& m : it->second) out.push_back({m, t});
  }
  return out;
}

GradedMatrix AnickResolution::graded_matrix(const std::vector<Word>& domain,
                                            const std::vector<Word>& codomain, Degree d,
                                            const std::function<ModuleElement(const Word&)>& image) {
  GradedMatrix g{d, graded_basis(domain, d), graded_basis(codomain, d),
                 Matrix(field(), 0, 0)};
  std::map<BasisElement, std::size_t> col;
  for (std::size_t j = 0; j < g.cols.size(); ++j) col.emplace(g.cols[j], j);
  g.matrix = Matrix(field(), g.rows.size(), g.cols.size());
  std::map<Word, ModuleElement> images;
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    const BasisElement& b = g.rows[i];
    auto it = images.find(b.t);
    if (it == images.end()) it = images.emplace(b.t, image(b.t)).first;
    const ModuleElement row = act(b.m, it->second);
    for (const auto& [x, c] : row.terms()) {
      const auto k = col.find(x);
      if (k == col.end()) {
        throw InvariantViolation("image term " + x.to_string() + " outside the degree " +
                                 d.to_string() + " basis");
      }
      g.matrix.add(i, k->second, c);
    }
  }
  return g;
}

GradedMatrix AnickResolution::d_matrix(int n, Degree d) {
  return graded_matrix(chains(n), chains(n - 1), d,
                       [&](const Word& t) { return differential(n, t); });
}

std::vector<Degree> AnickResolution::degrees(std::uint64_t bound) {
  const auto& irr = irreducible_by_degree(bound);
  std::set<Degree> out;
  for (int n = -1; n <= 2; ++n) {
    for (const auto& t : chains(n)) {
      for (const auto& [dm, words] : irr) {
        const Degree d = dm + t.degree();
        if (d.norm() <= bound) out.insert(d);
      }
    }
  }
  return {out.begin(), out.end()};
}

ComplexReport complex_check(AnickResolution& res, std::uint64_t deg_bound) {
  ComplexReport rep;
  const Field& k = res.field();
  for (const auto& t : res.chains(0)) {
    if (t.total_degree() > deg_bound) continue;
    ++rep.chains_checked;
    if (!k.is_zero(res.augmentation(res.differential(0, t)))) {
      rep.eps_d0 = false;
      rep.failures.push_back("eps d0(." + t.to_string() + ") != 0");
    }
  }
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : res.chains(n)) {
      if (t.total_degree() > deg_bound) continue;
      ++rep.chains_checked;
      if (!res.apply_d(n - 1, res.differential(n, t)).is_zero()) {
        (n == 1 ? rep.d0_d1 : rep.d1_d2) = false;
        rep.failures.push_back("d" + std::to_string(n - 1) + " d" + std::to_string(n) + "(." +
                               t.to_string() + ") != 0");
      }
    }
  }
  return rep;
}

bool ExactnessReport::pass() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const DegreeExactness& d) { return d.pass(); });
}

ExactnessReport exactness_check(AnickResolution& res, std::uint64_t deg_bound) {
  ExactnessReport rep;
  for (const Degree d : res.degrees(deg_bound)) {
    DegreeExactness e;
    e.degree = d;
    e.dim_pm1 = res.graded_basis(res.chains(-1), d).size();
    e.dim_p0 = res.graded_basis(res.chains(0), d).size();
    e.dim_p1 = res.graded_basis(res.chains(1), d).size();
    e.dim_p2 = res.graded_basis(res.chains(2), d).size();
    e.rank_eps = d.is_zero() && e.dim_pm1 > 0 ? 1 : 0;
    e.rank_d0 = res.d_matrix(0, d).rank();
    e.rank_d1 = res.d_matrix(1, d).rank();
    e.rank_d2 = res.d_matrix(2, d).rank();
    rep.degrees.push_back(e);
  }
  return rep;
}

}  // namespace ncalg

#include "ncalg/rewriting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "ncalg/error.hpp"

namespace ncalg {

Polynomial RewriteRule::as_polynomial() const {
  Polynomial p = Polynomial::monomial(rhs.field(), lhs);
  p -= rhs;
  return p;
}

RewriteRule rule_from_poly(const Polynomial& p, const MonomialOrder& order) {
  const Term lt = leading_term(p, order);
  const Field& k = p.field();
  const Scalar inv = k.inv(lt.coefficient);
  Polynomial rhs(k);
  for (const auto& [w, c] : p.terms()) {
    if (w == lt.word) continue;
    rhs.add_term(w, k.neg(k.mul(c, inv)));
  }
  return {lt.word, std::move(rhs)};
}

RewriteSystem::RewriteSystem(Field field, MonomialOrder order)
    : field_(field), order_(std::move(order)), alphabet_(order_.ranking()) {}

RewriteSystem::RewriteSystem(Field field, MonomialOrder order, std::vector<Generator> alphabet)
    : field_(field), order_(std::move(order)), alphabet_(std::move(alphabet)) {}

void RewriteSystem::add_rule(RewriteRule rule) {
  if (rule.lhs.empty()) throw InvariantViolation("rule with empty lhs");
  if (!(rule.rhs.field() == field_)) throw FieldMismatch();
  for (const auto& [w, c] : rule.rhs.terms()) {
    if (!order_.less(w, rule.lhs)) {
      throw InvariantViolation("rhs monomial " + w.to_string() + " is not below lhs " +
                               rule.lhs.to_string());
    }
  }
  if (find_rule(rule.lhs)) {
    throw InvariantViolation("duplicate lhs " + rule.lhs.to_string());
  }
  rules_.push_back(std::move(rule));
  index_rule(rules_.size() - 1);
}

void RewriteSystem::add_polynomial(const Polynomial& p) { add_rule(rule_from_poly(p, order_)); }

void RewriteSystem::index_rule(std::size_t i) {
  std::uint32_t node = 0;
  for (const auto& g : rules_[i].lhs) {
    auto it = trie_[node].next.find(g.code());
    if (it == trie_[node].next.end()) {
      trie_.push_back(Node{});
      const auto child = static_cast<std::uint32_t>(trie_.size() - 1);
      trie_[node].next.emplace(g.code(), child);
      node = child;
    } else {
      node = it->second;
    }
  }
  trie_[node].rule = i;
  max_lhs_ = std::max(max_lhs_, rules_[i].lhs.size());
}

std::optional<std::size_t> RewriteSystem::find_rule(const Word& lhs) const {
  std::uint32_t node = 0;
  for (const auto& g : lhs) {
    auto it = trie_[node].next.find(g.code());
    if (it == trie_[node].next.end()) return std::nullopt;
    node = it->second;
  }
  return trie_[node].rule;
}

std::optional<Redex> RewriteSystem::find_redex(const Word& w) const {
  for (std::size_t start = 0; start < w.size(); ++start) {
    std::uint32_t node = 0;
    std::optional<std::size_t> best;
    for (std::size_t i = start; i < w.size(); ++i) {
      auto it = trie_[node].next.find(w[i].code());
      if (it == trie_[node].next.end()) break;
      node = it->second;
      if (trie_[node].rule) best = trie_[node].rule;
    }
    if (best) return Redex{*best, start};
  }
  return std::nullopt;
}

std::optional<Redex> RewriteSystem::find_last_redex(const Word& w) const {
  for (std::size_t start = w.size(); start-- > 0;) {
    std::uint32_t node = 0;
    for (std::size_t i = start; i < w.size(); ++i) {
      auto it = trie_[node].next.find(w[i].code());
      if (it == trie_[node].next.end()) break;
      node = it->second;
      if (trie_[node].rule) return Redex{*trie_[node].rule, start};
    }
  }
  return std::nullopt;
}

bool RewriteSystem::has_suffix_redex(const Word& w) const {
  const std::size_t n = w.size();
  const std::size_t lo = n > max_lhs_ ? n - max_lhs_ : 0;
  for (std::size_t start = lo; start < n; ++start) {
    std::uint32_t node = 0;
    std::size_t i = start;
    for (; i < n; ++i) {
      auto it = trie_[node].next.find(w[i].code());
      if (it == trie_[node].next.end()) break;
      node = it->second;
    }
    if (i == n && trie_[node].rule) return true;
  }
  return false;
}

std::vector<RewriteRule> RewriteSystem::sorted_rules() const {
  std::vector<RewriteRule> out = rules_;
  std::sort(out.begin(), out.end(), [&](const RewriteRule& x, const RewriteRule& y) {
    return order_.less(y.lhs, x.lhs);
  });
  return out;
}

namespace {

// c * u * rhs * v - c * u * lhs * v is added to f, removing the monomial.
void apply_rule(Polynomial& f, const Word& w, const Scalar& c, const Redex& r,
                const RewriteSystem& sys) {
  const RewriteRule& rule = sys.rules()[r.rule];
  const Word u = w.prefix(r.position);
  const Word v = w.suffix(w.size() - r.position - rule.lhs.size());
  f.add_term(w, sys.field().neg(c));
  for (const auto& [m, d] : rule.rhs.terms()) f.add_term(u * m * v, sys.field().mul(c, d));
}

}  // namespace

std::optional<Polynomial> reduce_once(const Polynomial& g, const RewriteSystem& sys) {
  std::optional<Word> best;
  std::optional<Redex> best_redex;
  for (const auto& [w, c] : g.terms()) {
    if (best && !sys.order().less(*best, w)) continue;
    if (auto r = sys.find_redex(w)) {
      best = w;
      best_redex = r;
    }
  }
  if (!best) return std::nullopt;
  Polynomial out = g;
  apply_rule(out, *best, g.coefficient(*best), *best_redex, sys);
  return out;
}

Polynomial normal_form(const Polynomial& f, const RewriteSystem& sys) {
  const Field& k = sys.field();
  std::map<Word, Scalar, DescendingBy> work(DescendingBy{&sys.order()});
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);
  Polynomial result(k);
  while (!work.empty()) {
    auto top = work.begin();
    const Word w = top->first;
    const Scalar c = top->second;
    work.erase(top);
    const auto r = sys.find_redex(w);
    if (!r) {
      result.add_term(w, c);
      continue;
    }
    const RewriteRule& rule = sys.rules()[r->rule];
    const Word u = w.prefix(r->position);
    const Word v = w.suffix(w.size() - r->position - rule.lhs.size());
    for (const auto& [m, d] : rule.rhs.terms()) {
      Word x = u * m * v;
      const Scalar add = k.mul(c, d);
      auto [it, inserted] = work.try_emplace(std::move(x), add);
      if (!inserted) {
        it->second = k.add(it->second, add);
        if (k.is_zero(it->second)) work.erase(it);
      }
    }
  }
  return result;
}

Polynomial normal_form(const Word& w, const RewriteSystem& sys) {
  return normal_form(Polynomial::monomial(sys.field(), w), sys);
}

const Polynomial& MemoReducer::word_nf(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  Polynomial out(sys_.field());
  if (const auto r = sys_.find_last_redex(w)) {
    const RewriteRule& rule = sys_.rules()[r->rule];
    const Word u = w.prefix(r->position);
    const Word v = w.suffix(w.size() - r->position - rule.lhs.size());
    for (const auto& [m, d] : rule.rhs.terms()) {
      const Polynomial& sub = word_nf(u * m * v);
      out += sub.scaled(d);
    }
  } else {
    out.add_term(w, sys_.field().one());
  }
  return cache_.emplace(w, std::move(out)).first->second;
}

Polynomial MemoReducer::nf(const Polynomial& f) {
  Polynomial out(sys_.field());
  for (const auto& [w, c] : f.terms()) out += word_nf(w).scaled(c);
  return out;
}

std::vector<Overlap> find_overlaps(const Word& m1, const Word& m2) {
  std::vector<Overlap> out;
  const std::size_t n1 = m1.size();
  const std::size_t n2 = m2.size();
  for (std::size_t len = 1; len < std::min(n1, n2); ++len) {
    if (m1.suffix(len) == m2.prefix(len)) {
      out.push_back({m1 * m2.suffix(n2 - len), m1.prefix(n1 - len), m2.suffix(n2 - len), false});
    }
  }
  for (std::size_t pos : m2.occurrences(m1)) {
    if (n1 == n2) continue;
    out.push_back({m2, m2.prefix(pos), m2.suffix(n2 - pos - n1), true});
  }
  return out;
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys) {
  std::vector<CriticalPair> out;
  std::set<std::tuple<Word, std::size_t, std::size_t>> seen;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      for (auto& ov : find_overlaps(rules[i].lhs, rules[j].lhs)) {
        if (!seen.emplace(ov.tip, i, j).second) continue;
        out.push_back({std::move(ov), i, j});
      }
    }
  }
  return out;
}

Polynomial s_polynomial(const CriticalPair& cp, const RewriteSystem& sys) {
  const auto& r1 = sys.rules()[cp.rule1];
  const auto& r2 = sys.rules()[cp.rule2];
  const Overlap& ov = cp.overlap;
  if (ov.containment) return r1.rhs.sandwich(ov.u, ov.v) - r2.rhs;
  return r1.rhs.sandwich(Word{}, ov.v) - r2.rhs.sandwich(ov.u, Word{});
}

bool pair_is_reducible(const CriticalPair& cp, const RewriteSystem& sys) {
  return normal_form(s_polynomial(cp, sys), sys).is_zero();
}

CompletenessCertificate is_complete(const RewriteSystem& sys, std::uint64_t tip_bound) {
  CompletenessCertificate cert;
  MemoReducer memo(sys);
  for (const auto& cp : critical_pairs(sys)) {
    if (cp.tip().total_degree() > tip_bound) continue;
    ++cert.pairs_checked;
    Polynomial residual = memo.nf(s_polynomial(cp, sys));
    if (!residual.is_zero()) {
      cert.complete = false;
      cert.failures.push_back({cp.tip(), cp.rule1, cp.rule2, std::move(residual)});
    }
  }
  return cert;
}

bool is_reduced(const RewriteSystem& sys) {
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (i == j) continue;
      if (rules[j].lhs.contains(rules[i].lhs)) return false;
      for (const auto& [w, c] : rules[j].rhs.terms()) {
        if (w.contains(rules[i].lhs)) return false;
      }
    }
  }
  return true;
}

RewriteSystem restrict_to_subalphabet(const RewriteSystem& sys,
                                      const std::vector<Generator>& letters) {
  std::unordered_set<Generator, GeneratorHash> y(letters.begin(), letters.end());
  auto inside = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](const Generator& g) { return y.contains(g); });
  };
  RewriteSystem out(sys.field(), sys.order(), letters);
  for (const auto& rule : sys.rules()) {
    if (!inside(rule.lhs)) continue;
    for (const auto& [w, c] : rule.rhs.terms()) {
      if (!inside(w)) {
        throw HypothesisViolation("rule " + format_rule(rule, sys.order()) + " leaves the subalphabet");
      }
    }
    out.add_rule(rule);
  }
  return out;
}

std::vector<Word> irreducible_words(const RewriteSystem& sys, std::uint64_t deg_bound) {
  std::vector<Word> out;
  Word w;
  std::uint64_t deg = 0;
  // Explicit stack of next-letter indices to keep the walk iterative.
  std::vector<std::size_t> next{0};
  out.push_back(w);
  const auto& alphabet = sys.alphabet();
  while (!next.empty()) {
    std::size_t& i = next.back();
    if (i >= alphabet.size()) {
      next.pop_back();
      if (!w.empty()) {
        deg -= w.back().degree().norm();
        w.pop_back();
      }
      continue;
    }
    const Generator g = alphabet[i++];
    const std::uint64_t d = g.degree().norm();
    if (deg + d > deg_bound) continue;
    w.push_back(g);
    if (sys.has_suffix_redex(w)) {
      w.pop_back();
      continue;
    }
    deg += d;
    out.push_back(w);
    next.push_back(0);
  }
  return out;
}

RewriteSystem interreduce(const RewriteSystem& sys) {
  const MonomialOrder& order = sys.order();
  std::vector<Polynomial> polys;
  for (const auto& r : sys.rules()) polys.push_back(r.as_polynomial());
  while (true) {
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& x, const Polynomial& y) {
      return order.less(leading_term(x, order).word, leading_term(y, order).word);
    });
    RewriteSystem acc(sys.field(), order, sys.alphabet());
    bool changed = false;
    std::vector<Polynomial> next;
    for (const auto& p : polys) {
      Polynomial r = normal_form(p, acc);
      if (r.is_zero()) {
        changed = true;
        continue;
      }
      const Word lm = leading_term(r, order).word;
      if (lm != leading_term(p, order).word) changed = true;
      if (acc.find_rule(lm)) {
        changed = true;
        continue;
      }
      acc.add_polynomial(r);
      next.push_back(std::move(r));
    }
    polys = std::move(next);
    if (changed) continue;
    // Lhs set is an anti-chain now; reduce the right-hand sides.
    RewriteSystem out(sys.field(), order, sys.alphabet());
    for (const auto& rule : acc.rules()) out.add_rule({rule.lhs, normal_form(rule.rhs, acc)});
    return out;
  }
}

RewriteSystem complete(const RewriteSystem& sys, std::uint64_t deg_bound) {
  RewriteSystem cur = interreduce(sys);
  while (true) {
    std::vector<Polynomial> residuals;
    for (const auto& cp : critical_pairs(cur)) {
      if (cp.tip().total_degree() > deg_bound) continue;
      Polynomial r = normal_form(s_polynomial(cp, cur), cur);
      if (!r.is_zero()) residuals.push_back(std::move(r));
    }
    if (residuals.empty()) return cur;
    RewriteSystem grown = cur;
    for (const auto& r : residuals) {
      Polynomial nr = normal_form(r, grown);
      if (nr.is_zero()) continue;
      grown.add_polynomial(nr);
    }
    cur = interreduce(grown);
  }
}

std::string format_rule(const RewriteRule& r, const MonomialOrder& order) {
  return r.lhs.to_string() + " -> " + format_poly(r.rhs, order);
}

}  // namespace ncalg

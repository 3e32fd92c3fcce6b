#include "ncalg/order.hpp"

#include "ncalg/error.hpp"

namespace ncalg {

namespace {

// Position of a letter of Y = {e_alpha < e_alphabeta < e_beta}.
int y_rank(GenKind k) {
  switch (k) {
    case GenKind::e_alpha: return 0;
    case GenKind::e_alphabeta: return 1;
    case GenKind::e_beta: return 2;
    default: break;
  }
  throw OrderDomainError("big_ll order is defined on divided-power letters only");
}

std::uint64_t y_weight(GenKind k) { return k == GenKind::e_alphabeta ? 2 : 1; }

}  // namespace

MonomialOrder MonomialOrder::deglex(std::vector<Generator> ranking) {
  MonomialOrder o;
  o.variant_ = Variant::deglex;
  auto table = std::make_shared<std::unordered_map<std::uint64_t, std::uint64_t>>();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (!table->emplace(ranking[i].code(), i).second) {
      throw OrderDomainError("generator " + ranking[i].token() + " ranked twice");
    }
  }
  o.ranking_ = std::move(ranking);
  o.rank_of_ = std::move(table);
  return o;
}

MonomialOrder MonomialOrder::big_ll() {
  MonomialOrder o;
  o.variant_ = Variant::big_ll;
  return o;
}

std::uint64_t MonomialOrder::rank(const Generator& g) const {
  if (variant_ == Variant::big_ll) {
    return 3 * (g.index() - 1) + static_cast<std::uint64_t>(y_rank(g.kind()));
  }
  const auto it = rank_of_->find(g.code());
  if (it == rank_of_->end()) {
    throw OrderDomainError("generator " + g.token() + " is not ranked by this order");
  }
  return it->second;
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  return variant_ == Variant::deglex ? compare_deglex(u, v) : compare_big(u, v);
}

std::strong_ordering MonomialOrder::compare_deglex(const Word& u, const Word& v) const {
  std::uint64_t du = 0;
  std::uint64_t dv = 0;
  for (const auto& g : u) {
    rank(g);
    du += g.degree().norm();
  }
  for (const auto& g : v) {
    rank(g);
    dv += g.degree().norm();
  }
  if (du != dv) return du <=> dv;
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == v[i]) continue;
    return rank(u[i]) <=> rank(v[i]);
  }
  return u.size() <=> v.size();
}

std::strong_ordering MonomialOrder::compare_big(const Word& u, const Word& v) const {
  // Stage 1: deglex on the expansions phi(u), phi(v).
  std::uint64_t du = 0;
  std::uint64_t dv = 0;
  for (const auto& g : u) {
    y_rank(g.kind());
    du += g.index() * y_weight(g.kind());
  }
  for (const auto& g : v) {
    y_rank(g.kind());
    dv += g.index() * y_weight(g.kind());
  }
  if (du != dv) return du <=> dv;

  // Walk both expansions run by run without materialising them.
  std::size_t iu = 0;
  std::size_t iv = 0;
  std::uint64_t left_u = u.empty() ? 0 : u[0].index();
  std::uint64_t left_v = v.empty() ? 0 : v[0].index();
  while (iu < u.size() && iv < v.size()) {
    const int ru = y_rank(u[iu].kind());
    const int rv = y_rank(v[iv].kind());
    if (ru != rv) return ru <=> rv;
    const std::uint64_t step = std::min(left_u, left_v);
    left_u -= step;
    left_v -= step;
    if (left_u == 0 && ++iu < u.size()) left_u = u[iu].index();
    if (left_v == 0 && ++iv < v.size()) left_v = v[iv].index();
  }
  const bool u_done = iu >= u.size();
  const bool v_done = iv >= v.size();
  if (u_done != v_done) return u_done ? std::strong_ordering::less : std::strong_ordering::greater;

  // Stage 2: length.
  if (u.size() != v.size()) return u.size() <=> v.size();

  // Stage 3: lexicographic on the ranking of X.
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    return rank(u[i]) <=> rank(v[i]);
  }
  return std::strong_ordering::equal;
}

Word phi_map(const Word& w) {
  Word out;
  for (const auto& g : w) {
    if (!g.is_divided()) throw DomainError("phi is defined on divided-power letters only");
    Generator unit = g.kind() == GenKind::e_alpha       ? Generator::e_alpha(1)
                     : g.kind() == GenKind::e_alphabeta ? Generator::e_alphabeta(1)
                                                        : Generator::e_beta(1);
    for (std::uint64_t i = 0; i < g.index(); ++i) out.push_back(unit);
  }
  return out;
}

}  // namespace ncalg

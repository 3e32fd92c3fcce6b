#include "ncalg/kostant.hpp"

#include <algorithm>
#include <set>

#include "ncalg/error.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg {

Word DividedMonomial::to_word() const {
  Word w;
  if (ka > 0) w.push_back(Generator::e_alpha(ka));
  if (kab > 0) w.push_back(Generator::e_alphabeta(kab));
  if (kb > 0) w.push_back(Generator::e_beta(kb));
  return w;
}

std::string DividedMonomial::to_string() const {
  return "[" + std::to_string(ka) + "," + std::to_string(kab) + "," + std::to_string(kb) + "]";
}

KostantElement KostantElement::basis(const Field& field, DividedMonomial m) {
  KostantElement x(field);
  x.terms_.emplace(m, field.one());
  return x;
}

Scalar KostantElement::coefficient(const DividedMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void KostantElement::add_term(const DividedMonomial& m, const Scalar& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

KostantElement& KostantElement::operator+=(const KostantElement& g) {
  if (!(field_ == g.field_)) throw FieldMismatch();
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

KostantElement& KostantElement::operator-=(const KostantElement& g) {
  if (!(field_ == g.field_)) throw FieldMismatch();
  for (const auto& [m, c] : g.terms_) add_term(m, field_.neg(c));
  return *this;
}

KostantElement KostantElement::scaled(const Scalar& c) const {
  KostantElement out(field_);
  if (field_.is_zero(c)) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, field_.mul(x, c));
  return out;
}

bool KostantElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Degree d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree() == d; });
}

std::string KostantElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = field_.is_negative(c);
    const Scalar mag = neg ? field_.neg(c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const Word w = m.to_word();
    if (w.empty()) {
      out += field_.to_string(mag);
    } else {
      if (!field_.is_one(mag)) out += field_.to_string(mag) + "*";
      out += w.to_string();
    }
  }
  return out;
}

std::optional<Polynomial> straightening_rule(const Generator& x, const Generator& y,
                                             const Field& field) {
  if (!x.is_divided() || !y.is_divided()) {
    throw DomainError("straightening is defined on divided letters only");
  }
  const std::uint64_t k = x.index();
  const std::uint64_t l = y.index();
  Polynomial out(field);
  if (x.kind() == y.kind()) {
    const Generator merged = x.kind() == GenKind::e_alpha       ? Generator::e_alpha(k + l)
                             : x.kind() == GenKind::e_alphabeta ? Generator::e_alphabeta(k + l)
                                                                : Generator::e_beta(k + l);
    out.add_term(Word(merged), field.binomial(k + l, k));
    return out;
  }
  if (x.kind() == GenKind::e_alphabeta && y.kind() == GenKind::e_alpha) {
    out.add_term(Word{y, x}, field.one());
    return out;
  }
  if (x.kind() == GenKind::e_beta && y.kind() == GenKind::e_alphabeta) {
    out.add_term(Word{y, x}, field.one());
    return out;
  }
  if (x.kind() == GenKind::e_beta && y.kind() == GenKind::e_alpha) {
    for (std::uint64_t j = 0; j <= std::min(k, l); ++j) {
      const DividedMonomial m{l - j, j, k - j};
      out.add_term(m.to_word(), j % 2 == 0 ? field.one() : field.neg(field.one()));
    }
    return out;
  }
  return std::nullopt;
}

KostantElement DividedPowerAlgebra::straighten(const Word& w) {
  if (auto it = straightened_.find(w); it != straightened_.end()) return it->second;
  KostantElement out(field_);
  std::optional<std::size_t> pos;
  std::optional<Polynomial> rhs;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    rhs = straightening_rule(w[i], w[i + 1], field_);
    if (rhs) {
      pos = i;
      break;
    }
  }
  if (!pos) {
    DividedMonomial m;
    for (const auto& g : w) {
      if (!g.is_divided()) throw DomainError("straightening is defined on divided letters only");
      switch (g.kind()) {
        case GenKind::e_alpha: m.ka = g.index(); break;
        case GenKind::e_alphabeta: m.kab = g.index(); break;
        default: m.kb = g.index(); break;
      }
    }
    out.add_term(m, field_.one());
  } else {
    const Word u = w.prefix(*pos);
    const Word v = w.suffix(w.size() - *pos - 2);
    for (const auto& [t, c] : rhs->terms()) out += straighten(u * t * v).scaled(c);
  }
  straightened_.emplace(w, out);
  return out;
}

KostantElement DividedPowerAlgebra::multiply_basis(const DividedMonomial& x,
                                                   const DividedMonomial& y) {
  const auto key = std::make_pair(x, y);
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  KostantElement out = straighten(x.to_word() * y.to_word());
  products_.emplace(key, out);
  return out;
}

KostantElement DividedPowerAlgebra::multiply(const KostantElement& u, const KostantElement& v) {
  if (!(u.field() == field_) || !(v.field() == field_)) throw FieldMismatch();
  KostantElement out(field_);
  for (const auto& [x, c] : u.terms()) {
    for (const auto& [y, d] : v.terms()) {
      out += multiply_basis(x, y).scaled(field_.mul(c, d));
    }
  }
  return out;
}

KostantElement DividedPowerAlgebra::generator(const Generator& g) const {
  switch (g.kind()) {
    case GenKind::a:
      return small_generator(SmallKind::a, static_cast<unsigned>(g.index()), field_);
    case GenKind::b:
      return small_generator(SmallKind::b, static_cast<unsigned>(g.index()), field_);
    case GenKind::e_alpha: return KostantElement::basis(field_, {g.index(), 0, 0});
    case GenKind::e_alphabeta: return KostantElement::basis(field_, {0, g.index(), 0});
    case GenKind::e_beta: return KostantElement::basis(field_, {0, 0, g.index()});
  }
  return KostantElement(field_);
}

KostantElement DividedPowerAlgebra::evaluate(const Word& w) {
  KostantElement acc = KostantElement::one(field_);
  for (const auto& g : w) {
    acc = multiply(acc, generator(g));
    if (acc.is_zero()) break;
  }
  return acc;
}

KostantElement DividedPowerAlgebra::evaluate(const Polynomial& f) {
  KostantElement out(field_);
  for (const auto& [w, c] : f.terms()) out += evaluate(w).scaled(c);
  return out;
}

KostantElement small_generator(SmallKind kind, unsigned k, const Field& field) {
  if (!field.is_prime_field()) throw DomainError("a_k and b_k need a prime characteristic");
  const std::uint64_t n = ipow(field.characteristic(), k);
  return KostantElement::basis(field, kind == SmallKind::a ? DividedMonomial{n, 0, 0}
                                                           : DividedMonomial{0, 0, n});
}

void Window::validate() const {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (j >= m) throw DomainError("window needs j < m");
  if (ipow(p, m) > (1ULL << 20U)) throw DomainError("window too large");
}

std::vector<Generator> small_alphabet(const Window& win) {
  std::vector<Generator> out;
  for (unsigned k = win.j; k < win.m; ++k) {
    out.push_back(Generator::a(k, win.p));
    out.push_back(Generator::b(k, win.p));
  }
  return out;
}

MonomialOrder small_order(const Window& win) { return MonomialOrder::deglex(small_alphabet(win)); }

std::string NamedRelation::name() const {
  std::string s = family + "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + ")";
}

namespace {

Generator letter(SmallKind kind, unsigned k, std::uint32_t p) {
  return kind == SmallKind::a ? Generator::a(k, p) : Generator::b(k, p);
}

Scalar sign(const Field& field, unsigned e) {
  return e % 2 == 0 ? field.one() : field.neg(field.one());
}

}  // namespace

Polynomial skew_one(unsigned k, unsigned l, const Field& field) {
  const std::uint32_t p = field.characteristic();
  const Word ak(Generator::a(k, p));
  const Word al(Generator::a(l, p));
  const Word bk(Generator::b(k, p));
  Polynomial f(field);
  f.add_term(al * bk, field.one());
  f.add_term(bk * al, field.neg(field.one()));
  Word tail = ak.power(p - 1) * bk * ak;
  for (unsigned s = k + 1; s < l; ++s) tail *= Word(Generator::a(s, p)).power(p - 1);
  f.add_term(tail, sign(field, l - k));
  return f;
}

Polynomial skew_two(unsigned k, unsigned l, const Field& field) {
  const std::uint32_t p = field.characteristic();
  const Word ak(Generator::a(k, p));
  const Word bl(Generator::b(l, p));
  const Word bk(Generator::b(k, p));
  Polynomial f(field);
  f.add_term(bl * ak, field.one());
  f.add_term(ak * bl, field.neg(field.one()));
  Word tail = bk * ak * bk.power(p - 1);
  for (unsigned s = k + 1; s < l; ++s) tail *= Word(Generator::b(s, p)).power(p - 1);
  f.add_term(tail, field.neg(sign(field, l - k)));
  return f;
}

Polynomial commutator(SmallKind kind, unsigned k, unsigned l, const Field& field) {
  const std::uint32_t p = field.characteristic();
  const Word xk(letter(kind, k, p));
  const Word xl(letter(kind, l, p));
  Polynomial f(field);
  f.add_term(xl * xk, field.one());
  f.add_term(xk * xl, field.neg(field.one()));
  return f;
}

Polynomial braid(unsigned k, const Field& field) {
  const std::uint32_t p = field.characteristic();
  const Word ak(Generator::a(k, p));
  const Word bk(Generator::b(k, p));
  Polynomial f(field);
  f.add_term((bk * ak).power(p), field.one());
  f.add_term((ak * bk).power(p), field.neg(field.one()));
  return f;
}

Polynomial nilpotent(SmallKind kind, unsigned k, const Field& field) {
  const std::uint32_t p = field.characteristic();
  return Polynomial::monomial(field, Word(letter(kind, k, p)).power(p));
}

Polynomial serre(SmallKind kind, unsigned k, const Field& field) {
  const std::uint32_t p = field.characteristic();
  const Word ak(Generator::a(k, p));
  const Word bk(Generator::b(k, p));
  Polynomial f(field);
  const Scalar two = field.neg(field.from_int(2));
  if (kind == SmallKind::b) {
    f.add_term(bk * bk * ak, field.one());
    f.add_term(bk * ak * bk, two);
    f.add_term(ak * bk * bk, field.one());
  } else {
    f.add_term(bk * ak * ak, field.one());
    f.add_term(ak * bk * ak, two);
    f.add_term(ak * ak * bk, field.one());
  }
  return f;
}

std::vector<NamedRelation> small_relations(const Window& win) {
  win.validate();
  const Field field = win.field();
  std::vector<NamedRelation> out;
  for (unsigned k = win.j; k < win.m; ++k) {
    for (unsigned l = k + 1; l < win.m; ++l) {
      out.push_back({"skew_one", {k, l}, skew_one(k, l, field)});
      out.push_back({"skew_two", {k, l}, skew_two(k, l, field)});
      out.push_back({"commute_a", {k, l}, commutator(SmallKind::a, k, l, field)});
      out.push_back({"commute_b", {k, l}, commutator(SmallKind::b, k, l, field)});
    }
  }
  for (unsigned k = win.j; k < win.m; ++k) {
    out.push_back({"braid", {k}, braid(k, field)});
    out.push_back({"nilpotent_a", {k}, nilpotent(SmallKind::a, k, field)});
    out.push_back({"nilpotent_b", {k}, nilpotent(SmallKind::b, k, field)});
    if (win.p >= 3) {
      out.push_back({"serre_b", {k}, serre(SmallKind::b, k, field)});
      out.push_back({"serre_a", {k}, serre(SmallKind::a, k, field)});
    }
  }
  return out;
}

RewriteSystem small_groebner_basis(const Window& win) {
  win.validate();
  const Field field = win.field();
  DividedPowerAlgebra alg(field);
  RewriteSystem sys(field, small_order(win));
  for (const auto& rel : small_relations(win)) {
    const KostantElement residual = alg.evaluate(rel.poly);
    if (!residual.is_zero()) {
      throw OracleViolation("relation " + rel.name() + " evaluates to " + residual.to_string());
    }
    sys.add_polynomial(rel.poly);
  }
  return sys;
}

std::vector<RelationCheck> relation_suite(const Window& win,
                                          const std::optional<RelationMutation>& mutation) {
  win.validate();
  const Field field = win.field();
  DividedPowerAlgebra alg(field);
  std::vector<RelationCheck> out;
  bool mutated = false;
  for (auto rel : small_relations(win)) {
    if (mutation && !mutated && rel.family == mutation->family) {
      const auto terms = sorted_terms(rel.poly, small_order(win));
      const Term& t = terms.at(mutation->term % terms.size());
      rel.poly.add_term(t.word, field.neg(field.add(t.coefficient, t.coefficient)));
      mutated = true;
    }
    KostantElement residual = alg.evaluate(rel.poly);
    const bool pass = residual.is_zero();
    out.push_back({rel.name(), pass, std::move(residual)});
  }
  // e_alphabeta^(p^l) recovered from b_l a_l.
  for (unsigned l = win.j; l < win.m; ++l) {
    const std::uint64_t n = ipow(win.p, l);
    KostantElement rhs = alg.evaluate(Word{Generator::b(l, win.p), Generator::a(l, win.p)});
    for (std::uint64_t j = 0; j < n; ++j) {
      rhs -= KostantElement::basis(field, {n - j, j, n - j}).scaled(sign(field, static_cast<unsigned>(j % 2)));
    }
    rhs = rhs.scaled(sign(field, static_cast<unsigned>(n % 2)));
    KostantElement residual = KostantElement::basis(field, {0, n, 0});
    residual -= rhs;
    const bool pass = residual.is_zero();
    out.push_back({"betaalpha(" + std::to_string(l) + ")", pass, std::move(residual)});
  }
  return out;
}

DimensionReport dimension_check(const Window& win) {
  const RewriteSystem g = small_groebner_basis(win);
  const Field field = win.field();
  DividedPowerAlgebra alg(field);
  const auto words = irreducible_words(g);
  DimensionReport rep;
  rep.expected = ipow(ipow(win.p, win.width()), 3);
  rep.irreducible_count = words.size();

  std::map<Degree, std::vector<KostantElement>> by_degree;
  for (const auto& w : words) by_degree[w.degree()].push_back(alg.evaluate(w));
  for (const auto& [deg, images] : by_degree) {
    std::set<DividedMonomial> support;
    for (const auto& x : images) {
      for (const auto& [m, c] : x.terms()) support.insert(m);
    }
    const std::vector<DividedMonomial> cols(support.begin(), support.end());
    Matrix mat(field, images.size(), cols.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) mat.set(i, j, images[i].coefficient(cols[j]));
    }
    rep.basis_count += mat.rank();
  }
  return rep;
}

std::vector<Generator> divided_alphabet(std::uint64_t bound) {
  std::vector<Generator> out;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    out.push_back(Generator::e_alpha(k));
    out.push_back(Generator::e_alphabeta(k));
    out.push_back(Generator::e_beta(k));
  }
  return out;
}

RewriteSystem big_rewrite_system(const Field& field, std::uint64_t bound) {
  const auto letters = divided_alphabet(bound);
  RewriteSystem sys(field, MonomialOrder::big_ll(), letters);
  DividedPowerAlgebra alg(field);
  for (const auto& x : letters) {
    for (const auto& y : letters) {
      auto rhs = straightening_rule(x, y, field);
      if (!rhs) continue;
      const KostantElement lhs_value = alg.multiply(alg.generator(x), alg.generator(y));
      KostantElement rhs_value(field);
      for (const auto& [w, c] : rhs->terms()) {
        KostantElement t = KostantElement::one(field);
        for (const auto& g : w) t = alg.multiply(t, alg.generator(g));
        rhs_value += t.scaled(c);
      }
      if (!(lhs_value == rhs_value)) {
        throw OracleViolation("rule for " + Word{x, y}.to_string() + " disagrees with multiplication");
      }
      sys.add_rule({Word{x, y}, std::move(*rhs)});
    }
  }
  return sys;
}

}  // namespace ncalg

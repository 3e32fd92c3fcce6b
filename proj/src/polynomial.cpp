#include "ncalg/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "ncalg/error.hpp"

namespace ncalg {

Polynomial Polynomial::monomial(const Field& field, Word w) {
  return monomial(field, std::move(w), field.one());
}

Polynomial Polynomial::monomial(const Field& field, Word w, const Scalar& c) {
  Polynomial f(field);
  f.add_term(std::move(w), c);
  return f;
}

Polynomial Polynomial::constant(const Field& field, std::int64_t c) {
  return monomial(field, Word{}, field.from_int(c));
}

Scalar Polynomial::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::vector<Word> Polynomial::support() const {
  std::vector<Word> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

void Polynomial::add_term(Word&& w, const Scalar& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

void Polynomial::check_field(const Polynomial& g) const {
  if (!(field_ == g.field_)) throw FieldMismatch();
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_field(g);
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_field(g);
  for (const auto& [w, c] : g.terms_) add_term(w, field_.neg(c));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, field_.neg(c));
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(field_);
  if (field_.is_zero(c)) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, field_.mul(x, c));
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_field(g);
  Polynomial r(f.field_);
  for (const auto& [u, x] : f.terms_) {
    for (const auto& [v, y] : g.terms_) r.add_term(u * v, f.field_.mul(x, y));
  }
  return r;
}

Polynomial Polynomial::sandwich(const Word& u, const Word& v) const {
  Polynomial r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(u * w * v, c);
  return r;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Degree d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree() == d; });
}

Degree Polynomial::degree() const {
  if (terms_.empty()) throw EmptyPolynomial();
  return terms_.begin()->first.degree();
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw EmptyPolynomial();
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& [w, c] : f.terms()) out.push_back({w, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return order.less(y.word, x.word); });
  return out;
}

std::string format_poly(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  const Field& k = f.field();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : sorted_terms(f, order)) {
    const bool negative = k.is_negative(c);
    const Scalar magnitude = negative ? k.neg(c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += k.to_string(magnitude);
    } else {
      if (!k.is_one(magnitude)) out += k.to_string(magnitude) + "*";
      out += w.to_string();
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  Polynomial poly() {
    Polynomial f(field_);
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    term_into(f, negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      term_into(f, op == '-');
    }
    return f;
  }

  Word word_only() {
    skip_ws();
    if (peek() == 'e' && (pos_ + 1 >= text_.size() || !std::isalpha(text_[pos_ + 1]))) {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("trailing input");
      return {};
    }
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("trailing input");
      return {};
    }
    Word w = word();
    skip_ws();
    if (!at_end()) fail("trailing input");
    return w;
  }

 private:
  void term_into(Polynomial& f, bool negative) {
    skip_ws();
    Scalar c = field_.one();
    Word w;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = field_.from_mpz(integer());
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        w = word();
      }
    } else {
      w = word();
    }
    if (negative) c = field_.neg(c);
    f.add_term(std::move(w), c);
  }

  Word word() {
    Word w;
    w.push_back(generator());
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      w.push_back(generator());
    }
    return w;
  }

  Generator generator() {
    skip_ws();
    const std::size_t start = pos_;
    if (consume("eab(")) return divided(GenKind::e_alphabeta, start);
    if (consume("ea(")) return divided(GenKind::e_alpha, start);
    if (consume("eb(")) return divided(GenKind::e_beta, start);
    const char c = peek();
    if (c == 'a' || c == 'b') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected subscript");
      const auto k = integer();
      if (!field_.is_prime_field()) {
        pos_ = start;
        fail("generators a_k/b_k need a prime characteristic");
      }
      if (!k.fits_uint_p() || k > 40) {
        pos_ = start;
        fail("subscript out of range");
      }
      const auto idx = static_cast<unsigned>(k.get_ui());
      return c == 'a' ? Generator::a(idx, field_.characteristic())
                      : Generator::b(idx, field_.characteristic());
    }
    fail("unknown generator");
  }

  Generator divided(GenKind kind, std::size_t start) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected divided power");
    const auto k = integer();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    if (k == 0 || !k.fits_ulong_p()) {
      pos_ = start;
      fail("divided power must be a positive integer");
    }
    const auto idx = k.get_ui();
    switch (kind) {
      case GenKind::e_alpha: return Generator::e_alpha(idx);
      case GenKind::e_alphabeta: return Generator::e_alphabeta(idx);
      default: return Generator::e_beta(idx);
    }
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  bool consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Field& field) {
  return Parser(text, field).poly();
}

Word parse_word(std::string_view text, const Field& field) {
  return Parser(text, field).word_only();
}

}  // namespace ncalg

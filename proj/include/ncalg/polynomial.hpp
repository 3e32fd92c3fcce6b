#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncalg/field.hpp"
#include "ncalg/order.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// An element of the free associative algebra K<X*>.
///
/// Terms are keyed by the structural word order, so equality does not
/// depend on any monomial order; leading terms are extracted against an
/// explicit MonomialOrder. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Word, Scalar>;

  explicit Polynomial(Field field = Field::rationals()) : field_(field) {}
  static Polynomial monomial(const Field& field, Word w);
  static Polynomial monomial(const Field& field, Word w, const Scalar& c);
  static Polynomial constant(const Field& field, std::int64_t c);

  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of w (zero when w is not in the support).
  Scalar coefficient(const Word& w) const;
  std::vector<Word> support() const;

  /// Adds c * w in place.
  void add_term(const Word& w, const Scalar& c);
  void add_term(Word&& w, const Scalar& c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  /// Multiplication in K<X*>: words concatenate.
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  /// u * f * v for words u, v.
  Polynomial sandwich(const Word& u, const Word& v) const;

  /// True when all terms share one degree.
  bool is_homogeneous() const;
  /// Common degree of the terms; precondition: nonzero and homogeneous.
  Degree degree() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.field_ == g.field_ && f.terms_ == g.terms_;
  }

 private:
  void check_field(const Polynomial& g) const;

  Field field_;
  TermMap terms_;
};

struct Term {
  Word word;
  Scalar coefficient;
};

/// Order-maximal term. Throws EmptyPolynomial on zero.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

/// Terms in descending order.
std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order);

/// Text form, terms in descending order; parse_poly(format_poly(f)) == f.
std::string format_poly(const Polynomial& f, const MonomialOrder& order);

/// Grammar:
///   poly := ['-'] term (('+'|'-') term)*
///   term := [int '*'] word | int
///   word := gen ('*' gen)*
///   gen  := 'a' nat | 'b' nat | 'ea(' nat ')' | 'eab(' nat ')' | 'eb(' nat ')'
/// Whitespace is insignificant. a/b letters take their degree from the
/// field characteristic, so char 0 accepts divided letters only.
/// Throws ParseError with the offending position.
Polynomial parse_poly(std::string_view text, const Field& field);

/// Parses a single word ("e" or "1" is the empty word).
Word parse_word(std::string_view text, const Field& field);

}  // namespace ncalg

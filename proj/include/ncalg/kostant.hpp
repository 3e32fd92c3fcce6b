#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncalg/field.hpp"
#include "ncalg/order.hpp"
#include "ncalg/polynomial.hpp"
#include "ncalg/rewriting.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// PBW basis word e_alpha^(ka) e_alphabeta^(kab) e_beta^(kb).
struct DividedMonomial {
  std::uint64_t ka = 0;
  std::uint64_t kab = 0;
  std::uint64_t kb = 0;

  Degree degree() const { return {ka + kab, kab + kb}; }
  /// The word over divided letters; zero exponents are omitted.
  Word to_word() const;
  std::string to_string() const;

  friend auto operator<=>(const DividedMonomial&, const DividedMonomial&) = default;
};

/// An element of the Kostant form, as coordinates in the PBW basis.
class KostantElement {
 public:
  using TermMap = std::map<DividedMonomial, Scalar>;

  explicit KostantElement(Field field) : field_(field) {}
  static KostantElement basis(const Field& field, DividedMonomial m);
  static KostantElement one(const Field& field) { return basis(field, {}); }

  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const DividedMonomial& m) const;

  void add_term(const DividedMonomial& m, const Scalar& c);
  KostantElement& operator+=(const KostantElement& g);
  KostantElement& operator-=(const KostantElement& g);
  KostantElement scaled(const Scalar& c) const;

  bool is_homogeneous() const;
  std::string to_string() const;

  friend bool operator==(const KostantElement& x, const KostantElement& y) {
    return x.field_ == y.field_ && x.terms_ == y.terms_;
  }

 private:
  Field field_;
  TermMap terms_;
};

/// Multiplication in the Kostant form by straightening words of divided
/// letters with the rule table
///   e_w^(k) e_w^(l)        -> C(k+l,k) e_w^(k+l)               w = alpha, alphabeta, beta
///   e_ab^(k) e_a^(l)       -> e_a^(l) e_ab^(k)
///   e_b^(k) e_a^(l)        -> sum_j (-1)^j e_a^(l-j) e_ab^(j) e_b^(k-j)
///   e_b^(k) e_ab^(l)       -> e_ab^(l) e_b^(k)
/// Straightened words and basis products are cached, so an instance is not
/// thread-safe.
class DividedPowerAlgebra {
 public:
  explicit DividedPowerAlgebra(Field field) : field_(field) {}
  const Field& field() const { return field_; }

  KostantElement multiply(const KostantElement& u, const KostantElement& v);
  KostantElement multiply_basis(const DividedMonomial& x, const DividedMonomial& y);
  /// Straightens a word of divided letters into the PBW basis.
  KostantElement straighten(const Word& w);

  /// Image of a_k, b_k or a divided letter.
  KostantElement generator(const Generator& g) const;
  /// The algebra map from the free algebra: words multiply out letter by letter.
  KostantElement evaluate(const Word& w);
  KostantElement evaluate(const Polynomial& f);

 private:
  Field field_;
  std::unordered_map<Word, KostantElement, WordHash> straightened_;
  std::map<std::pair<DividedMonomial, DividedMonomial>, KostantElement> products_;
};

/// The right-hand side of the rule table for an adjacent pair xy of divided
/// letters, as (coefficient, word) terms; nullopt when xy is in PBW order.
std::optional<Polynomial> straightening_rule(const Generator& x, const Generator& y,
                                             const Field& field);

enum class SmallKind { a, b };

/// a_k = e_alpha^(p^k), b_k = e_beta^(p^k).
KostantElement small_generator(SmallKind kind, unsigned k, const Field& field);

/// Generator indices j <= k <= m - 1 over F_p.
struct Window {
  std::uint32_t p = 2;
  unsigned j = 0;
  unsigned m = 1;

  /// Throws DomainError unless p is prime and j < m.
  void validate() const;
  Field field() const { return Field::prime(p); }
  unsigned width() const { return m - j; }
};

/// a_j < b_j < a_{j+1} < ... < b_{m-1}.
std::vector<Generator> small_alphabet(const Window& win);
MonomialOrder small_order(const Window& win);

struct NamedRelation {
  std::string family;
  std::vector<unsigned> indices;
  Polynomial poly;

  std::string name() const;
};

/// a_l b_k - b_k a_l + (-1)^(l-k) a_k^(p-1) b_k a_k a_{k+1}^(p-1) ... a_{l-1}^(p-1).
Polynomial skew_one(unsigned k, unsigned l, const Field& field);
/// b_l a_k - a_k b_l - (-1)^(l-k) b_k a_k b_k^(p-1) b_{k+1}^(p-1) ... b_{l-1}^(p-1).
Polynomial skew_two(unsigned k, unsigned l, const Field& field);
/// a_l a_k - a_k a_l, or the b version.
Polynomial commutator(SmallKind kind, unsigned k, unsigned l, const Field& field);
/// (b_k a_k)^p - (a_k b_k)^p.
Polynomial braid(unsigned k, const Field& field);
Polynomial nilpotent(SmallKind kind, unsigned k, const Field& field);
/// b_k^2 a_k - 2 b_k a_k b_k + a_k b_k^2 (kind b) and
/// b_k a_k^2 - 2 a_k b_k a_k + a_k^2 b_k (kind a); p >= 3.
Polynomial serre(SmallKind kind, unsigned k, const Field& field);

/// The relation families spanning G_m on the window, in a fixed order.
std::vector<NamedRelation> small_relations(const Window& win);

/// G_{jm}: monic rules under the small order. Every relation is checked by
/// evaluation first; a failure throws OracleViolation naming it.
RewriteSystem small_groebner_basis(const Window& win);

struct RelationCheck {
  std::string relation;
  bool pass = false;
  KostantElement residual;
};

/// Mutation applied to the relation list before checking.
struct RelationMutation {
  std::string family;
  /// Index of the term whose coefficient changes sign.
  std::size_t term = 0;
};

/// Evaluates every relation family on the window and the expression of
/// e_alphabeta^(p^l) through b_l a_l. Failures are reported, not thrown.
std::vector<RelationCheck> relation_suite(const Window& win,
                                          const std::optional<RelationMutation>& mutation = {});

struct DimensionReport {
  std::uint64_t expected = 0;
  /// Rank of the oracle images of the irreducible words.
  std::uint64_t basis_count = 0;
  std::uint64_t irreducible_count = 0;

  bool pass() const { return expected == basis_count && basis_count == irreducible_count; }
};

DimensionReport dimension_check(const Window& win);

/// Rules of the divided-power system for letters with index <= bound under
/// the big_ll order. Over F_p coefficients C(k+l,k) may vanish, giving
/// rules with rhs 0. Every rule is checked against DividedPowerAlgebra;
/// a mismatch throws OracleViolation.
RewriteSystem big_rewrite_system(const Field& field, std::uint64_t bound);

/// e_alpha^(k), e_alphabeta^(k), e_beta^(k) for k <= bound, by rank.
std::vector<Generator> divided_alphabet(std::uint64_t bound);

}  // namespace ncalg

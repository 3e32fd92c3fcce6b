#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncalg/field.hpp"
#include "ncalg/order.hpp"
#include "ncalg/polynomial.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// lhs -> rhs, every monomial of rhs strictly below lhs.
struct RewriteRule {
  Word lhs;
  Polynomial rhs;

  /// lhs - rhs.
  Polynomial as_polynomial() const;
};

/// lhs = lm(p), rhs = (lt(p) - p) / lc(p). Throws EmptyPolynomial on zero.
RewriteRule rule_from_poly(const Polynomial& p, const MonomialOrder& order);

struct Redex {
  std::size_t rule = 0;
  std::size_t position = 0;
};

/// A finite set of rewriting rules over one field, one monomial order and
/// one finite alphabet. Rule lhs words are indexed by a trie.
class RewriteSystem {
 public:
  /// The alphabet defaults to the ranking of a deglex order.
  RewriteSystem(Field field, MonomialOrder order);
  RewriteSystem(Field field, MonomialOrder order, std::vector<Generator> alphabet);

  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Generator>& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// Throws InvariantViolation when some rhs monomial is not below lhs,
  /// when lhs is already present, or when lhs is empty.
  void add_rule(RewriteRule rule);
  /// Adds rule_from_poly(p).
  void add_polynomial(const Polynomial& p);

  std::optional<std::size_t> find_rule(const Word& lhs) const;
  /// Leftmost occurrence of any lhs; at that position the longest lhs.
  std::optional<Redex> find_redex(const Word& w) const;
  /// Rightmost starting occurrence; at that position the shortest lhs.
  std::optional<Redex> find_last_redex(const Word& w) const;
  bool is_irreducible(const Word& w) const { return !find_redex(w).has_value(); }
  /// True if some lhs occurs as a suffix of w.
  bool has_suffix_redex(const Word& w) const;

  /// Rules sorted by lhs, descending in the order.
  std::vector<RewriteRule> sorted_rules() const;

  /// Longest lhs length.
  std::size_t max_lhs_length() const { return max_lhs_; }

 private:
  struct Node {
    std::unordered_map<std::uint64_t, std::uint32_t> next;
    std::optional<std::size_t> rule;
  };
  void index_rule(std::size_t i);

  Field field_;
  MonomialOrder order_;
  std::vector<Generator> alphabet_;
  std::vector<RewriteRule> rules_;
  std::vector<Node> trie_{Node{}};
  std::size_t max_lhs_ = 0;
};

/// One rewriting step applied to the order-greatest reducible monomial of g
/// at its leftmost redex. nullopt when g is irreducible.
std::optional<Polynomial> reduce_once(const Polynomial& g, const RewriteSystem& sys);

/// NF(f): repeatedly rewrites the order-greatest reducible monomial.
Polynomial normal_form(const Polynomial& f, const RewriteSystem& sys);
Polynomial normal_form(const Word& w, const RewriteSystem& sys);

/// Normal forms of words, memoised. Reduces at the rightmost redex and
/// recurses on the resulting monomials, a different strategy from
/// normal_form. Holds a reference to sys.
class MemoReducer {
 public:
  explicit MemoReducer(const RewriteSystem& sys) : sys_(sys) {}
  const Polynomial& word_nf(const Word& w);
  Polynomial nf(const Polynomial& f);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  const RewriteSystem& sys_;
  std::unordered_map<Word, Polynomial, WordHash> cache_;
};

/// Witness of an overlap of two words m1, m2. Proper overlaps satisfy
/// tip = m1 * v = u * m2 with u, v nonempty; containment satisfies
/// tip = m2 = u * m1 * v.
struct Overlap {
  Word tip;
  Word u;
  Word v;
  bool containment = false;
};

/// All proper overlaps of m1 followed by m2 and all occurrences of m1 as a
/// factor of m2 (excluding m1 == m2 at offset 0).
std::vector<Overlap> find_overlaps(const Word& m1, const Word& m2);

struct CriticalPair {
  Overlap overlap;
  std::size_t rule1 = 0;
  std::size_t rule2 = 0;

  const Word& tip() const { return overlap.tip; }
};

/// Union of find_overlaps over ordered rule pairs, deduplicated by
/// (tip, rule1, rule2).
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys);

/// rhs1 * v - u * rhs2 (proper overlap) or u * rhs1 * v - rhs2 (containment).
Polynomial s_polynomial(const CriticalPair& cp, const RewriteSystem& sys);

bool pair_is_reducible(const CriticalPair& cp, const RewriteSystem& sys);

struct CompletenessFailure {
  Word tip;
  std::size_t rule1 = 0;
  std::size_t rule2 = 0;
  Polynomial residual;
};

struct CompletenessCertificate {
  bool complete = true;
  std::size_t pairs_checked = 0;
  std::vector<CompletenessFailure> failures;
};

/// Checks every critical pair whose tip has Deg <= tip_bound.
CompletenessCertificate is_complete(
    const RewriteSystem& sys,
    std::uint64_t tip_bound = std::numeric_limits<std::uint64_t>::max());

/// No rule's lhs or rhs monomial contains another rule's lhs.
bool is_reduced(const RewriteSystem& sys);

/// R(Y): the rules whose lhs lies in Y*. Throws HypothesisViolation if such
/// a rule has a rhs monomial outside Y*.
RewriteSystem restrict_to_subalphabet(const RewriteSystem& sys,
                                      const std::vector<Generator>& letters);

/// Irreducible words of Deg <= deg_bound, in the order found by a
/// depth-first walk. With the default bound the walk only terminates when
/// the irreducible set is finite.
std::vector<Word> irreducible_words(
    const RewriteSystem& sys,
    std::uint64_t deg_bound = std::numeric_limits<std::uint64_t>::max());

/// Bounded completion: adds rules from nonzero S-polynomial residuals until
/// every critical pair with tip Deg <= deg_bound is reducible, then
/// interreduces.
RewriteSystem complete(const RewriteSystem& sys, std::uint64_t deg_bound);

/// Reduced system spanning the same ideal as polys (lhs pairwise
/// incomparable, rhs irreducible).
RewriteSystem interreduce(const RewriteSystem& sys);

std::string format_rule(const RewriteRule& r, const MonomialOrder& order);

}  // namespace ncalg

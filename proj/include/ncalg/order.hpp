#pragma once

#include <compare>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ncalg/word.hpp"

namespace ncalg {

/// A monomial order on words.
///
/// Two variants are supported:
///  - deglex: compare total degree (the norm of the grading, so a_k weighs
///    p^k), then lexicographically by an explicit generator ranking;
///  - big_ll: the order used for divided powers. Words are compared first by
///    their expansion e_omega^(k) -> e_omega^k, deglex on {e_alpha <
///    e_alphabeta < e_beta}, then by length, then lexicographically by the
///    ranking e_alpha < e_alphabeta < e_beta < e_alpha^(2) < ... .
///
/// Both are total, monoidal, artinian and refine the factor order.
class MonomialOrder {
 public:
  enum class Variant { deglex, big_ll };

  /// deglex with ranking[0] < ranking[1] < ... .
  static MonomialOrder deglex(std::vector<Generator> ranking);
  static MonomialOrder big_ll();

  Variant variant() const { return variant_; }
  const std::vector<Generator>& ranking() const { return ranking_; }

  /// Throws OrderDomainError when a letter is not ranked by this order.
  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

  /// Rank of a single generator; throws OrderDomainError if unranked.
  std::uint64_t rank(const Generator& g) const;

 private:
  MonomialOrder() = default;
  std::strong_ordering compare_deglex(const Word& u, const Word& v) const;
  std::strong_ordering compare_big(const Word& u, const Word& v) const;

  Variant variant_ = Variant::deglex;
  std::vector<Generator> ranking_;
  std::shared_ptr<const std::unordered_map<std::uint64_t, std::uint64_t>> rank_of_;
};

/// Expands divided letters: e_omega^(k) -> e_omega^k (each output letter
/// has index 1). Throws DomainError on a/b letters.
Word phi_map(const Word& w);

/// Comparator adaptor for ordered containers: descending by the order.
struct DescendingBy {
  const MonomialOrder* order;
  bool operator()(const Word& u, const Word& v) const { return order->less(v, u); }
};

}  // namespace ncalg

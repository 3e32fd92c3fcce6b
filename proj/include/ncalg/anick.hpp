#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncalg/field.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/polynomial.hpp"
#include "ncalg/rewriting.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// A minimal-overlap tip w = m1 * v = u * m2 with m1, m2 in T1.
struct Chain2 {
  Word tip;
  Word m1;
  Word v;
  Word u;
  Word m2;
};

/// Lhs words of a reduced system, ascending in its order. Throws
/// InvariantViolation if they do not form an anti-chain.
std::vector<Word> t1_set(const RewriteSystem& sys);

/// Tips of minimal overlaps of T1 with their decompositions, ascending.
/// Throws InvariantViolation if a tip has two decompositions.
std::vector<Chain2> t2_set(const RewriteSystem& sys);

std::vector<std::pair<Word, Degree>> degree_table(const std::vector<Word>& chains);

/// Pairs (w1, w2) in T1 x T2 with deg w1 = deg w2.
std::vector<std::pair<Word, Word>> matches_w(const std::vector<Word>& t1,
                                             const std::vector<Chain2>& t2);

/// K-basis element m.t of a free module: m an irreducible word, t a chain.
struct BasisElement {
  Word m;
  Word t;

  Degree degree() const { return m.degree() + t.degree(); }
  std::string to_string() const { return m.to_string() + "." + t.to_string(); }
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// Order on basis elements: compare m*t, then t, then m.
std::strong_ordering compare_basis(const BasisElement& x, const BasisElement& y,
                                   const MonomialOrder& order);

/// Element of a free module with basis {m.t}.
class ModuleElement {
 public:
  using TermMap = std::map<BasisElement, Scalar>;

  explicit ModuleElement(Field field) : field_(field) {}
  static ModuleElement basis(const Field& field, BasisElement b);
  static ModuleElement basis(const Field& field, const Word& m, const Word& t) {
    return basis(field, BasisElement{m, t});
  }

  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const BasisElement& b) const;
  /// Sum of the terms with chain t, as a polynomial in m.
  Polynomial coordinate(const Word& t) const;

  void add_term(const BasisElement& b, const Scalar& c);
  ModuleElement& operator+=(const ModuleElement& g);
  ModuleElement& operator-=(const ModuleElement& g);
  ModuleElement scaled(const Scalar& c) const;

  std::pair<BasisElement, Scalar> leading_term(const MonomialOrder& order) const;
  std::string to_string(const MonomialOrder& order) const;

  friend bool operator==(const ModuleElement& x, const ModuleElement& y) {
    return x.field_ == y.field_ && x.terms_ == y.terms_;
  }

 private:
  Field field_;
  TermMap terms_;
};

/// Matrix of a graded map in one degree. Row i is the image of rows[i]
/// expressed in the basis cols.
struct GradedMatrix {
  Degree degree;
  std::vector<BasisElement> rows;
  std::vector<BasisElement> cols;
  Matrix matrix;

  std::size_t rank() const { return matrix.rank(); }
};

/// The first four terms P_{-1} <- P_0 <- P_1 <- P_2 of the Anick resolution
/// of the trivial module over A = K<X>/(G). Normal forms, differentials and
/// products are cached; not thread-safe.
class AnickResolution {
 public:
  /// sys must be reduced and complete (checked).
  explicit AnickResolution(const RewriteSystem& sys);
  AnickResolution(const AnickResolution&) = delete;
  AnickResolution& operator=(const AnickResolution&) = delete;

  const RewriteSystem& system() const { return sys_; }
  const Field& field() const { return sys_.field(); }
  const MonomialOrder& order() const { return sys_.order(); }

  /// Chains of level n in {-1, 0, 1, 2}: {e}, letters, T1, T2 tips.
  const std::vector<Word>& chains(int n) const;
  const std::vector<Chain2>& t2() const { return t2_; }
  const Chain2& t2_decomposition(const Word& tip) const;

  const Polynomial& nf(const Word& w);

  /// delta_n : P_n -> P_{n-1}, n in {0, 1, 2}.
  ModuleElement delta(int n, const BasisElement& b);
  /// j_n : P_{n-1} -> P_n, n in {0, 1, 2}; zero when no factorisation exists.
  ModuleElement jmap(int n, const BasisElement& b);

  /// d_n(.t), cached.
  const ModuleElement& differential(int n, const Word& t);
  /// d_n extended A-linearly.
  ModuleElement apply_d(int n, const ModuleElement& f);
  /// i_n(f) for f in ker d_{n-1}, n in {0, 1}. Throws InvariantViolation
  /// when j_n(lt(f)) vanishes or the step budget runs out.
  ModuleElement splitting(int n, ModuleElement f);

  /// a * f with coefficients brought to normal form.
  ModuleElement act(const Word& a, const ModuleElement& f);
  ModuleElement act(const Polynomial& a, const ModuleElement& f);
  /// epsilon on P_{-1}: the coefficient of e.e.
  Scalar augmentation(const ModuleElement& f) const;

  /// Irreducible words of Deg <= bound, grouped by degree.
  const std::map<Degree, std::vector<Word>>& irreducible_by_degree(std::uint64_t bound);
  /// The K-basis of P_n in degree d (needs irreducible_by_degree(>= |d|)).
  std::vector<BasisElement> graded_basis(const std::vector<Word>& chains, Degree d);

  /// Matrix of the A-linear map sending .t to image(t), in degree d.
  GradedMatrix graded_matrix(const std::vector<Word>& domain, const std::vector<Word>& codomain,
                             Degree d, const std::function<ModuleElement(const Word&)>& image);
  GradedMatrix d_matrix(int n, Degree d);

  /// All degrees of Deg <= bound carrying a nonzero component of some P_n.
  std::vector<Degree> degrees(std::uint64_t bound);

 private:
  std::uint64_t step_budget(int n, const ModuleElement& f);

  RewriteSystem sys_;
  MemoReducer reducer_;
  std::vector<Word> chains_[4];
  std::vector<Chain2> t2_;
  std::map<Word, std::size_t> t2_index_;
  std::map<std::pair<int, Word>, ModuleElement> d_cache_;
  std::unordered_map<Word, Polynomial, WordHash> product_cache_;
  std::map<Degree, std::vector<Word>> irreducible_;
  std::uint64_t irreducible_bound_ = 0;
  bool irreducible_ready_ = false;
  std::map<std::uint64_t, std::uint64_t> budget_cache_;
};

struct ComplexReport {
  bool eps_d0 = true;
  bool d0_d1 = true;
  bool d1_d2 = true;
  std::size_t chains_checked = 0;
  std::vector<std::string> failures;

  bool pass() const { return eps_d0 && d0_d1 && d1_d2; }
};

/// epsilon d_0 = 0, d_0 d_1 = 0, d_1 d_2 = 0 on all chains with Deg <= bound.
ComplexReport complex_check(AnickResolution& res, std::uint64_t deg_bound);

struct DegreeExactness {
  Degree degree;
  std::size_t dim_pm1 = 0;
  std::size_t dim_p0 = 0;
  std::size_t dim_p1 = 0;
  std::size_t dim_p2 = 0;
  std::size_t rank_eps = 0;
  std::size_t rank_d0 = 0;
  std::size_t rank_d1 = 0;
  std::size_t rank_d2 = 0;

  /// ker epsilon = im d_0, ker d_0 = im d_1, ker d_1 = im d_2.
  bool exact_pm1() const { return dim_pm1 - rank_eps == rank_d0; }
  bool exact_p0() const { return dim_p0 - rank_d0 == rank_d1; }
  bool exact_p1() const { return dim_p1 - rank_d1 == rank_d2; }
  bool pass() const { return exact_pm1() && exact_p0() && exact_p1(); }
};

struct ExactnessReport {
  std::vector<DegreeExactness> degrees;
  bool pass() const;
};

ExactnessReport exactness_check(AnickResolution& res, std::uint64_t deg_bound);

}  // namespace ncalg

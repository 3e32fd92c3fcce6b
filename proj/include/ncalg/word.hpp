#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncalg {

/// An element k_alpha * alpha + k_beta * beta of the grading monoid.
struct Degree {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  /// Total norm alpha + beta.
  std::uint64_t norm() const { return alpha + beta; }
  bool is_zero() const { return alpha == 0 && beta == 0; }

  friend Degree operator+(Degree x, Degree y) {
    return {x.alpha + y.alpha, x.beta + y.beta};
  }
  Degree& operator+=(Degree y) {
    alpha += y.alpha;
    beta += y.beta;
    return *this;
  }
  /// Componentwise x >= y.
  bool dominates(Degree y) const { return alpha >= y.alpha && beta >= y.beta; }
  /// Precondition: dominates(y).
  Degree minus(Degree y) const { return {alpha - y.alpha, beta - y.beta}; }

  friend auto operator<=>(const Degree&, const Degree&) = default;
  std::string to_string() const;
};

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

/// The two generator families: the small generators a_k = e_alpha^(p^k),
/// b_k = e_beta^(p^k), and the divided powers e_omega^(k).
enum class GenKind : std::uint8_t { a, b, e_alpha, e_alphabeta, e_beta };

class Generator {
 public:
  /// a_k; degree p^k alpha.
  static Generator a(unsigned k, std::uint32_t p);
  /// b_k; degree p^k beta.
  static Generator b(unsigned k, std::uint32_t p);
  /// e_alpha^(k), k >= 1.
  static Generator e_alpha(std::uint64_t k);
  static Generator e_alphabeta(std::uint64_t k);
  static Generator e_beta(std::uint64_t k);

  GenKind kind() const { return kind_; }
  std::uint64_t index() const { return index_; }
  Degree degree() const { return degree_; }
  bool is_divided() const { return kind_ != GenKind::a && kind_ != GenKind::b; }

  /// Dense code used for hashing and structural ordering.
  std::uint64_t code() const {
    return (index_ << 3U) | static_cast<std::uint64_t>(kind_);
  }

  /// Token in the expression grammar: "a0", "b1", "ea(3)", "eab(2)", "eb(1)".
  std::string token() const;

  friend bool operator==(const Generator& x, const Generator& y) {
    return x.code() == y.code();
  }
  friend std::strong_ordering operator<=>(const Generator& x, const Generator& y) {
    return x.code() <=> y.code();
  }

 private:
  Generator(GenKind kind, std::uint64_t index, Degree degree)
      : kind_(kind), index_(index), degree_(degree) {}

  GenKind kind_;
  std::uint64_t index_;
  Degree degree_;
};

/// A word in the free monoid; the empty word is the unit e.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> letters) : letters_(letters) {}
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
  explicit Word(Generator g) : letters_{g} {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Generator> letters() const { return letters_; }
  const Generator& back() const { return letters_.back(); }

  Degree degree() const;
  /// Norm of the degree.
  std::uint64_t total_degree() const { return degree().norm(); }

  /// Factor [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool has_prefix(const Word& w) const;
  bool has_suffix(const Word& w) const;
  /// True if w occurs as a contiguous factor.
  bool contains(const Word& w) const;
  /// Occurrence positions of w as a factor.
  std::vector<std::size_t> occurrences(const Word& w) const;

  void push_back(Generator g) { letters_.push_back(g); }
  void pop_back() { letters_.pop_back(); }

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);
  /// u^n.
  Word power(unsigned n) const;

  /// "e" for the empty word, otherwise tokens joined with '*'.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Structural order (by generator codes). Not a monomial order.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
    return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(),
                                                  v.letters_.begin(), v.letters_.end());
  }

 private:
  std::vector<Generator> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& g : w) {
      h ^= g.code() + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return h;
  }
};

struct GeneratorHash {
  std::size_t operator()(const Generator& g) const noexcept {
    return std::hash<std::uint64_t>{}(g.code());
  }
};

}  // namespace ncalg

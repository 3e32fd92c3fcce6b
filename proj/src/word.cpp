#include "ncalg/word.hpp"

#include <algorithm>

#include "ncalg/error.hpp"

namespace ncalg {

std::string Degree::to_string() const {
  return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

Generator Generator::a(unsigned k, std::uint32_t p) {
  return {GenKind::a, k, Degree{ipow(p, k), 0}};
}

Generator Generator::b(unsigned k, std::uint32_t p) {
  return {GenKind::b, k, Degree{0, ipow(p, k)}};
}

Generator Generator::e_alpha(std::uint64_t k) {
  if (k == 0) throw DomainError("divided power index must be >= 1");
  return {GenKind::e_alpha, k, Degree{k, 0}};
}

Generator Generator::e_alphabeta(std::uint64_t k) {
  if (k == 0) throw DomainError("divided power index must be >= 1");
  return {GenKind::e_alphabeta, k, Degree{k, k}};
}

Generator Generator::e_beta(std::uint64_t k) {
  if (k == 0) throw DomainError("divided power index must be >= 1");
  return {GenKind::e_beta, k, Degree{0, k}};
}

std::string Generator::token() const {
  const auto i = std::to_string(index_);
  switch (kind_) {
    case GenKind::a: return "a" + i;
    case GenKind::b: return "b" + i;
    case GenKind::e_alpha: return "ea(" + i + ")";
    case GenKind::e_alphabeta: return "eab(" + i + ")";
    case GenKind::e_beta: return "eb(" + i + ")";
  }
  return "?";
}

Degree Word::degree() const {
  Degree d;
  for (const auto& g : letters_) d += g.degree();
  return d;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Generator>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                     letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::has_prefix(const Word& w) const {
  return w.size() <= size() && std::equal(w.begin(), w.end(), begin());
}

bool Word::has_suffix(const Word& w) const {
  return w.size() <= size() &&
         std::equal(w.begin(), w.end(), end() - static_cast<std::ptrdiff_t>(w.size()));
}

bool Word::contains(const Word& w) const {
  return std::search(begin(), end(), w.begin(), w.end()) != end() || w.empty();
}

std::vector<std::size_t> Word::occurrences(const Word& w) const {
  std::vector<std::size_t> out;
  if (w.size() > size()) return out;
  for (std::size_t i = 0; i + w.size() <= size(); ++i) {
    if (std::equal(w.begin(), w.end(), begin() + static_cast<std::ptrdiff_t>(i))) {
      out.push_back(i);
    }
  }
  return out;
}

Word operator*(const Word& u, const Word& v) {
  Word r;
  r.letters_.reserve(u.size() + v.size());
  r.letters_.insert(r.letters_.end(), u.begin(), u.end());
  r.letters_.insert(r.letters_.end(), v.begin(), v.end());
  return r;
}

Word& Word::operator*=(const Word& v) {
  letters_.insert(letters_.end(), v.begin(), v.end());
  return *this;
}

Word Word::power(unsigned n) const {
  Word r;
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) s += '*';
    s += letters_[i].token();
  }
  return s;
}

}  // namespace ncalg

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ncalg/anick.hpp"
#include "ncalg/error.hpp"
#include "ncalg/kostant.hpp"
#include "ncalg/polynomial.hpp"
#include "ncalg/word.hpp"

namespace ncalg::testing {

inline Word word(const std::string& text, std::uint32_t p) {
  return parse_word(text, Field::prime(p));
}

inline Word dword(const std::string& text) { return parse_word(text, Field::rationals()); }

inline Word A(unsigned k, std::uint32_t p) { return Word(Generator::a(k, p)); }
inline Word B(unsigned k, std::uint32_t p) { return Word(Generator::b(k, p)); }

/// Commutative polynomials in x1, x2, x3 over Q.
using Exponent = std::array<unsigned, 3>;
using CPoly = std::map<Exponent, mpq_class>;

/// U(n+) acting on Q[x1, x2, x3] by e_alpha = d1, e_beta = x1 d3 + d2,
/// e_alphabeta = d3, so [e_alpha, e_beta] = e_alphabeta. Divided powers
/// are k-th powers over k!.
class DiffOracle {
 public:
  static CPoly derivative(const CPoly& f, int var) {
    CPoly out;
    for (const auto& [e, c] : f) {
      if (e[var] == 0) continue;
      Exponent n = e;
      --n[var];
      out[n] += c * e[var];
    }
    prune(out);
    return out;
  }

  static CPoly apply_letter(GenKind kind, const CPoly& f) {
    switch (kind) {
      case GenKind::e_alpha:
        return derivative(f, 0);
      case GenKind::e_alphabeta:
        return derivative(f, 2);
      case GenKind::e_beta: {
        CPoly out = derivative(f, 1);
        for (const auto& [e, c] : derivative(f, 2)) {
          Exponent n = e;
          ++n[0];
          out[n] += c;
        }
        prune(out);
        return out;
      }
      default:
        throw DomainError("oracle letters are divided only");
    }
  }

  /// e_omega^(k) f.
  static CPoly apply_divided(const Generator& g, CPoly f) {
    mpz_class fact = 1;
    for (std::uint64_t i = 1; i <= g.index(); ++i) {
      f = apply_letter(g.kind(), f);
      fact *= i;
    }
    for (auto& [e, c] : f) c /= fact;
    return f;
  }

  /// The operator of a word: the rightmost letter acts first.
  static CPoly apply_word(const Word& w, CPoly f) {
    for (std::size_t i = w.size(); i-- > 0;) f = apply_divided(w[i], f);
    return f;
  }

  static CPoly apply(const KostantElement& x, const CPoly& f) {
    CPoly out;
    for (const auto& [m, c] : x.terms()) {
      for (const auto& [e, v] : apply_word(m.to_word(), f)) out[e] += v * c.rational();
    }
    prune(out);
    return out;
  }

  static CPoly apply(const Polynomial& x, const CPoly& f) {
    CPoly out;
    for (const auto& [w, c] : x.terms()) {
      for (const auto& [e, v] : apply_word(w, f)) out[e] += v * c.rational();
    }
    prune(out);
    return out;
  }

  /// Monomials of total degree <= d; two elements of degree <= d agree iff
  /// they agree on all of these.
  static std::vector<CPoly> probes(unsigned d) {
    std::vector<CPoly> out;
    for (unsigned i = 0; i <= d; ++i) {
      for (unsigned j = 0; i + j <= d; ++j) {
        for (unsigned k = 0; i + j + k <= d; ++k) out.push_back(CPoly{{Exponent{i, j, k}, 1}});
      }
    }
    return out;
  }

  static void prune(CPoly& f) {
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
  }
};

/// (a1, c1, b1)(a2, c2, b2) as exact integers, from e_beta^(k) e_alpha^(l)
/// = sum_j (-1)^j e_alpha^(l-j) e_alphabeta^(j) e_beta^(k-j) and centrality
/// of e_alphabeta.
inline std::map<DividedMonomial, mpz_class> closed_product(const DividedMonomial& x,
                                                           const DividedMonomial& y) {
  std::map<DividedMonomial, mpz_class> out;
  for (std::uint64_t j = 0; j <= std::min(x.kb, y.ka); ++j) {
    mpz_class c = exact_binomial(x.ka + y.ka - j, x.ka) * exact_binomial(x.kab + j, x.kab) *
                  exact_binomial(x.kab + j + y.kab, y.kab) *
                  exact_binomial(x.kb - j + y.kb, y.kb);
    if (j % 2 == 1) c = -c;
    out[{x.ka + y.ka - j, x.kab + j + y.kab, x.kb - j + y.kb}] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// The printed chain sets for G_{jm}, instantiated on a window.
inline std::set<Word> t1_display(const Window& w) {
  const auto p = w.p;
  std::set<Word> out;
  for (unsigned k = w.j; k < w.m; ++k) {
    for (unsigned l = k + 1; l < w.m; ++l) {
      out.insert(A(l, p) * B(k, p));
      out.insert(B(l, p) * A(k, p));
      out.insert(A(l, p) * A(k, p));
      out.insert(B(l, p) * B(k, p));
    }
    out.insert(A(k, p).power(p));
    out.insert(B(k, p).power(p));
    out.insert((B(k, p) * A(k, p)).power(p));
    if (p >= 3) {
      out.insert(B(k, p).power(2) * A(k, p));
      out.insert(B(k, p) * A(k, p).power(2));
    }
  }
  return out;
}

inline std::set<Word> t2_display(const Window& w) {
  const auto p = w.p;
  std::set<Word> out;
  for (unsigned k = w.j; k < w.m; ++k) {
    const Word a = A(k, p);
    const Word b = B(k, p);
    const Word ba = b * a;
    for (unsigned l = k + 1; l < w.m; ++l) {
      const Word al = A(l, p);
      const Word bl = B(l, p);
      for (unsigned r = l + 1; r < w.m; ++r) {
        for (const Word& x : {A(r, p), B(r, p)}) {
          for (const Word& y : {al, bl}) {
            for (const Word& z : {a, b}) out.insert(x * y * z);
          }
        }
      }
      for (const Word& x : {al, bl}) {
        out.insert(x * a.power(p));
        out.insert(x * b.power(p));
        out.insert(x * ba.power(p));
      }
      for (const Word& z : {a, b}) {
        out.insert(al.power(p) * z);
        out.insert(bl.power(p) * z);
        out.insert((bl * al).power(p) * z);
      }
      if (p >= 3) {
        for (const Word& x : {al, bl}) {
          out.insert(x * b.power(2) * a);
          out.insert(x * b * a.power(2));
        }
        for (const Word& z : {a, b}) {
          out.insert(bl.power(2) * al * z);
          out.insert(bl * al.power(2) * z);
        }
      }
    }
    out.insert(a.power(p + 1));
    out.insert(b.power(p + 1));
    out.insert(b * ba.power(p));
    out.insert(ba.power(p) * a);
    out.insert(ba.power(p + 1));
    if (p >= 3) out.insert(b.power(2) * a.power(2));
  }
  return out;
}

/// The printed degree-coincidence set W, read with the degree-consistent
/// indices: the printed list repeats (a_l b_k, a_l b_{k-1}^p) where the
/// degrees call for (a_l a_k, a_l a_{k-1}^p), and drops the exponent p in
/// two entries.
inline std::set<std::pair<Word, Word>> w_display(const Window& w) {
  const auto p = w.p;
  std::set<std::pair<Word, Word>> out;
  auto in = [&](unsigned i) { return i >= w.j && i < w.m; };
  for (unsigned k = w.j; k < w.m; ++k) {
    const Word a = A(k, p);
    const Word b = B(k, p);
    const Word ba = b * a;
    if (in(k + 1)) {
      out.emplace(ba.power(p), A(k + 1, p) * b.power(p));
      out.emplace(ba.power(p), B(k + 1, p) * a.power(p));
      out.emplace(A(k + 1, p) * a, a.power(p + 1));
      out.emplace(B(k + 1, p) * b, b.power(p + 1));
    }
    for (unsigned l = k + 1; l < w.m; ++l) {
      const Word al = A(l, p);
      const Word bl = B(l, p);
      if (k >= w.j + 1) {
        out.emplace(al * b, al * B(k - 1, p).power(p));
        out.emplace(al * a, al * A(k - 1, p).power(p));
        out.emplace(bl * a, bl * A(k - 1, p).power(p));
        out.emplace(bl * b, bl * B(k - 1, p).power(p));
      }
      if (in(l + 1)) {
        out.emplace(A(l + 1, p) * a, al.power(p) * a);
        out.emplace(A(l + 1, p) * b, al.power(p) * b);
        out.emplace(B(l + 1, p) * a, bl.power(p) * a);
        out.emplace(B(l + 1, p) * b, bl.power(p) * b);
      }
    }
    if (p == 2 && k >= w.j + 1) {
      const Word am = A(k - 1, p);
      const Word bm = B(k - 1, p);
      out.emplace(a.power(2), a * am.power(2));
      out.emplace(b.power(2), b * bm.power(2));
      if (in(k + 1)) {
        out.emplace(A(k + 1, p) * b, a * (bm * am).power(2));
        out.emplace(B(k + 1, p) * a, b * (bm * am).power(2));
      }
    }
  }
  return out;
}

/// The four printed degree tables as (chain, degree) rows for a window.
inline std::vector<std::pair<Word, Degree>> degree_table_display(const Window& w) {
  const auto p = w.p;
  auto P = [p](unsigned e) { return ipow(p, e); };
  std::vector<std::pair<Word, Degree>> rows;
  for (unsigned k = w.j; k < w.m; ++k) {
    const Word a = A(k, p);
    const Word b = B(k, p);
    const Word ba = b * a;
    for (unsigned l = k + 1; l < w.m; ++l) {
      const Word al = A(l, p);
      const Word bl = B(l, p);
      rows.emplace_back(al * b, Degree{P(l), P(k)});
      rows.emplace_back(bl * a, Degree{P(k), P(l)});
      rows.emplace_back(al * a, Degree{P(l) + P(k), 0});
      rows.emplace_back(bl * b, Degree{0, P(l) + P(k)});
      for (unsigned r = l + 1; r < w.m; ++r) {
        const Word ar = A(r, p);
        const Word br = B(r, p);
        rows.emplace_back(ar * al * a, Degree{P(r) + P(l) + P(k), 0});
        rows.emplace_back(ar * al * b, Degree{P(r) + P(l), P(k)});
        rows.emplace_back(ar * bl * a, Degree{P(r) + P(k), P(l)});
        // printed as p^l alpha + (p^l + p^k) beta
        rows.emplace_back(ar * bl * b, Degree{P(r), P(l) + P(k)});
        rows.emplace_back(br * al * a, Degree{P(l) + P(k), P(r)});
        rows.emplace_back(br * al * b, Degree{P(l), P(r) + P(k)});
        rows.emplace_back(br * bl * a, Degree{P(k), P(r) + P(l)});
        rows.emplace_back(br * bl * b, Degree{0, P(r) + P(l) + P(k)});
      }
      rows.emplace_back(al * a.power(p), Degree{P(l) + P(k + 1), 0});
      rows.emplace_back(al * b.power(p), Degree{P(l), P(k + 1)});
      rows.emplace_back(al * ba.power(p), Degree{P(l) + P(k + 1), P(k + 1)});
      rows.emplace_back(bl * a.power(p), Degree{P(k + 1), P(l)});
      rows.emplace_back(bl * b.power(p), Degree{0, P(l) + P(k + 1)});
      rows.emplace_back(bl * ba.power(p), Degree{P(k + 1), P(k + 1) + P(l)});
      rows.emplace_back(al.power(p) * a, Degree{P(l + 1) + P(k), 0});
      rows.emplace_back(al.power(p) * b, Degree{P(l + 1), P(k)});
      rows.emplace_back(bl.power(p) * a, Degree{P(k), P(l + 1)});
      rows.emplace_back(bl.power(p) * b, Degree{0, P(l + 1) + P(k)});
      rows.emplace_back((bl * al).power(p) * a, Degree{P(l + 1) + P(k), P(l + 1)});
      rows.emplace_back((bl * al).power(p) * b, Degree{P(l + 1), P(l + 1) + P(k)});
      if (p >= 3) {
        rows.emplace_back(al * b.power(2) * a, Degree{P(l) + P(k), 2 * P(k)});
        rows.emplace_back(al * b * a.power(2), Degree{P(l) + 2 * P(k), P(k)});
        rows.emplace_back(bl * b.power(2) * a, Degree{P(k), 2 * P(k) + P(l)});
        rows.emplace_back(bl * b * a.power(2), Degree{2 * P(k), P(l) + P(k)});
        rows.emplace_back(bl.power(2) * al * a, Degree{P(l) + P(k), 2 * P(l)});
        rows.emplace_back(bl.power(2) * al * b, Degree{P(l), 2 * P(l) + P(k)});
        rows.emplace_back(bl * al.power(2) * a, Degree{2 * P(l) + P(k), P(l)});
        rows.emplace_back(bl * al.power(2) * b, Degree{2 * P(l), P(l) + P(k)});
      }
    }
    rows.emplace_back(a.power(p), Degree{P(k + 1), 0});
    rows.emplace_back(b.power(p), Degree{0, P(k + 1)});
    rows.emplace_back(ba.power(p), Degree{P(k + 1), P(k + 1)});
    rows.emplace_back(a.power(p + 1), Degree{P(k + 1) + P(k), 0});
    rows.emplace_back(b.power(p + 1), Degree{0, P(k + 1) + P(k)});
    rows.emplace_back(b * ba.power(p), Degree{P(k + 1), P(k + 1) + P(k)});
    rows.emplace_back(ba.power(p) * a, Degree{P(k + 1) + P(k), P(k + 1)});
    rows.emplace_back(ba.power(p + 1), Degree{P(k + 1) + P(k), P(k + 1) + P(k)});
    if (p >= 3) {
      rows.emplace_back(b.power(2) * a, Degree{P(k), 2 * P(k)});
      rows.emplace_back(b * a.power(2), Degree{2 * P(k), P(k)});
      rows.emplace_back(b.power(2) * a.power(2), Degree{2 * P(k), 2 * P(k)});
    }
  }
  return rows;
}

}  // namespace ncalg::testing

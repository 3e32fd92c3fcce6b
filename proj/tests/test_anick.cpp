#include <doctest.h>

#include <set>

#include "ncalg/anick.hpp"
#include "ncalg/error.hpp"
#include "ncalg/kostant.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

namespace {

std::set<Word> tips(const std::vector<Chain2>& t2) {
  std::set<Word> out;
  for (const auto& c : t2) out.insert(c.tip);
  return out;
}

std::set<Word> words_of(const std::vector<const char*>& texts, std::uint32_t p) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(word(t, p));
  return out;
}

/// 2-chains straight from the definition: w = m1 v with m1 in T1 a prefix,
/// w ending in some T1 word that starts inside m1, and no shorter prefix of
/// w (longer than m1) ending in a T1 word that starts after position 0.
std::set<Word> brute_force_t2(const RewriteSystem& g) {
  const auto t1 = t1_set(g);
  std::size_t longest = 0;
  for (const auto& m : t1) longest = std::max(longest, m.size());
  auto ends_in_t1_after_start = [&](const Word& w) {
    for (const auto& m : t1) {
      if (m.size() < w.size() && w.has_suffix(m)) return true;
    }
    return false;
  };
  std::set<Word> out;
  for (const auto& m1 : t1) {
    std::vector<Word> tails{Word()};
    for (std::size_t i = 0; i < tails.size(); ++i) {
      if (tails[i].size() + 1 >= longest) continue;
      for (const auto& x : g.alphabet()) tails.push_back(tails[i] * Word(x));
    }
    for (const auto& tail : tails) {
      for (const auto& x : g.alphabet()) {
        const Word v = tail * Word(x);
        const Word w = m1 * v;
        if (!ends_in_t1_after_start(w)) continue;
        bool earlier = false;
        for (std::size_t len = m1.size() + 1; len < w.size(); ++len) {
          if (ends_in_t1_after_start(w.prefix(len))) earlier = true;
        }
        bool suffix_overlaps = false;
        for (const auto& m2 : t1) {
          if (w.has_suffix(m2) && w.size() - m2.size() < m1.size() && w.size() > m2.size()) {
            suffix_overlaps = true;
          }
        }
        if (!earlier && suffix_overlaps) out.insert(w);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("T1 examples") {
  const auto t22 = t1_set(small_groebner_basis(Window{2, 0, 2}));
  CHECK(std::set<Word>(t22.begin(), t22.end()) ==
        words_of({"a1*b0", "b1*a0", "a1*a0", "b1*b0", "a0*a0", "a1*a1", "b0*b0", "b1*b1",
                  "b0*a0*b0*a0", "b1*a1*b1*a1"},
                 2));
  const auto t31 = t1_set(small_groebner_basis(Window{3, 0, 1}));
  CHECK(std::set<Word>(t31.begin(), t31.end()) ==
        words_of({"a0*a0*a0", "b0*b0*b0", "b0*a0*b0*a0*b0*a0", "b0*b0*a0", "b0*a0*a0"}, 3));
  CHECK(t1_set(RewriteSystem(Field::prime(2), small_order(Window{2, 0, 1}))).empty());
  for (std::size_t i = 1; i < t22.size(); ++i) CHECK(small_order(Window{2, 0, 2}).less(t22[i - 1], t22[i]));
}

TEST_CASE("T2 examples") {
  const auto g21 = small_groebner_basis(Window{2, 0, 1});
  CHECK(tips(t2_set(g21)) == words_of({"a0*a0*a0", "b0*b0*b0", "b0*b0*a0*b0*a0",
                                       "b0*a0*b0*a0*a0", "b0*a0*b0*a0*b0*a0"},
                                      2));
  CHECK(t2_set(small_groebner_basis(Window{2, 0, 2})).size() == 22);
  CHECK(tips(t2_set(small_groebner_basis(Window{3, 0, 1}))).count(word("b0*b0*a0*a0", 3)));

  RewriteSystem single(Field::prime(2), small_order(Window{2, 0, 1}));
  CHECK(t2_set(single).empty());
  single.add_polynomial(parse_poly("a0*a0", Field::prime(2)));
  CHECK(tips(t2_set(single)) == words_of({"a0*a0*a0"}, 2));

  const auto chains = t2_set(g21);
  for (const auto& c : chains) {
    CHECK(c.m1 * c.v == c.tip);
    CHECK(c.u * c.m2 == c.tip);
    CHECK(!c.u.empty());
    CHECK(!c.v.empty());
  }
}

TEST_CASE("T2 agrees with the definition of 2-chains") {
  for (const Window& w : {Window{2, 0, 1}, Window{2, 0, 2}, Window{3, 0, 1}, Window{3, 0, 2},
                          Window{5, 0, 1}}) {
    const auto g = small_groebner_basis(w);
    CAPTURE(w.p);
    CAPTURE(w.m);
    CHECK(tips(t2_set(g)) == brute_force_t2(g));
  }
}

TEST_CASE("degree tables and W") {
  const auto g = small_groebner_basis(Window{3, 0, 2});
  const auto table = degree_table({word("a1*b0", 3), word("b0*a0*b0*a0*b0*a0*b0*a0", 3)});
  CHECK(table[0].second == Degree{3, 1});
  CHECK(table[1].second == Degree{4, 4});
  CHECK(degree_table({Word()})[0].second == Degree{0, 0});

  std::set<std::pair<Word, Word>> w3;
  const auto t1 = t1_set(g);
  const auto t2 = t2_set(g);
  for (const auto& pr : matches_w(t1, t2)) {
    CHECK(pr.first.degree() == pr.second.degree());
    w3.insert(pr);
  }
  CHECK(w3.count({word("b0*a0*b0*a0*b0*a0", 3), word("a1*b0*b0*b0", 3)}));

  const auto g2 = small_groebner_basis(Window{2, 0, 3});
  std::set<std::pair<Word, Word>> w2;
  for (const auto& pr : matches_w(t1_set(g2), t2_set(g2))) w2.insert(pr);
  CHECK(w2.count({word("a1*a1", 2), word("a1*a0*a0", 2)}));

  // A single index admits no coincidences.
  const auto g5 = small_groebner_basis(Window{5, 0, 1});
  CHECK(matches_w(t1_set(g5), t2_set(g5)).empty());
}

TEST_CASE("delta and j maps") {
  AnickResolution res(small_groebner_basis(Window{2, 0, 1}));
  const Field f = res.field();
  const Word a0 = A(0, 2);
  const Word b0 = B(0, 2);
  CHECK(res.delta(0, {Word(), a0}) == ModuleElement::basis(f, a0, Word()));
  CHECK(res.jmap(1, {a0 * b0, a0}).is_zero());
  CHECK(res.jmap(1, {b0 * a0 * b0, a0}) ==
        ModuleElement::basis(f, Word(), word("b0*a0*b0*a0", 2)));
  CHECK(res.jmap(0, {a0 * b0, Word()}) == ModuleElement::basis(f, a0, b0));
  const Word w = word("b0*a0*b0*a0*a0", 2);
  const auto& dec = res.t2_decomposition(w);
  CHECK(dec.m1 == word("b0*a0*b0*a0", 2));
  CHECK(dec.m2 == word("a0*a0", 2));
  CHECK(dec.u == word("b0*a0*b0", 2));
  CHECK(res.delta(2, {Word(), w}) == ModuleElement::basis(f, word("b0*a0*b0", 2), word("a0*a0", 2)));
}

TEST_CASE("differential examples") {
  for (std::uint32_t p : {2U, 3U}) {
    AnickResolution res(small_groebner_basis(Window{p, 0, 2}));
    const Field f = res.field();
    for (unsigned k = 0; k < 2; ++k) {
      CHECK(res.differential(1, B(k, p).power(p)) == ModuleElement::basis(f, B(k, p).power(p - 1), B(k, p)));
    }
    for (const auto& x : small_alphabet(Window{p, 0, 2})) {
      CHECK(res.differential(0, Word(x)) == ModuleElement::basis(f, Word(x), Word()));
    }
    // d1(.a1 b0) = a1.b0 - b0.a1 - a0^(p-1) b0.a0; for p = 2 the last sign is immaterial.
    ModuleElement expected(f);
    expected.add_term({A(1, p), B(0, p)}, f.one());
    expected.add_term({B(0, p), A(1, p)}, f.from_int(-1));
    expected.add_term({A(0, p).power(p - 1) * B(0, p), A(0, p)}, f.from_int(-1));
    CHECK(res.differential(1, A(1, p) * B(0, p)) == expected);
  }
}

TEST_CASE("splitting") {
  AnickResolution res(small_groebner_basis(Window{2, 0, 1}));
  const Field f = res.field();
  CHECK(res.splitting(0, ModuleElement::basis(f, word("a0*b0", 2), Word())) ==
        ModuleElement::basis(f, A(0, 2), B(0, 2)));
  CHECK(res.splitting(1, ModuleElement(f)).is_zero());
  // Not in the kernel of epsilon: the leading term e.e has no factorisation.
  CHECK_THROWS_AS(res.splitting(0, ModuleElement::basis(f, Word(), Word())), InvariantViolation);
  CHECK_THROWS_AS(res.splitting(2, ModuleElement(f)), DomainError);
}

TEST_CASE("the braid chain appears in d2(.a_(k+1) b_k^p)") {
  AnickResolution res(small_groebner_basis(Window{3, 0, 2}));
  const auto d = res.differential(2, A(1, 3) * B(0, 3).power(3));
  CHECK(!res.field().is_zero(d.coefficient({Word(), (B(0, 3) * A(0, 3)).power(3)})));
}

TEST_CASE("d maps are graded and led by delta") {
  for (const Window& w : {Window{2, 0, 2}, Window{3, 0, 1}}) {
    AnickResolution res(small_groebner_basis(w));
    for (int n = 0; n <= 2; ++n) {
      for (const auto& t : res.chains(n)) {
        const auto& d = res.differential(n, t);
        REQUIRE(!d.is_zero());
        for (const auto& [b, c] : d.terms()) REQUIRE(b.degree() == t.degree());
        const auto lead = d.leading_term(res.order());
        const auto delta = res.delta(n, {Word(), t}).leading_term(res.order());
        REQUIRE(lead.first == delta.first);
        REQUIRE(lead.second == delta.second);
      }
    }
  }
}

TEST_CASE("complex and exactness") {
  for (const Window& w : {Window{2, 0, 1}, Window{3, 0, 1}}) {
    AnickResolution res(small_groebner_basis(w));
    const std::uint64_t bound = w.p == 2 ? 8 : 12;
    CHECK(complex_check(res, bound).pass());
    const auto ex = exactness_check(res, bound);
    CHECK(ex.pass());
    REQUIRE(!ex.degrees.empty());
    for (const auto& d : ex.degrees) {
      if (d.degree == Degree{0, 0}) {
        CHECK(d.dim_p0 == 0);
        CHECK(d.dim_p1 == 0);
        CHECK(d.dim_p2 == 0);
        CHECK(d.rank_eps == 1);
      }
    }
  }
}

TEST_CASE("construction rejects incomplete systems") {
  RewriteSystem toy(Field::prime(3), small_order(Window{3, 0, 1}));
  toy.add_polynomial(parse_poly("a0*b0", Field::prime(3)));
  toy.add_polynomial(parse_poly("b0*a0 - a0", Field::prime(3)));
  CHECK_THROWS_AS(AnickResolution{toy}, InvariantViolation);
}

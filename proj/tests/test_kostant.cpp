#include <doctest.h>

#include <random>

#include "ncalg/error.hpp"
#include "ncalg/kostant.hpp"
#include "ncalg/rewriting.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

namespace {

const Field Q = Field::rationals();

KostantElement from_closed(const std::map<DividedMonomial, mpz_class>& terms, const Field& f) {
  KostantElement out(f);
  for (const auto& [m, c] : terms) out.add_term(m, f.from_mpz(c));
  return out;
}

bool oracle_agrees(const KostantElement& x, const Word& w, unsigned order) {
  for (const auto& probe : DiffOracle::probes(order)) {
    if (DiffOracle::apply(x, probe) != DiffOracle::apply_word(w, probe)) return false;
  }
  return true;
}

std::uint64_t word_order(const Word& w) {
  std::uint64_t n = 0;
  for (const auto& g : w) n += g.index();
  return n;
}

}  // namespace

TEST_CASE("divided-power basics") {
  DividedPowerAlgebra alg(Q);
  const auto eb = DividedMonomial{0, 0, 1};
  const auto ea = DividedMonomial{1, 0, 0};
  auto expected = KostantElement::basis(Q, {1, 0, 1});
  expected.add_term({0, 1, 0}, Q.from_int(-1));
  CHECK(alg.multiply_basis(eb, ea) == expected);
  CHECK(alg.multiply_basis({2, 0, 0}, {3, 0, 0}) == KostantElement::basis(Q, {5, 0, 0}).scaled(Q.from_int(10)));
  const auto v = KostantElement::basis(Q, {1, 2, 3});
  CHECK(alg.multiply(KostantElement::one(Q), v) == v);
  CHECK(alg.multiply(v, KostantElement::one(Q)) == v);
}

TEST_CASE("generators and evaluation") {
  const Field f2 = Field::prime(2);
  const Field f3 = Field::prime(3);
  DividedPowerAlgebra alg2(f2);
  CHECK(alg2.generator(Generator::a(0, 2)) == KostantElement::basis(f2, {1, 0, 0}));
  CHECK(alg2.generator(Generator::b(1, 2)) == KostantElement::basis(f2, {0, 0, 2}));
  DividedPowerAlgebra alg3(f3);
  CHECK(alg3.generator(Generator::a(2, 3)) == KostantElement::basis(f3, {9, 0, 0}));
  CHECK(small_generator(SmallKind::b, 1, f3) == KostantElement::basis(f3, {0, 0, 3}));
  CHECK(alg2.evaluate(Word()) == KostantElement::one(f2));
  for (std::uint32_t p : {2U, 3U, 5U}) {
    DividedPowerAlgebra alg(Field::prime(p));
    CHECK(alg.evaluate(A(0, p).power(p)).is_zero());
    CHECK(alg.evaluate(B(1, p).power(p)).is_zero());
  }
  auto ba = KostantElement::basis(f3, {1, 0, 1});
  ba.add_term({0, 1, 0}, f3.from_int(-1));
  CHECK(alg3.evaluate(word("b0*a0", 3)) == ba);
}

TEST_CASE("products match the differential-operator model in characteristic 0") {
  DividedPowerAlgebra alg(Q);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> e(0, 3);
  for (int i = 0; i < 40; ++i) {
    const DividedMonomial x{e(rng), e(rng), e(rng)};
    const DividedMonomial y{e(rng), e(rng), e(rng)};
    const Word w = x.to_word() * y.to_word();
    REQUIRE(oracle_agrees(alg.multiply_basis(x, y), w, static_cast<unsigned>(word_order(w))));
  }
}

TEST_CASE("rule table instances hold in characteristic 0") {
  for (const auto& x : divided_alphabet(5)) {
    for (const auto& y : divided_alphabet(5)) {
      const auto rhs = straightening_rule(x, y, Q);
      if (!rhs) {
        // Already in basis order: the pair straightens to itself.
        DividedPowerAlgebra alg(Q);
        CHECK(alg.straighten(Word{x, y}).terms().size() == 1);
        continue;
      }
      const Word xy{x, y};
      const auto order = static_cast<unsigned>(x.index() + y.index());
      for (const auto& probe : DiffOracle::probes(order)) {
        REQUIRE(DiffOracle::apply(*rhs, probe) == DiffOracle::apply_word(xy, probe));
      }
    }
  }
}

TEST_CASE("closed product formula and the rule table agree, char 0 and mod p") {
  for (const Field& f : {Q, Field::prime(2), Field::prime(3), Field::prime(5)}) {
    DividedPowerAlgebra alg(f);
    for (std::uint64_t a1 = 0; a1 <= 4; ++a1) {
      for (std::uint64_t b1 = 0; b1 <= 4; ++b1) {
        for (std::uint64_t a2 = 0; a2 <= 4; ++a2) {
          for (std::uint64_t c = 0; c <= 2; ++c) {
            const DividedMonomial x{a1, c, b1};
            const DividedMonomial y{a2, 2 - c, b1 + 1};
            REQUIRE(alg.multiply_basis(x, y) == from_closed(closed_product(x, y), f));
          }
        }
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> e(0, 6);
  for (const Field& f : {Q, Field::prime(2), Field::prime(3)}) {
    DividedPowerAlgebra alg(f);
    for (int i = 0; i < 200; ++i) {
      const auto x = KostantElement::basis(f, {e(rng), e(rng), e(rng)});
      const auto y = KostantElement::basis(f, {e(rng), e(rng), e(rng)});
      const auto z = KostantElement::basis(f, {e(rng), e(rng), e(rng)});
      REQUIRE(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
    }
  }
}

TEST_CASE("reduction mod p commutes with straightening") {
  DividedPowerAlgebra q(Q);
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::uint64_t> e(0, 7);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Field f = Field::prime(p);
    DividedPowerAlgebra alg(f);
    for (int i = 0; i < 100; ++i) {
      const DividedMonomial x{e(rng), e(rng), e(rng)};
      const DividedMonomial y{e(rng), e(rng), e(rng)};
      KostantElement reduced(f);
      const auto exact = q.multiply_basis(x, y);
      for (const auto& [m, c] : exact.terms()) {
        REQUIRE(c.rational().get_den() == 1);
        reduced.add_term(m, f.from_mpz(c.rational().get_num()));
      }
      REQUIRE(alg.multiply_basis(x, y) == reduced);
    }
  }
}

TEST_CASE("products are graded") {
  DividedPowerAlgebra alg(Field::prime(3));
  for (std::uint64_t i = 0; i < 5; ++i) {
    const DividedMonomial x{i, 1, 4 - i};
    const DividedMonomial y{4 - i, i % 2, i};
    const auto prod = alg.multiply_basis(x, y);
    CHECK(prod.is_homogeneous());
    for (const auto& [m, c] : prod.terms()) CHECK(m.degree() == x.degree() + y.degree());
  }
}

TEST_CASE("window validation and alphabet") {
  CHECK_THROWS_AS((Window{4, 0, 1}).validate(), DomainError);
  CHECK_THROWS_AS((Window{2, 1, 1}).validate(), DomainError);
  const auto letters = small_alphabet(Window{2, 0, 2});
  REQUIRE(letters.size() == 4);
  CHECK(letters[0] == Generator::a(0, 2));
  CHECK(letters[1] == Generator::b(0, 2));
  CHECK(letters[3] == Generator::b(1, 2));
}

TEST_CASE("small Groebner bases") {
  const auto g21 = small_groebner_basis(Window{2, 0, 1});
  REQUIRE(g21.size() == 3);
  const Field f2 = g21.field();
  CHECK(g21.find_rule(word("a0*a0", 2)).has_value());
  CHECK(g21.find_rule(word("b0*b0", 2)).has_value());
  const auto braid = g21.find_rule(word("b0*a0*b0*a0", 2));
  REQUIRE(braid.has_value());
  CHECK(g21.rules()[*braid].rhs == parse_poly("a0*b0*a0*b0", f2));

  const auto g31 = small_groebner_basis(Window{3, 0, 1});
  CHECK(g31.size() == 5);
  CHECK(g31.find_rule(word("b0*b0*a0", 3)).has_value());
  CHECK(g31.find_rule(word("b0*a0*a0", 3)).has_value());
  CHECK(small_groebner_basis(Window{2, 0, 2}).size() == 10);
  CHECK(small_groebner_basis(Window{3, 0, 2}).size() == 14);

  // Pinned rules of G_(2,2) with index pair (0, 1).
  const auto g22 = small_groebner_basis(Window{2, 0, 2});
  const auto skew = g22.find_rule(word("a1*b0", 2));
  REQUIRE(skew.has_value());
  CHECK(g22.rules()[*skew].rhs == parse_poly("b0*a1 + a0*b0*a0", f2));
}

TEST_CASE("every rule of G_m evaluates to zero") {
  for (const Window& w : {Window{2, 0, 1}, Window{2, 0, 2}, Window{3, 0, 1}, Window{3, 0, 2},
                          Window{5, 0, 1}, Window{2, 1, 3}}) {
    const auto g = small_groebner_basis(w);
    DividedPowerAlgebra alg(w.field());
    for (const auto& r : g.rules()) CHECK(alg.evaluate(r.as_polynomial()).is_zero());
  }
}

TEST_CASE("relation suite") {
  for (const Window& w : {Window{2, 0, 3}, Window{3, 0, 2}}) {
    for (const auto& check : relation_suite(w)) {
      CAPTURE(check.relation);
      CHECK(check.pass);
    }
  }
  const Field f3 = Field::prime(3);
  DividedPowerAlgebra alg(f3);
  CHECK(alg.evaluate(parse_poly("b0*b0*a0 - 2*b0*a0*b0 + a0*b0*b0", f3)).is_zero());
  CHECK(serre(SmallKind::b, 0, f3) == parse_poly("b0*b0*a0 - 2*b0*a0*b0 + a0*b0*b0", f3));
}

TEST_CASE("mutated relations fail with a nonzero residual") {
  const auto checks = relation_suite(Window{3, 0, 2}, RelationMutation{"skew_one", 0});
  bool failed = false;
  for (const auto& c : checks) {
    if (!c.pass) {
      failed = true;
      CHECK(!c.residual.is_zero());
    }
  }
  CHECK(failed);
}

TEST_CASE("dimension equals p^(3m)") {
  for (const Window& w : {Window{2, 0, 1}, Window{3, 0, 1}, Window{2, 0, 2}}) {
    const auto d = dimension_check(w);
    CHECK(d.expected == ipow(w.p, 3 * w.m));
    CHECK(d.pass());
  }
}

TEST_CASE("divided-power rewriting system") {
  const auto big = big_rewrite_system(Q, 4);
  const Word lhs{Generator::e_alphabeta(2), Generator::e_alpha(3)};
  const auto i = big.find_rule(lhs);
  REQUIRE(i.has_value());
  CHECK(big.rules()[*i].rhs ==
        Polynomial::monomial(Q, Word{Generator::e_alpha(3), Generator::e_alphabeta(2)}));
  CHECK(is_complete(big_rewrite_system(Field::prime(2), 3)).complete);
  CHECK(is_complete(big_rewrite_system(Field::prime(3), 8)).complete);

  const auto truncated = big_rewrite_system(Field::prime(2), 1);
  const auto sq = truncated.find_rule(Word{Generator::e_alpha(1), Generator::e_alpha(1)});
  REQUIRE(sq.has_value());
  CHECK(truncated.rules()[*sq].rhs.is_zero());
  CHECK(is_complete(truncated).complete);
  CHECK(irreducible_words(truncated).size() == 8);
  CHECK(irreducible_words(big_rewrite_system(Field::prime(3), 2)).size() == 27);
}

TEST_CASE("normal forms agree with the oracle on all words of small degree") {
  for (const Window& w : {Window{2, 0, 1}, Window{3, 0, 1}}) {
    const auto g = small_groebner_basis(w);
    DividedPowerAlgebra alg(w.field());
    MemoReducer memo(g);
    const auto letters = small_alphabet(w);
    std::vector<Word> words{Word()};
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (const auto& x : letters) {
        Word next = words[i] * Word(x);
        if (next.total_degree() <= 3ULL * w.p * w.p / 2) words.push_back(std::move(next));
      }
    }
    for (const auto& word : words) {
      REQUIRE(alg.evaluate(memo.word_nf(word)) == alg.evaluate(word));
    }
  }
}

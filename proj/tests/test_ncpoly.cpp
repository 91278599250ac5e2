#include <doctest/doctest.h>

#include "qea/bicharacter.hpp"
#include "qea/ncpoly.hpp"

using qea::Bicharacter;
using qea::NcPoly;
using qea::Rat;
using qea::Scalar;
using qea::Word;

namespace {

// Fully generic 2x2 bicharacter: every entry its own parameter.
struct Free2 {
  qea::SymbolsPtr syms = qea::make_symbols({"p11", "p12", "p21", "p22"});
  Bicharacter p{syms,
                {{Scalar::var(syms, "p11"), Scalar::var(syms, "p12")},
                 {Scalar::var(syms, "p21"), Scalar::var(syms, "p22")}}};
  NcPoly x1 = NcPoly::generator(syms, 0);
  NcPoly x2 = NcPoly::generator(syms, 1);
  Scalar one = Scalar::from_rat(syms, Rat(1));
};

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Free2 f;
  NcPoly a = f.x1 * f.x2 - f.x2 * f.x1;
  CHECK(a.term_count() == 2);
  CHECK(a.leading().first == Word{0, 1});  // x1x2 beats x2x1
  CHECK((a + (f.x2 * f.x1)).term_count() == 1);
  CHECK((a - a).is_zero());
  CHECK(a.scale(Scalar::from_rat(f.syms, Rat(0))).is_zero());
  CHECK((f.x1.pow(3)).leading().first == Word{0, 0, 0});
  CHECK(NcPoly::constant(f.syms, f.one).term_count() == 1);
}

TEST_CASE("terms are kept greatest-first") {
  Free2 f;
  NcPoly s = f.x2 * f.x2 + f.x1 * f.x2 + f.x2 * f.x1 + f.x1 * f.x1;
  std::vector<Word> order;
  for (const auto& [w, c] : s.terms()) order.push_back(w);
  CHECK(order == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("homogeneous constitution detection") {
  Free2 f;
  NcPoly mixed = f.x1 * f.x2 + f.x1;
  CHECK(!mixed.homogeneous_constitution(2).has_value());
  NcPoly hom = f.x1 * f.x2 - f.x2 * f.x1;
  auto c = hom.homogeneous_constitution(2);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<unsigned>{1, 1});
  CHECK(NcPoly().homogeneous_constitution(2).has_value());
}

TEST_CASE("skew commutator of generators") {
  Free2 f;
  NcPoly b = skew_commutator(f.p, f.x1, f.x2);
  // [x1,x2] = x1x2 - p12 x2x1
  REQUIRE(b.term_count() == 2);
  CHECK(b.terms().at(Word{0, 1}) == f.one);
  CHECK(b.terms().at(Word{1, 0}) == -Scalar::var(f.syms, "p12"));
  CHECK_THROWS_AS(skew_commutator(f.p, f.x1 + f.x1 * f.x2, f.x2), qea::domain_error);
}

TEST_CASE("super letter values follow the standard bracketing") {
  Free2 f;
  // [[x1,x2],x2] = [x1,x2]x2 - p11->(x1x2,x2) x2[x1,x2]
  NcPoly b12 = skew_commutator(f.p, f.x1, f.x2);
  NcPoly expect = skew_commutator(f.p, b12, f.x2);
  CHECK(qea::super_letter_value(f.p, qea::standard_bracketing(Word{0, 1, 1})) == expect);
}

TEST_CASE("bracket identities vanish exhaustively on short words") {
  Free2 f;
  std::vector<Word> pool = {{0}, {1}, {0, 1}, {1, 0}, {0, 0}, {0, 1, 1}};
  for (const Word& u : pool)
    for (const Word& v : pool)
      for (const Word& w : pool)
        for (qea::BracketIdentity id :
             {qea::BracketIdentity::reassociate_a, qea::BracketIdentity::reassociate_b,
              qea::BracketIdentity::leibniz_right, qea::BracketIdentity::leibniz_left,
              qea::BracketIdentity::square}) {
          CAPTURE(qea::word_string(u));
          CAPTURE(qea::word_string(v));
          CAPTURE(qea::word_string(w));
          CHECK(qea::bracket_identity_defect(f.p, id, u, v, w).is_zero());
        }
}

TEST_CASE("bicharacter extends multiplicatively") {
  Free2 f;
  Word u = {0, 1, 1}, v = {1, 0};
  // p(u,v) = prod over letters
  Scalar expect = f.p.of_words(Word{0}, v) * f.p.of_words(Word{1}, v).pow(2);
  CHECK(f.p.of_words(u, v) == expect);
  CHECK(f.p.of_words(Word{}, v) == f.one);
  // chi against a group exponent with a negative entry
  qea::GroupExp g = {1, -2};
  CHECK(f.p.chi(qea::constitution(Word{0}, 2), g) ==
        Scalar::var(f.syms, "p11") * Scalar::var(f.syms, "p12").pow(-2));
}

TEST_CASE("polynomial printing round-trips through the relation parser") {
  Free2 f;
  NcPoly a = skew_commutator(f.p, f.x1, skew_commutator(f.p, f.x1, f.x2));
  CHECK(a.to_string().find("x1x1x2") != std::string::npos);
}

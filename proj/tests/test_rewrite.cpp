#include <doctest/doctest.h>

#include "qea/presentation.hpp"
#include "qea/rewrite.hpp"
#include "support/oracles.hpp"

using qea::NcPoly;
using qea::Presentation;
using qea::RewriteSystem;
using qea::Scalar;
using qea::Word;

namespace {

RewriteSystem completed_a2(long bound = 6) {
  Presentation pr = qea::generic_presentation(qea::Series::A, 2);
  RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
  sys.complete(pr.relations, bound);
  return sys;
}

}  // namespace

TEST_CASE("rank-2 chain completion has exactly the two quantified relations") {
  RewriteSystem sys = completed_a2();
  // ascending (weight, word order); x1x2x2 < x1x1x2 because the later x2
  // loses to x1 at the first difference
  CHECK(sys.leading_words() == std::vector<Word>{{0, 1, 1}, {0, 0, 1}});
  CHECK(sys.closed_to() == 6);
  CHECK(sys.is_closed(6));
}

TEST_CASE("the two rules overlap once and the composition reduces to zero") {
  Presentation pr = qea::generic_presentation(qea::Series::A, 2);
  RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
  sys.complete(pr.relations, 6);

  // Overlap word x1x1x2x2: lhs x1x1x2 ending matches lhs x1x2x2 start.
  // The two ways of rewriting it must agree.
  NcPoly via_first = sys.reduce(sys.reduce_word(Word{0, 0, 1}) *
                                NcPoly::generator(pr.params, 1));
  NcPoly via_second = sys.reduce(NcPoly::generator(pr.params, 0) *
                                 sys.reduce_word(Word{0, 1, 1}));
  CHECK(via_first == via_second);
  CHECK(sys.reduce_word(Word{0, 0, 1, 1}) == via_first);
}

TEST_CASE("reduction is a projection onto normal form") {
  RewriteSystem sys = completed_a2();
  for (const Word& w :
       {Word{0, 0, 1}, Word{0, 1, 1, 0}, Word{0, 0, 1, 1, 0}, Word{1, 1, 0, 0}}) {
    NcPoly nf = sys.reduce_word(w);
    CHECK(sys.reduce(nf) == nf);  // idempotent
    for (const auto& [u, c] : nf.terms()) CHECK(sys.word_irreducible(u));
  }
}

TEST_CASE("relations reduce to zero in their own system") {
  for (auto [s, n] : {std::pair{qea::Series::A, std::size_t{3}},
                      std::pair{qea::Series::B, std::size_t{2}},
                      std::pair{qea::Series::C, std::size_t{2}}}) {
    Presentation pr = qea::generic_presentation(s, n);
    RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
    sys.complete(pr.relations, qea::verify_bound(s, n));
    for (const NcPoly& r : pr.relations) CHECK(sys.reduce(r).is_zero());
  }
}

TEST_CASE("completion is idempotent") {
  Presentation pr = qea::generic_presentation(qea::Series::B, 2);
  RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
  sys.complete(pr.relations, 6);
  auto rules1 = sys.leading_words();

  // Feed the closed system's rules back in as relations.
  std::vector<NcPoly> as_relations;
  for (const qea::RewriteRule& r : sys.rules()) {
    NcPoly lhs = NcPoly::monomial(pr.params, r.lhs,
                                  Scalar::from_rat(pr.params, qea::Rat(1)));
    as_relations.push_back(lhs - r.rhs);
  }
  RewriteSystem sys2(pr.params, pr.ngen, pr.degrees);
  sys2.complete(as_relations, 6);
  CHECK(sys2.leading_words() == rules1);
}

TEST_CASE("a perturbed quantified relation is no longer closed") {
  Presentation pr = qea::generic_presentation(qea::Series::A, 2);
  // Damage one coefficient of the first relation: the pair of rules stops
  // being a closed system (their overlap no longer resolves).
  std::vector<NcPoly> damaged = pr.relations;
  const NcPoly& r0 = damaged[0];
  NcPoly tweaked(pr.params);
  bool first = true;
  for (const auto& [w, c] : r0.terms()) {
    tweaked.add_term(w, first ? c : c * Scalar::from_rat(pr.params, qea::Rat(2)));
    first = false;
  }
  damaged[0] = tweaked;

  RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
  for (const NcPoly& r : damaged) {
    NcPoly monic = r.scale(r.leading().second.inverse());
    NcPoly rhs(pr.params);
    bool lead = true;
    for (const auto& [w, c] : monic.terms()) {
      if (lead) { lead = false; continue; }
      rhs.add_term(w, -c);
    }
    sys.add_rule(r.leading().first, rhs);
  }
  CHECK(!sys.is_closed(6));
}

TEST_CASE("normal word enumeration is ordered and matches irreducibility") {
  RewriteSystem sys = completed_a2();
  std::vector<Word> normal = sys.normal_words_of_weight(4);
  // ascending in the word order
  for (std::size_t i = 1; i < normal.size(); ++i)
    CHECK(qea::lex_less(normal[i - 1], normal[i]));
  // matches a brute-force scan
  std::vector<Word> brute;
  for (const Word& w : oracle::words_of_weight(2, {1, 1}, 4))
    if (sys.word_irreducible(w)) brute.push_back(w);
  std::sort(brute.begin(), brute.end(), qea::lex_less);
  CHECK(normal == brute);

  std::vector<Word> by_c = sys.normal_words_of_constitution({2, 2});
  for (const Word& w : by_c) CHECK(qea::constitution(w, 2) == std::vector<unsigned>{2, 2});
}

TEST_CASE("system JSON round-trip preserves everything") {
  RewriteSystem sys = completed_a2();
  std::string doc = qea::system_to_json(sys);
  RewriteSystem back = qea::system_from_json(sys.symbols(), doc);
  CHECK(back.ngen() == sys.ngen());
  CHECK(back.degrees() == sys.degrees());
  CHECK(back.closed_to() == sys.closed_to());
  REQUIRE(back.rules().size() == sys.rules().size());
  for (std::size_t i = 0; i < sys.rules().size(); ++i) {
    CHECK(back.rules()[i].lhs == sys.rules()[i].lhs);
    CHECK(back.rules()[i].rhs == sys.rules()[i].rhs);
  }
  CHECK(qea::system_to_json(back) == doc);
}

TEST_CASE("add_rule validates its inputs") {
  auto syms = qea::make_symbols({});
  RewriteSystem sys(syms, 2, {1, 1});
  NcPoly bigger = NcPoly::monomial(syms, Word{0, 0}, Scalar::from_rat(syms, qea::Rat(1)));
  CHECK_THROWS(sys.add_rule(Word{1, 1}, bigger));  // rhs word above lhs
}

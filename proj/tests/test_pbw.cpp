#include <doctest/doctest.h>

#include "qea/pbw.hpp"
#include "qea/presentation.hpp"
#include "qea/verify.hpp"
#include "support/oracles.hpp"

using qea::NcPoly;
using qea::Presentation;
using qea::Rat;
using qea::RewriteSystem;
using qea::Series;
using qea::Word;

namespace {

struct Built {
  Presentation pr;
  RewriteSystem sys;
};

Built build(Series s, std::size_t n, long bound = 0,
            const std::map<std::string, Rat>* values = nullptr) {
  Presentation pr = qea::generic_presentation(s, n);
  if (values) pr = qea::specialize(pr, *values);
  if (bound <= 0) bound = qea::verify_bound(s, n);
  RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
  sys.complete(pr.relations, bound);
  return {std::move(pr), std::move(sys)};
}

}  // namespace

TEST_CASE("hard super-letters of the rank-2 presets are the frozen lists") {
  auto a2 = build(Series::A, 2);
  CHECK(qea::hard_super_letters(a2.sys, 6) ==
        std::vector<Word>{{1}, {0}, {0, 1}});

  auto b2 = build(Series::B, 2);
  CHECK(qea::hard_super_letters(b2.sys, 6) ==
        std::vector<Word>{{1}, {0}, {0, 1}, {0, 1, 1}});

  auto c2 = build(Series::C, 2);
  CHECK(qea::hard_super_letters(c2.sys, 6) ==
        std::vector<Word>{{1}, {0}, {0, 1}, {0, 0, 1}});
}

TEST_CASE("hard set certificates accept the computed sets") {
  for (auto [s, n] : {std::pair{Series::A, std::size_t{2}},
                      std::pair{Series::B, std::size_t{2}},
                      std::pair{Series::A, std::size_t{3}}}) {
    auto built = build(s, n);
    long bound = qea::verify_bound(s, n);
    auto hard = qea::hard_super_letters(built.sys, bound);
    auto cert = qea::certify_hard_set(built.sys, hard, bound);
    CAPTURE(cert.detail);
    CHECK(cert.ok);
  }
}

TEST_CASE("certificate rejects wrong sets") {
  auto a2 = build(Series::A, 2);
  // missing letter
  auto missing = qea::certify_hard_set(a2.sys, {{1}, {0}}, 6);
  CHECK(!missing.ok);
  // non-hard word included
  auto extra = qea::certify_hard_set(a2.sys, {{1}, {0}, {0, 1}, {0, 0, 1}}, 6);
  CHECK(!extra.ok);
}

TEST_CASE("graded dimensions: normal words, PBW count, crystal count, oracle") {
  auto b2 = build(Series::B, 2);
  std::vector<long> normal = qea::normal_word_dims(b2.sys, 6);
  CHECK(normal == std::vector<long>{1, 2, 4, 7, 11, 16, 23});

  auto hard = qea::hard_super_letters(b2.sys, 6);
  CHECK(qea::pbw_dims(hard, b2.pr.degrees, 6) == normal);

  for (long d = 1; d <= 6; ++d) {
    auto crystal = qea::crystal_words(hard, b2.pr.degrees, d);
    CHECK(static_cast<long>(crystal.size()) == normal[d]);
    CHECK(crystal == b2.sys.normal_words_of_weight(d));
    // independent linear-algebra count on the free algebra
    CHECK(oracle::quotient_dim(2, b2.pr.degrees, b2.pr.relations, d) == normal[d]);
  }
}

TEST_CASE("crystal words factor into non-decreasing hard letters") {
  auto a3 = build(Series::A, 3);
  auto hard = qea::hard_super_letters(a3.sys, 5);
  for (long d = 1; d <= 5; ++d) {
    for (const Word& w : qea::crystal_words(hard, a3.pr.degrees, d)) {
      auto pieces = qea::standard_factorization(w);
      for (const Word& u : pieces)
        CHECK(std::find(hard.begin(), hard.end(), u) != hard.end());
      for (std::size_t i = 1; i < pieces.size(); ++i)
        CHECK(qea::compare_lex(pieces[i - 1], pieces[i]) <= 0);
    }
  }
}

TEST_CASE("height probes see no reducible power of any hard letter") {
  auto b2 = build(Series::B, 2, 9);  // room for cubes of x1x2x2
  auto hard = qea::hard_super_letters(b2.sys, 3);
  auto reports = qea::heights(b2.sys, hard, 3);
  REQUIRE(reports.size() == hard.size());
  for (const auto& h : reports) {
    CHECK(h.checked_to == 3);
    CHECK(!h.first_reducible_power.has_value());
  }
}

TEST_CASE("a height probe does detect forced powers") {
  // One-relation system with lhs x1x1: the square of the hard letter x1
  // reduces, so the probe must report power 2.
  auto syms = qea::make_symbols({});
  RewriteSystem sys(syms, 1, {1});
  sys.complete({NcPoly::monomial(syms, Word{0, 0}, qea::Scalar::from_rat(syms, Rat(1)))}, 6);
  auto reports = qea::heights(sys, {{0}}, 3);
  REQUIRE(reports.size() == 1);
  REQUIRE(reports[0].first_reducible_power.has_value());
  CHECK(*reports[0].first_reducible_power == 2);
}

TEST_CASE("skew-primitive spaces are trivial at generic parameters") {
  auto a2 = build(Series::A, 2);
  for (unsigned d = 2; d <= 4; ++d)
    for (const auto& c : qea::constitutions_of_degree(2, d))
      CHECK(qea::skew_primitive_space(a2.sys, a2.pr.bichar, c).empty());
}

TEST_CASE("the colour point has the extra primitive in constitution (1,1)") {
  std::map<std::string, Rat> colour = {{"q", Rat(1)}};
  auto a2 = build(Series::A, 2, 0, &colour);
  auto basis = qea::skew_primitive_space(a2.sys, a2.pr.bichar, {1, 1});
  REQUIRE(basis.size() == 1);
  // the element is the skew commutator [x1,x2] up to scale
  NcPoly x1 = NcPoly::generator(a2.pr.params, 0);
  NcPoly x2 = NcPoly::generator(a2.pr.params, 1);
  NcPoly b = qea::skew_commutator(a2.pr.bichar, x1, x2);
  const auto& lead = basis[0].leading();
  NcPoly scaled = b.scale(lead.second * b.leading().second.inverse());
  CHECK(basis[0] == scaled);
}

#include <doctest/doctest.h>

#include "qea/presentation.hpp"
#include "qea/rewrite.hpp"

using qea::CartanData;
using qea::NcPoly;
using qea::Presentation;
using qea::Rat;
using qea::Scalar;
using qea::Series;
using qea::Word;

TEST_CASE("preset names parse case-insensitively with rank limits") {
  auto a3 = qea::parse_preset_name("a3");
  REQUIRE(a3.has_value());
  CHECK(a3->first == Series::A);
  CHECK(a3->second == 3);
  CHECK(qea::parse_preset_name("B2").has_value());
  CHECK(qea::parse_preset_name("d4").has_value());
  CHECK(!qea::parse_preset_name("d3").has_value());  // D needs rank >= 4
  CHECK(!qea::parse_preset_name("a1").has_value());
  CHECK(!qea::parse_preset_name("e6").has_value());
  CHECK(!qea::parse_preset_name("a").has_value());
  CHECK(!qea::parse_preset_name("a2x").has_value());
  CHECK(qea::preset_name(Series::C, 3) == "c3");
}

TEST_CASE("Cartan matrices pin the series orientation") {
  // Chain ties between neighbours are -1; the short-root end of B sits at
  // the last generator with a_{n,n-1} = -2, C transposes that, D forks.
  CartanData b3 = CartanData::series(Series::B, 3);
  CHECK(b3.a[1][2] == -1);
  CHECK(b3.a[2][1] == -2);
  CartanData c3 = CartanData::series(Series::C, 3);
  CHECK(c3.a[1][2] == -2);
  CHECK(c3.a[2][1] == -1);
  CartanData d4 = CartanData::series(Series::D, 4);
  CHECK(d4.a[1][3] == -1);
  CHECK(d4.a[3][1] == -1);
  CHECK(d4.a[2][3] == 0);  // the last two nodes are not adjacent
  CHECK(d4.a[3][2] == 0);
  CHECK(!d4.adjacent(2, 3));
  CHECK(d4.adjacent(1, 3));
}

TEST_CASE("series diagonals and existence conditions") {
  Presentation b2 = qea::generic_presentation(Series::B, 2);
  Scalar q = Scalar::var(b2.params, "q");
  CHECK(b2.bichar.at(0, 0) == q * q);
  CHECK(b2.bichar.at(1, 1) == q);
  CHECK(qea::existence_check(CartanData::series(Series::B, 2), b2.bichar));

  Presentation c2 = qea::generic_presentation(Series::C, 2);
  CHECK(c2.bichar.at(0, 0) == q);
  CHECK(c2.bichar.at(1, 1) == q * q);

  Presentation d4 = qea::generic_presentation(Series::D, 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d4.bichar.at(i, i) == q);
  CHECK(qea::existence_check(CartanData::series(Series::D, 4), d4.bichar));

  // p_ij p_ji = p_ii^{a_ij} for a sample pair
  Presentation a2 = qea::generic_presentation(Series::A, 2);
  CHECK(a2.bichar.at(0, 1) * a2.bichar.at(1, 0) == a2.bichar.at(0, 0).pow(-1));
}

TEST_CASE("breaking a bicharacter entry breaks the existence check") {
  Presentation a2 = qea::generic_presentation(Series::A, 2);
  std::vector<std::vector<Scalar>> m = {
      {a2.bichar.at(0, 0), a2.bichar.at(0, 1)},
      {a2.bichar.at(1, 0) * Scalar::var(a2.params, "q"), a2.bichar.at(1, 1)}};
  qea::Bicharacter broken(a2.params, m);
  CHECK(!qea::existence_check(CartanData::series(Series::A, 2), broken));
}

TEST_CASE("serre relations have the expected leading words") {
  Presentation a3 = qea::generic_presentation(Series::A, 3);
  // adjacent pairs contribute two cubic relations each, non-adjacent one
  // quadratic: (1,2), (2,3) adjacent, (1,3) not
  REQUIRE(a3.relations.size() == 5);
  std::vector<Word> leads;
  for (const NcPoly& r : a3.relations) leads.push_back(r.leading().first);
  std::sort(leads.begin(), leads.end(), qea::lex_less);
  std::vector<Word> expect = {{0, 0, 1}, {0, 1, 1}, {1, 1, 2}, {1, 2, 2}, {0, 2}};
  std::sort(expect.begin(), expect.end(), qea::lex_less);
  CHECK(leads == expect);
}

TEST_CASE("relation expression parser") {
  Presentation a2 = qea::generic_presentation(Series::A, 2);
  const qea::Bicharacter& p = a2.bichar;
  Scalar q = Scalar::var(a2.params, "q");
  Scalar t = Scalar::var(a2.params, "t12");

  NcPoly x1 = NcPoly::generator(a2.params, 0);
  NcPoly x2 = NcPoly::generator(a2.params, 1);

  CHECK(qea::parse_relation(p, "x1x2") == x1 * x2);
  CHECK(qea::parse_relation(p, "x1 * x2 - x2*x1") == x1 * x2 - x2 * x1);
  CHECK(qea::parse_relation(p, "(1+q)*x1x2") == (x1 * x2).scale(q + Scalar::from_rat(a2.params, Rat(1))));
  CHECK(qea::parse_relation(p, "[x1,x2]") == qea::skew_commutator(p, x1, x2));
  CHECK(qea::parse_relation(p, "[x1,[x1,x2]]") ==
        qea::skew_commutator(p, x1, qea::skew_commutator(p, x1, x2)));
  CHECK(qea::parse_relation(p, "x1^3") == x1.pow(3));
  CHECK(qea::parse_relation(p, "q^-2*t12*x1") == x1.scale(q.pow(-2) * t));
  CHECK(qea::parse_relation(p, "3/4*x1") == x1.scale(Scalar::from_rat(a2.params, Rat(3, 4))));

  CHECK_THROWS_AS(qea::parse_relation(p, "x1^-1"), qea::parse_error);   // nonscalar negative power
  CHECK_THROWS_AS(qea::parse_relation(p, "1/x1"), qea::parse_error);    // nonscalar division
  CHECK_THROWS_AS(qea::parse_relation(p, "[x1+x2,x1]"), qea::domain_error);  // inhomogeneous bracket
  CHECK_THROWS_AS(qea::parse_relation(p, "x9"), qea::parse_error);
  CHECK_THROWS_AS(qea::parse_relation(p, "zz*x1"), qea::parse_error);
  CHECK_THROWS_AS(qea::parse_relation(p, "(x1"), qea::parse_error);
}

TEST_CASE("presentation JSON round-trip and hashing") {
  Presentation a3 = qea::generic_presentation(Series::A, 3);
  std::string doc = qea::presentation_to_json(a3);
  Presentation back = qea::presentation_from_json(doc);
  CHECK(back.ngen == a3.ngen);
  CHECK(back.degrees == a3.degrees);
  CHECK(back.kind == a3.kind);
  CHECK(back.relations.size() == a3.relations.size());
  for (std::size_t i = 0; i < a3.relations.size(); ++i)
    CHECK(back.relations[i] == a3.relations[i]);
  CHECK(qea::presentation_hash(back) == qea::presentation_hash(a3));
  CHECK(qea::presentation_to_json(back) == doc);

  // kind is advisory: dropping it must not change the hash
  Presentation anon = a3;
  anon.kind.reset();
  CHECK(qea::presentation_hash(anon) == qea::presentation_hash(a3));

  // but any real ingredient changes it
  Presentation fewer = a3;
  fewer.relations.pop_back();
  CHECK(qea::presentation_hash(fewer) != qea::presentation_hash(a3));
}

TEST_CASE("presentation JSON rejects malformed documents") {
  CHECK_THROWS_AS(qea::presentation_from_json("not json"), qea::parse_error);
  CHECK_THROWS_AS(qea::presentation_from_json("{}"), qea::parse_error);
  CHECK_THROWS_AS(qea::presentation_from_json(
                      R"({"generators":2,"degrees":[1],"parameters":[],
                          "bicharacter":[["1","1"],["1","1"]],"relations":[]})"),
                  qea::parse_error);
  // inhomogeneous relation
  CHECK_THROWS_AS(qea::presentation_from_json(
                      R"({"generators":2,"degrees":[1,1],"parameters":[],
                          "bicharacter":[["1","1"],["1","1"]],
                          "relations":["x1x2-x1"]})"),
                  qea::domain_error);
  // zero bicharacter entry
  CHECK_THROWS_AS(qea::presentation_from_json(
                      R"({"generators":1,"degrees":[1],"parameters":[],
                          "bicharacter":[["0"]],"relations":[]})"),
                  qea::domain_error);
  // parameter name colliding with generator tokens
  CHECK_THROWS_AS(qea::presentation_from_json(
                      R"({"generators":1,"degrees":[1],"parameters":["x1"],
                          "bicharacter":[["1"]],"relations":[]})"),
                  qea::parse_error);
}

TEST_CASE("specialization substitutes everywhere and detects poles") {
  Presentation a2 = qea::generic_presentation(Series::A, 2);
  Presentation sp = qea::specialize(a2, {{"q", Rat(2)}, {"t12", Rat(3)}});
  CHECK(sp.bichar.at(0, 0) == Scalar::from_rat(sp.params, Rat(2)));
  CHECK(sp.bichar.at(0, 1) == Scalar::from_rat(sp.params, Rat(3)));
  CHECK(sp.bichar.at(1, 0) == Scalar::from_rat(sp.params, Rat(1, 6)));
  CHECK(sp.kind == a2.kind);
  // relations rebuilt with numeric coefficients but same leading words
  REQUIRE(sp.relations.size() == a2.relations.size());
  for (std::size_t i = 0; i < sp.relations.size(); ++i)
    CHECK(sp.relations[i].leading().first == a2.relations[i].leading().first);

  // q = 0 kills the bicharacter: rejected
  CHECK_THROWS_AS(qea::specialize(a2, {{"q", Rat(0)}}), qea::domain_error);
  CHECK_THROWS_AS(qea::specialize(a2, {{"nope", Rat(1)}}), qea::domain_error);

  // partial specialization keeps the other parameter symbolic
  Presentation half = qea::specialize(a2, {{"q", Rat(2)}});
  CHECK(half.bichar.at(0, 1) == Scalar::var(half.params, "t12"));
}

TEST_CASE("z-deformation twists the bicharacter and keeps existence") {
  std::vector<std::vector<Rat>> z = {{Rat(1), Rat(5, 2)}, {Rat(2, 5), Rat(1)}};
  Presentation tw = qea::z_deformed_presentation(Series::A, 2, z);
  Presentation plain = qea::generic_presentation(Series::A, 2);
  CHECK(tw.bichar.at(0, 1) == plain.bichar.at(0, 1) * Scalar::from_rat(tw.params, Rat(5, 2)));
  CHECK(tw.bichar.at(0, 0) == plain.bichar.at(0, 0));
  CHECK(qea::existence_check(CartanData::series(Series::A, 2), tw.bichar));
  CHECK(tw.kind.has_value());

  // invalid cocycles are rejected
  std::vector<std::vector<Rat>> bad_diag = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK_THROWS_AS(qea::z_deformed_presentation(Series::A, 2, bad_diag), qea::domain_error);
  std::vector<std::vector<Rat>> bad_pair = {{Rat(1), Rat(2)}, {Rat(2), Rat(1)}};
  CHECK_THROWS_AS(qea::z_deformed_presentation(Series::A, 2, bad_pair), qea::domain_error);
}

TEST_CASE("expected lists are internally consistent") {
  for (auto [s, n, hard, gs] :
       {std::tuple{Series::A, std::size_t{2}, std::size_t{3}, std::size_t{2}},
        std::tuple{Series::A, std::size_t{3}, std::size_t{6}, std::size_t{7}},
        std::tuple{Series::A, std::size_t{4}, std::size_t{10}, std::size_t{15}},
        std::tuple{Series::B, std::size_t{2}, std::size_t{4}, std::size_t{3}},
        std::tuple{Series::B, std::size_t{3}, std::size_t{9}, std::size_t{12}},
        std::tuple{Series::C, std::size_t{2}, std::size_t{4}, std::size_t{3}},
        std::tuple{Series::C, std::size_t{3}, std::size_t{9}, std::size_t{12}},
        std::tuple{Series::D, std::size_t{4}, std::size_t{12}, std::size_t{22}}}) {
    qea::ExpectedLists e = qea::expected_lists(s, n);
    CAPTURE(qea::preset_name(s, n));
    CHECK(e.hard.size() == hard);
    CHECK(e.gs_leading.size() == gs);
    for (const Word& w : e.hard) CHECK(qea::is_standard(w));
    for (const Word& w : e.gs_leading) CHECK(qea::is_standard(w));
    // no expected rule word may be hard and vice versa
    for (const Word& w : e.gs_leading)
      CHECK(std::find(e.hard.begin(), e.hard.end(), w) == e.hard.end());
    long bound = qea::verify_bound(s, n);
    for (const Word& w : e.hard) CHECK(static_cast<long>(w.size()) <= bound);
    for (const Word& w : e.gs_leading) CHECK(static_cast<long>(w.size()) <= bound);
  }
}

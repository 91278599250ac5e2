#include <doctest/doctest.h>

#include "qea/verify.hpp"

using qea::Series;

TEST_CASE("constitution enumeration is lexicographic and complete") {
  auto cs = qea::constitutions_of_degree(2, 2);
  CHECK(cs == std::vector<std::vector<unsigned>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(qea::constitutions_of_degree(3, 4).size() == 15);  // C(4+2,2)
  CHECK(qea::constitutions_of_degree(1, 5) ==
        std::vector<std::vector<unsigned>>{{5}});
}

TEST_CASE("the smallest preset verifies end to end") {
  qea::PresetReport r = qea::verify_preset(Series::A, 2);
  CHECK(r.pass());
  CHECK(r.preset == "a2");
  CHECK(r.bound == 6);
  CHECK(r.hard_computed.size() == 3);
  CHECK(r.gs_computed.size() == 2);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(r.dims_normal == std::vector<long>{1, 2, 4, 6, 9, 12, 16});
  CHECK(r.dims_normal == r.dims_pbw);
  CHECK(r.dims_normal == r.dims_crystal);
}

TEST_CASE("an insufficient bound is reported, not silently passed") {
  qea::PresetReport r = qea::verify_preset(Series::A, 4, 3);
  CHECK(!r.pass());
  bool flagged = false;
  for (const auto& c : r.checks)
    if (c.name == "bound-sufficient" && !c.pass) flagged = true;
  CHECK(flagged);
}

TEST_CASE("report rendering is deterministic") {
  qea::PresetReport a = qea::verify_preset(Series::A, 2);
  qea::PresetReport b = qea::verify_preset(Series::A, 2);
  CHECK(qea::report_to_json(a) == qea::report_to_json(b));
  CHECK(qea::report_to_text(a) == qea::report_to_text(b));
  CHECK(qea::report_to_json(a).find("\"pass\": true") != std::string::npos);
}

TEST_CASE("specialized runs still verify the word data") {
  std::map<std::string, qea::Rat> values = {{"q", qea::Rat(3)},
                                            {"t12", qea::Rat(-2)}};
  qea::PresetReport r = qea::verify_preset(Series::A, 2, 0, &values);
  CHECK(r.specialized);
  CHECK(r.pass());
}

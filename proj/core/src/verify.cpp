#include "qea/verify.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qea {

namespace {

std::string word_list_diff(const std::vector<Word>& computed,
                           const std::vector<Word>& expected) {
  std::ostringstream os;
  for (const Word& w : computed)
    if (std::find(expected.begin(), expected.end(), w) == expected.end())
      os << " +" << word_string(w);
  for (const Word& w : expected)
    if (std::find(computed.begin(), computed.end(), w) == computed.end())
      os << " -" << word_string(w);
  std::string s = os.str();
  return s.empty() ? s : "unexpected/missing:" + s;
}

std::string constitution_string(const std::vector<unsigned>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace

bool PresetReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::vector<std::vector<unsigned>> constitutions_of_degree(std::size_t ngen,
                                                           unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> c(ngen, 0);
  // lexicographic enumeration by leftmost-heavy descent
  auto rec = [&](auto&& self, std::size_t i, unsigned rest) -> void {
    if (i + 1 == ngen) {
      c[i] = rest;
      out.push_back(c);
      return;
    }
    for (unsigned v = rest + 1; v-- > 0;) {
      c[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  if (ngen > 0) rec(rec, 0, degree);
  return out;
}

PresetReport verify_preset(Series s, std::size_t n, long bound,
                           const std::map<std::string, Rat>* specialization) {
  PresetReport r;
  r.preset = preset_name(s, n);
  r.bound = bound > 0 ? bound : verify_bound(s, n);
  Presentation pr = generic_presentation(s, n);
  if (specialization) {
    pr = specialize(pr, *specialization);
    r.specialized = true;
  }
  r.hash = presentation_hash(pr);
  CartanData cd = CartanData::series(s, n);

  auto check = [&](std::string name, bool pass, std::string detail = "") {
    r.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
  };

  // A bound below the preset's own decision bound cannot settle the expected
  // comparisons; flag it instead of letting truncated lists fail cryptically.
  if (long needed = verify_bound(s, n); r.bound < needed)
    check("bound-sufficient", false,
          "bound " + std::to_string(r.bound) + " below the decision bound " +
              std::to_string(needed));

  check("existence-conditions", existence_check(cd, pr.bichar));

  RewriteSystem sys(pr.params, pr.ngen, pr.degrees);
  sys.complete(pr.relations, r.bound);

  bool relations_vanish = true;
  for (const NcPoly& rel : pr.relations)
    if (!sys.reduce(rel).is_zero()) relations_vanish = false;
  check("relations-vanish", relations_vanish);

  ExpectedLists expected = expected_lists(s, n);
  r.gs_expected = expected.gs_leading;
  r.hard_expected = expected.hard;

  r.gs_computed = sys.leading_words();
  check("gs-leading-words", r.gs_computed == r.gs_expected,
        word_list_diff(r.gs_computed, r.gs_expected));

  r.hard_computed = hard_super_letters(sys, r.bound);
  check("hard-letters", r.hard_computed == r.hard_expected,
        word_list_diff(r.hard_computed, r.hard_expected));

  HardSetCertificate cert = certify_hard_set(sys, r.hard_computed, r.bound);
  check("hard-certificate", cert.ok, cert.detail);

  r.height_reports = heights(sys, r.hard_computed, 3);
  bool unbounded = true;
  std::string height_detail;
  for (const HeightReport& h : r.height_reports) {
    if (h.first_reducible_power) {
      unbounded = false;
      height_detail = word_string(h.word) + "^" +
                      std::to_string(*h.first_reducible_power) + " reduces";
      break;
    }
  }
  check("heights-unbounded-to-3", unbounded, height_detail);

  r.dims_normal = normal_word_dims(sys, r.bound);
  r.dims_pbw = pbw_dims(r.hard_computed, pr.degrees, r.bound);
  r.dims_crystal.assign(static_cast<std::size_t>(r.bound) + 1, 0);
  r.dims_crystal[0] = 1;
  bool dims_ok = r.dims_normal == r.dims_pbw;
  std::string dims_detail = dims_ok ? "" : "multiset count differs from normal words";
  for (long d = 1; d <= r.bound; ++d) {
    std::vector<Word> crystal = crystal_words(r.hard_computed, pr.degrees, d);
    r.dims_crystal[static_cast<std::size_t>(d)] = static_cast<long>(crystal.size());
    if (crystal != sys.normal_words_of_weight(d) && dims_ok) {
      dims_ok = false;
      dims_detail = "crystal words differ from normal words at degree " +
                    std::to_string(d);
    }
  }
  check("dimension-agreement", dims_ok, dims_detail);

  bool prim_ok = true;
  std::string prim_detail;
  for (unsigned d = 2; d <= 4 && static_cast<long>(d) <= r.bound; ++d) {
    for (const std::vector<unsigned>& c : constitutions_of_degree(pr.ngen, d)) {
      std::size_t dim = skew_primitive_space(sys, pr.bichar, c).size();
      r.primitive_dims.emplace_back(c, dim);
      if (dim != 0 && prim_ok) {
        prim_ok = false;
        prim_detail = "nonzero space at constitution (" + constitution_string(c) + ")";
      }
    }
  }
  if (r.specialized)
    check("primitive-spaces-trivial", true,
          prim_ok ? "computed, not enforced at specialized parameters"
                  : "nonzero dimensions present; not enforced at specialized "
                    "parameters");
  else
    check("primitive-spaces-trivial", prim_ok, prim_detail);

  return r;
}

namespace {

nlohmann::ordered_json words_json(const std::vector<Word>& words) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Word& w : words) a.push_back(word_string(w));
  return a;
}

nlohmann::ordered_json report_json(const PresetReport& r) {
  nlohmann::ordered_json j;
  j["preset"] = r.preset;
  {
    std::ostringstream os;
    os << std::hex << r.hash;
    j["presentation_hash"] = os.str();
  }
  j["bound"] = r.bound;
  j["specialized"] = r.specialized;
  j["pass"] = r.pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["gs_leading"] = {{"computed", words_json(r.gs_computed)},
                     {"expected", words_json(r.gs_expected)}};
  j["hard_letters"] = {{"computed", words_json(r.hard_computed)},
                       {"expected", words_json(r.hard_expected)}};
  nlohmann::ordered_json hj = nlohmann::ordered_json::array();
  for (const HeightReport& h : r.height_reports) {
    nlohmann::ordered_json e;
    e["word"] = word_string(h.word);
    e["checked_to"] = h.checked_to;
    if (h.first_reducible_power)
      e["first_reducible_power"] = *h.first_reducible_power;
    else
      e["verdict"] = "infinite up to " + std::to_string(h.checked_to);
    hj.push_back(std::move(e));
  }
  j["heights"] = std::move(hj);
  j["dimensions"] = {{"normal_words", r.dims_normal},
                     {"pbw_multisets", r.dims_pbw},
                     {"crystal_words", r.dims_crystal}};
  nlohmann::ordered_json pj = nlohmann::ordered_json::array();
  for (const auto& [c, dim] : r.primitive_dims) {
    nlohmann::ordered_json e;
    e["constitution"] = constitution_string(c);
    e["dimension"] = dim;
    pj.push_back(std::move(e));
  }
  j["primitive_spaces"] = std::move(pj);
  return j;
}

}  // namespace

std::string report_to_json(const PresetReport& r) { return report_json(r).dump(2); }

std::string report_to_text(const PresetReport& r) {
  std::ostringstream os;
  os << "preset " << r.preset << "  bound " << r.bound
     << (r.specialized ? "  (specialized)" : "") << "\n";
  for (const CheckResult& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << "\n";
  }
  os << "  hard letters (" << r.hard_computed.size() << "):";
  for (const Word& w : r.hard_computed) os << " " << word_string(w);
  os << "\n  gs leading words (" << r.gs_computed.size() << "):";
  for (const Word& w : r.gs_computed) os << " " << word_string(w);
  os << "\n  dims (normal):";
  for (long d : r.dims_normal) os << " " << d;
  os << "\n  " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace qea

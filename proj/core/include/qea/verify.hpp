// verify.hpp: end-to-end verification of a series preset against its
// expected outputs.
//
// A verification run builds the preset (optionally at specialized parameter
// values), completes the rewriting system to the preset's bound, and then
// checks every claim the engine can decide exactly: the existence
// conditions, the leading words of the closed system, the PBW generator
// set with its inductive certificate, the bounded height probes, the
// degreewise agreement of the three dimension counts, and the triviality
// of the low-degree skew-primitive spaces. Every comparison is an exact
// set or dimension match; the report records computed and expected data
// side by side so a failure is diagnosable from the artifact alone.
#ifndef QEA_VERIFY_HPP
#define QEA_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qea/pbw.hpp"
#include "qea/presentation.hpp"
#include "qea/rewrite.hpp"

namespace qea {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch or a short note; empty when clean
};

struct PresetReport {
  std::string preset;
  std::uint64_t hash = 0;
  long bound = 0;
  bool specialized = false;
  std::vector<CheckResult> checks;

  std::vector<Word> gs_computed, gs_expected;
  std::vector<Word> hard_computed, hard_expected;
  std::vector<HeightReport> height_reports;
  std::vector<long> dims_normal, dims_pbw, dims_crystal;
  // (constitution, dimension) for every constitution of total degree 2..4
  std::vector<std::pair<std::vector<unsigned>, std::size_t>> primitive_dims;

  bool pass() const;
};

// Runs the whole pipeline for one preset. `bound` 0 means the preset's own
// verify_bound. When `specialization` is non-null the parameters are
// substituted first and the zero-dimension expectations on the primitive
// spaces are reported but not enforced (special parameter values may create
// honest extra primitives).
PresetReport verify_preset(Series s, std::size_t n, long bound = 0,
                           const std::map<std::string, Rat>* specialization = nullptr);

// Canonical JSON rendering (deterministic, no timing data).
std::string report_to_json(const PresetReport& r);
std::string report_to_text(const PresetReport& r);

// All constitutions over `ngen` generators of the given total degree,
// in lexicographic order.
std::vector<std::vector<unsigned>> constitutions_of_degree(std::size_t ngen,
                                                           unsigned degree);

}  // namespace qea

#endif

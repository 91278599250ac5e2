// fuzz.hpp: seeded randomized checking of the skew-commutator identities.
//
// Each trial draws a fresh bicharacter matrix with nonzero rational entries
// and random short words, then evaluates the defining identities exactly.
// The defects must vanish identically, so any nonzero result is a failure.
// Runs are reproducible: the same (rank, trials, seed, mode) triple always
// performs the same trials.
#ifndef QEA_FUZZ_HPP
#define QEA_FUZZ_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qea {

enum class FuzzMode {
  // Random matrix, random words u,v,w; checks both reassociation forms,
  // both Leibniz forms, and the square identity.
  general,
  // Forces p(v,v) = -1 for a single-letter v and checks that the square
  // identity collapses to [u,v^2] = [[u,v],v] (the correction term carries
  // the factor 1 + p(v,v)).
  square_minus_one,
};

struct FuzzReport {
  std::size_t rank = 0;
  unsigned long trials = 0;
  unsigned long seed = 0;
  FuzzMode mode = FuzzMode::general;
  unsigned long checks = 0;    // individual identity evaluations
  unsigned long failures = 0;  // nonzero defects
  std::vector<std::string> failing;  // description of the first few failures
};

FuzzReport fuzz_identities(std::size_t rank, unsigned long trials,
                           unsigned long seed,
                           FuzzMode mode = FuzzMode::general);

std::string fuzz_report_to_json(const FuzzReport& r);
std::string fuzz_report_to_text(const FuzzReport& r);

}  // namespace qea

#endif

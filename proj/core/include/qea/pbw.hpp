// pbw.hpp: PBW generators of a closed system and everything derived from
// them: bounded height probes, graded dimensions, crystal words, the
// skew-primitive spaces, and an inductive certificate that a proposed
// generator set is complete.
//
// A PBW generator ("hard" word) is a standard word that is irreducible with
// respect to the closed system. Every irreducible word factors uniquely as
// a non-decreasing concatenation of hard words, which is what ties the
// three dimension counts (irreducible words, multisets of hard words,
// quotient of the free algebra by the ideal) together degree by degree.
#ifndef QEA_PBW_HPP
#define QEA_PBW_HPP

#include <optional>
#include <string>
#include <vector>

#include "qea/bicharacter.hpp"
#include "qea/hopf.hpp"
#include "qea/rewrite.hpp"

namespace qea {

// Standard irreducible words of weight <= bound, sorted ascending by
// (weight, word order).
std::vector<Word> hard_super_letters(const RewriteSystem& sys, long bound);

struct HeightReport {
  Word word;
  unsigned checked_to = 0;  // largest power probed
  // Smallest h <= checked_to with u^h reducible; empty when no probed
  // power reduces (height is infinite as far as the probe can see).
  std::optional<unsigned> first_reducible_power;
};

// Probes u^2 .. u^max_power for reducibility, for each given word.
std::vector<HeightReport> heights(const RewriteSystem& sys,
                                  const std::vector<Word>& hard,
                                  unsigned max_power);

// dims[d] = number of irreducible words of weight d, for d = 0..max_weight.
std::vector<long> normal_word_dims(const RewriteSystem& sys, long max_weight);

// dims[d] = number of multisets of the given words with total weight d:
// the coefficients of prod_u 1/(1 - x^{weight(u)}) up to max_weight.
std::vector<long> pbw_dims(const std::vector<Word>& hard,
                           const std::vector<unsigned>& degrees, long max_weight);

// All concatenations u1 u2 .. uk of hard words with u1 <= u2 <= .. <= uk in
// the word order and total weight `target`, sorted ascending. When `hard`
// is the true generator set these are exactly the irreducible words.
std::vector<Word> crystal_words(const std::vector<Word>& hard,
                                const std::vector<unsigned>& degrees, long target);

// Basis of the space of skew-primitive elements of the given constitution
// in the quotient, each expressed on irreducible words.
std::vector<NcPoly> skew_primitive_space(const RewriteSystem& sys,
                                         const Bicharacter& p,
                                         const std::vector<unsigned>& c);

struct HardSetCertificate {
  bool ok = false;
  std::string detail;  // first failure; empty when ok
};

// Certifies, without re-enumerating words, that `hard` is exactly the set
// of standard irreducible words of weight <= bound: each element must be
// standard and irreducible, the single letters must appear iff irreducible,
// the system must be closed to the bound, and for every pair u > v in the
// set whose concatenation is standard, irreducible, of weight <= bound and
// splits at |u|, the concatenation must again be in the set. Induction on
// the weight then covers every hard word.
HardSetCertificate certify_hard_set(const RewriteSystem& sys,
                                    const std::vector<Word>& hard, long bound);

}  // namespace qea

#endif

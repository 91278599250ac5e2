// rewrite.hpp: weight-bounded Groebner-Shirshov rewriting for the free
// algebra over the scalar field.
//
// A rule is a monic leading word together with a tail of strictly smaller
// words of the same constitution; rewriting replaces the leading word
// wherever it occurs as a factor. Because every rule is homogeneous, a
// composition of weight above the bound can only ever produce rules above
// the bound, so completing up to a weight bound computes exactly the
// bounded part of the full system.
#ifndef QEA_REWRITE_HPP
#define QEA_REWRITE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qea/ncpoly.hpp"

namespace qea {

struct RewriteRule {
  Word lhs;     // monic leading word
  NcPoly rhs;   // lhs equals rhs in the quotient; every word of rhs < lhs
};

class RewriteSystem {
 public:
  RewriteSystem(SymbolsPtr syms, std::size_t ngen, std::vector<unsigned> degrees);

  std::size_t ngen() const { return ngen_; }
  const SymbolsPtr& symbols() const { return syms_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  long closed_to() const { return closed_to_; }

  // Validates ordering and homogeneity; invalidates the normal-form cache.
  void add_rule(Word lhs, NcPoly rhs);

  // Records a closure bound established elsewhere (deserialization).
  void mark_closed(long bound) { closed_to_ = bound; }

  bool word_irreducible(const Word& w) const;
  // Leftmost match, lowest rule index at that position.
  std::optional<std::pair<std::size_t, std::size_t>> find_match(const Word& w) const;

  NcPoly reduce_word(const Word& w) const;  // cached per system state
  NcPoly reduce(const NcPoly& f) const;

  // Every composition (overlap and inclusion ambiguity) whose ambiguity word
  // has weight <= max_weight reduces to zero.
  bool is_closed(long max_weight) const;

  // Deterministic bounded completion: adds the relations, closes under
  // compositions of weight <= max_weight, interreduces, sorts rules by
  // (weight, word order ascending), and ends with a full verification pass.
  // Relations must be constitution-homogeneous; relations and compositions
  // of weight above the bound are dropped.
  void complete(const std::vector<NcPoly>& relations, long max_weight);

  std::vector<Word> leading_words() const;

  // Irreducible words, sorted ascending in the word order.
  std::vector<Word> normal_words_of_weight(long target) const;
  std::vector<Word> normal_words_of_constitution(const std::vector<unsigned>& c) const;

 private:
  struct Ambiguity {
    Word word;          // the ambiguous word
    std::size_t i, j;   // rules involved
    std::size_t shift;  // position where rule j's lhs starts inside word
  };
  std::vector<Ambiguity> ambiguities_with(std::size_t k, long max_weight) const;
  NcPoly composition_defect(const Ambiguity& a) const;

  SymbolsPtr syms_;
  std::size_t ngen_;
  std::vector<unsigned> degrees_;
  std::vector<RewriteRule> rules_;
  long closed_to_ = -1;
  mutable std::map<Word, NcPoly> nf_cache_;
};

// Canonical JSON round-trip for a computed system (used by the cache layer
// and the CLI). The symbol table travels separately.
std::string system_to_json(const RewriteSystem& sys);
RewriteSystem system_from_json(SymbolsPtr syms, std::string_view text);

}  // namespace qea

#endif

// word.hpp: words over the generators and their standard-word combinatorics.
//
// Letters are 0-based generator indices; generator i prints as x<i+1>.
// The word order used throughout ranks x1 highest: at the first differing
// position the smaller index wins, and a proper prefix beats its extension.
// Standard words are the words strictly greater than all their proper
// endings in that order. Reading letters in the opposite direction turns
// this order into ordinary lexicographic order and standard words into
// classical Lyndon words, so the factorization code below is Duval's
// algorithm with comparisons flipped.
#ifndef QEA_WORD_HPP
#define QEA_WORD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qea/errors.hpp"

namespace qea {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Paper order described above: negative if a < b, 0 if equal, positive if
// a > b.
int compare_lex(const Word& a, const Word& b);
inline bool lex_less(const Word& a, const Word& b) { return compare_lex(a, b) < 0; }
inline bool lex_greater(const Word& a, const Word& b) { return compare_lex(a, b) > 0; }

// Weighted length of a word; `degrees[i]` is the degree of generator i.
long weight(const Word& w, const std::vector<unsigned>& degrees);

// Hall order: heavier words are greater, ties break by the word order.
int compare_hall(const Word& a, const Word& b, const std::vector<unsigned>& degrees);

// Word greater than all of its proper endings (nonempty).
bool is_standard(const Word& w);

// Unique factorization w = u1 u2 ... uk with each ui standard and
// u1 <= u2 <= ... <= uk in the word order.
std::vector<Word> standard_factorization(const Word& w);

// Multiplicity vector of the generators in w.
std::vector<unsigned> constitution(const Word& w, std::size_t ngen);

// Immutable binary bracketing of a word. Cheap to copy.
class BracketTree {
 public:
  static BracketTree leaf(Letter l);
  static BracketTree node(const BracketTree& left, const BracketTree& right);

  bool is_leaf() const { return !left_; }
  Letter letter() const;
  const BracketTree& left() const;
  const BracketTree& right() const;
  const Word& word() const { return word_; }

  bool operator==(const BracketTree& o) const;
  bool operator!=(const BracketTree& o) const { return !(*this == o); }

  // "[[x1,x2],x3]"; a leaf prints as "x1".
  std::string to_string() const;

 private:
  BracketTree() = default;
  Word word_;
  std::shared_ptr<const BracketTree> left_, right_;
};

// Split point of a standard word of length >= 2: the smallest p >= 1 such
// that w[0,p) and w[p,end) are both standard.
std::size_t standard_split(const Word& w);

// The canonical bracketing: split recursively at standard_split.
BracketTree standard_bracketing(const Word& w);

std::string word_string(const Word& w);

// Inverse of word_string: "x1x2x2". Indices must lie in [1, ngen].
Word parse_word(std::string_view text, std::size_t ngen);

}  // namespace qea

#endif

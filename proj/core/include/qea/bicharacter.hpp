// bicharacter.hpp: the parametric pairing p(u,v) on words.
//
// p is determined by an n x n matrix of nonzero scalars p_ij and extends to
// words multiplicatively in both arguments: p(u,v) = prod p_ij^{mi(u) mj(v)}
// where mi counts occurrences of generator i. Group elements of the ambient
// group algebra are written multiplicatively as integer exponent vectors on
// the distinguished grouplikes g_1..g_n; chi(u, g) is the factor picked up
// when the word u moves left past g.
#ifndef QEA_BICHARACTER_HPP
#define QEA_BICHARACTER_HPP

#include <vector>

#include "qea/scalar.hpp"
#include "qea/word.hpp"

namespace qea {

// Exponent vector of a product of the grouplikes g_1..g_n.
using GroupExp = std::vector<long>;

GroupExp group_of_constitution(const std::vector<unsigned>& c);

class Bicharacter {
 public:
  Bicharacter(SymbolsPtr syms, std::vector<std::vector<Scalar>> entries);

  std::size_t rank() const { return entries_.size(); }
  const SymbolsPtr& symbols() const { return syms_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  Scalar of_constitutions(const std::vector<unsigned>& cu,
                          const std::vector<unsigned>& cv) const;
  Scalar of_words(const Word& u, const Word& v) const;

  // chi^u(g^h) = prod p_ij^{mi(u) h_j}; h may have negative entries.
  Scalar chi(const std::vector<unsigned>& cu, const GroupExp& h) const;

 private:
  SymbolsPtr syms_;
  std::vector<std::vector<Scalar>> entries_;
};

}  // namespace qea

#endif

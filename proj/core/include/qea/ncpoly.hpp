// ncpoly.hpp: polynomials in the free associative algebra over the scalar
// field, with the skew commutator.
//
// Terms are kept greatest-first in the word order. All algebra elements the
// engine manipulates are constitution-homogeneous; within one constitution
// the word order and the Hall order coincide, so begin() is the leading term
// in both senses.
#ifndef QEA_NCPOLY_HPP
#define QEA_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qea/bicharacter.hpp"
#include "qea/scalar.hpp"
#include "qea/word.hpp"

namespace qea {

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return compare_lex(a, b) > 0; }
};

class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(SymbolsPtr syms) : syms_(std::move(syms)) {}

  static NcPoly monomial(SymbolsPtr syms, Word w, Scalar c);
  static NcPoly generator(SymbolsPtr syms, Letter l);
  static NcPoly constant(SymbolsPtr syms, Scalar c);

  const SymbolsPtr& symbols() const { return syms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar, WordGreater>& terms() const { return terms_; }

  void add_term(const Word& w, const Scalar& c);
  const std::pair<const Word, Scalar>& leading() const;

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;  // concatenation product
  NcPoly scale(const Scalar& c) const;
  NcPoly pow(unsigned e) const;
  NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
  NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  // The shared constitution of all terms, or nullopt if terms mix
  // constitutions. Zero has the empty constitution (all zeros).
  std::optional<std::vector<unsigned>> homogeneous_constitution(std::size_t ngen) const;

  // "x1x1x2-(1+q)*x1x2x1+q*x2x1x1"; round-trips through the relation parser.
  std::string to_string() const;

 private:
  SymbolsPtr syms_;
  std::map<Word, Scalar, WordGreater> terms_;
};

// [u,v] = uv - p(u,v) vu, extended bilinearly. Both operands must be
// constitution-homogeneous (domain_error otherwise): p(u,v) depends only on
// the constitutions.
NcPoly skew_commutator(const Bicharacter& p, const NcPoly& u, const NcPoly& v);

// Value of a bracketed word: leaves are generators, nodes skew commutators.
NcPoly super_letter_value(const Bicharacter& p, const BracketTree& t);

// Defining identities of the skew commutator. Each defect is lhs - rhs of
// an identity that holds for all homogeneous u, v, w; the last one also
// needs no hypothesis because the failure term carries the factor 1 + p(v,v).
enum class BracketIdentity {
  reassociate_a,   // [[u,v],w] = [u,[v,w]] + pwv^-1 [[u,w],v] + (pvw - pwv^-1)[u,w]v
  reassociate_b,   // [[u,v],w] = [u,[v,w]] + pvw [[u,w],v] + puv(pvw pwv - 1) v[u,w]
  leibniz_right,   // [u,vw] = [u,v]w + puv v[u,w]
  leibniz_left,    // [uv,w] = pvw [u,w]v + u[v,w]
  square,          // [u,v^2] = [[u,v],v] + puv(1 + pvv)(vuv - puv v^2 u)
};

// lhs - rhs for monomial arguments; identically zero when the identity holds.
// `square` ignores w.
NcPoly bracket_identity_defect(const Bicharacter& p, BracketIdentity id,
                               const Word& u, const Word& v, const Word& w);

}  // namespace qea

#endif

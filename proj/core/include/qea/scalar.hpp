// scalar.hpp: the exact coefficient field.
//
// Scalars are multivariate rational functions over Q in a fixed, ordered set
// of parameters. Every scalar is kept in canonical form: numerator and
// denominator coprime, denominator integer-primitive with positive leading
// coefficient in graded lex order. Equality of canonical forms is plain
// structural equality, so "is zero" and "is equal" are decidable, which is
// what the rewriting machinery relies on for its genericity claims.
#ifndef QEA_SCALAR_HPP
#define QEA_SCALAR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qea/errors.hpp"

namespace qea {

using Rat = mpq_class;

// "3", "-3/4". Throws parse_error on anything else.
Rat parse_rational(std::string_view text);
std::string rational_string(const Rat& r);

// The ordered parameter list of a presentation. Scalars hold a shared
// pointer to one of these; mixing scalars from different tables is an
// invariant violation unless the tables compare equal.
class Symbols {
 public:
  Symbols() = default;
  explicit Symbols(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;
  bool operator==(const Symbols& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using SymbolsPtr = std::shared_ptr<const Symbols>;

SymbolsPtr make_symbols(std::vector<std::string> names);

// Exponent vector; size equals the symbol count of the owning polynomial.
using Mono = std::vector<std::uint32_t>;

// Graded lex: total degree first, then lexicographic on exponents.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse polynomial over Q. Pure value type; it knows its variable count
// but not the variable names.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Only valid when is_constant().
  Rat constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  long total_degree() const;  // -1 for the zero polynomial
  long degree_in(std::size_t var) const;
  bool uses(std::size_t var) const;
  std::vector<std::size_t> vars_used() const;

  const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);  // accumulates, drops zeros

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly mul_rat(const Rat& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Leading term in graded lex order; polynomial must be nonzero.
  const std::pair<const Mono, Rat>& leading() const;

  // Exact division; throws invariant_error if the division is not exact.
  MultiPoly divexact(const MultiPoly& d) const;

  // Rational content (gcd of numerators / lcm of denominators, sign of the
  // leading coefficient). primitive_part() = *this / content(); zero stays zero.
  Rat content() const;
  MultiPoly primitive_part() const;

  // gcd, normalized integer-primitive with positive leading coefficient;
  // gcd(0, b) = normalized b.
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

  // Substitutes values for the given variables (indices into the symbol
  // table), keeping the others.
  MultiPoly substitute(const std::map<std::size_t, Rat>& values) const;

  std::string to_string(const Symbols& syms) const;

 private:
  std::size_t nvars_;
  std::map<Mono, Rat, MonoLess> terms_;
};

// Rational function num/den in canonical reduced form.
class Scalar {
 public:
  Scalar() = default;  // zero over the empty table

  static Scalar zero(SymbolsPtr syms);
  static Scalar one(SymbolsPtr syms);
  static Scalar from_rat(SymbolsPtr syms, const Rat& r);
  static Scalar from_int(SymbolsPtr syms, long v);
  static Scalar var(SymbolsPtr syms, std::size_t index);
  static Scalar var(SymbolsPtr syms, std::string_view name);

  // Parses the scalar literal grammar: integers, parameter names,
  // + - * / ^ with integer exponents, parentheses. "(1+q)*t12^-1".
  static Scalar parse(SymbolsPtr syms, std::string_view text);

  const SymbolsPtr& symbols() const { return syms_; }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  // Only valid when is_rational().
  Rat rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // domain_error on division by zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;     // domain_error on zero
  Scalar pow(long e) const;   // negative exponents allowed on nonzero scalars

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Substitutes rational values for a subset of the parameters (by name).
  // Unknown names and poles raise domain_error.
  Scalar substitute(const std::map<std::string, Rat>& values) const;
  // Full evaluation; every parameter must be assigned.
  Rat evaluate(const std::map<std::string, Rat>& values) const;

  // Re-expresses this scalar over a larger table; `map[i]` is the index in
  // `to` of old variable i.
  Scalar extend_table(SymbolsPtr to, const std::vector<std::size_t>& map) const;

  std::string to_string() const;

 private:
  Scalar(SymbolsPtr syms, MultiPoly num, MultiPoly den);
  void canonicalize();

  SymbolsPtr syms_;
  MultiPoly num_ = MultiPoly(0);
  MultiPoly den_ = MultiPoly::constant(0, Rat(1));
};

}  // namespace qea

#endif

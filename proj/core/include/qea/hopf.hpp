// hopf.hpp: the character Hopf algebra structure on top of the free algebra.
//
// Elements are spanned by monomials g^a w (group part times word). Moving a
// word left past a group element picks up the factor chi(w, g); with that
// rule the coproduct Delta(x_i) = x_i (x) 1 + g_i (x) x_i extends
// multiplicatively, and the tensor square multiplies componentwise.
#ifndef QEA_HOPF_HPP
#define QEA_HOPF_HPP

#include <map>
#include <string>

#include "qea/bicharacter.hpp"
#include "qea/ncpoly.hpp"
#include "qea/rewrite.hpp"

namespace qea {

struct GMono {
  GroupExp g;
  Word w;
  bool operator==(const GMono& o) const { return g == o.g && w == o.w; }
};

struct GMonoLess {
  bool operator()(const GMono& a, const GMono& b) const {
    if (a.g != b.g) return a.g < b.g;
    return compare_lex(a.w, b.w) < 0;
  }
};

class GPoly {
 public:
  GPoly() = default;
  explicit GPoly(SymbolsPtr syms) : syms_(std::move(syms)) {}
  static GPoly monomial(SymbolsPtr syms, GroupExp g, Word w, Scalar c);

  const SymbolsPtr& symbols() const { return syms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GMono, Scalar, GMonoLess>& terms() const { return terms_; }
  void add_term(const GMono& m, const Scalar& c);

  GPoly operator+(const GPoly& o) const;
  GPoly operator-(const GPoly& o) const;
  GPoly scale(const Scalar& c) const;
  bool operator==(const GPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  SymbolsPtr syms_;
  std::map<GMono, Scalar, GMonoLess> terms_;
};

// (g^a u)(g^b v) = chi(u, g^b) g^{a+b} uv, extended bilinearly.
GPoly gmul(const Bicharacter& p, const GPoly& a, const GPoly& b);

struct TMono {
  GMono l, r;
  bool operator==(const TMono& o) const { return l == o.l && r == o.r; }
};

struct TMonoLess {
  bool operator()(const TMono& a, const TMono& b) const {
    GMonoLess less;
    if (less(a.l, b.l)) return true;
    if (less(b.l, a.l)) return false;
    return less(a.r, b.r);
  }
};

class TensorPoly {
 public:
  TensorPoly() = default;
  explicit TensorPoly(SymbolsPtr syms) : syms_(std::move(syms)) {}
  static TensorPoly monomial(SymbolsPtr syms, TMono m, Scalar c);

  const SymbolsPtr& symbols() const { return syms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TMono, Scalar, TMonoLess>& terms() const { return terms_; }
  void add_term(const TMono& m, const Scalar& c);

  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  TensorPoly scale(const Scalar& c) const;
  bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  SymbolsPtr syms_;
  std::map<TMono, Scalar, TMonoLess> terms_;
};

// Componentwise product of the tensor square.
TensorPoly tmul(const Bicharacter& p, const TensorPoly& a, const TensorPoly& b);

TensorPoly coproduct(const Bicharacter& p, const Word& w);
TensorPoly coproduct(const Bicharacter& p, const NcPoly& f);

// Delta(f) - f (x) 1 - g_c (x) f where c is the constitution of f
// (f must be constitution-homogeneous).
TensorPoly primitivity_defect(const Bicharacter& p, const NcPoly& f);

// Defect in the free algebra; zero iff f is skew-primitive there.
bool is_skew_primitive(const Bicharacter& p, const NcPoly& f);

// Rewrites the word part of both tensor legs to normal form.
TensorPoly reduce_legs(const RewriteSystem& sys, const TensorPoly& t);

}  // namespace qea

#endif

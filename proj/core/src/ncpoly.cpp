#include "qea/ncpoly.hpp"

#include <sstream>

namespace qea {

NcPoly NcPoly::monomial(SymbolsPtr syms, Word w, Scalar c) {
  NcPoly p(std::move(syms));
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::generator(SymbolsPtr syms, Letter l) {
  Scalar one = Scalar::one(syms);
  return monomial(std::move(syms), Word{l}, std::move(one));
}

NcPoly NcPoly::constant(SymbolsPtr syms, Scalar c) {
  return monomial(std::move(syms), Word{}, std::move(c));
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const std::pair<const Word, Scalar>& NcPoly::leading() const {
  check_invariant(!terms_.empty(), "leading term of zero polynomial");
  return *terms_.begin();
}

NcPoly NcPoly::operator-() const {
  NcPoly r(syms_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  if (!r.syms_) r.syms_ = o.syms_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  if (!r.syms_) r.syms_ = o.syms_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r(syms_ ? syms_ : o.syms_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NcPoly NcPoly::scale(const Scalar& c) const {
  NcPoly r(syms_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

NcPoly NcPoly::pow(unsigned e) const {
  NcPoly r = NcPoly::monomial(syms_, Word{}, Scalar::one(syms_));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::optional<std::vector<unsigned>> NcPoly::homogeneous_constitution(std::size_t ngen) const {
  std::vector<unsigned> c(ngen, 0);
  bool first = true;
  for (const auto& [w, k] : terms_) {
    std::vector<unsigned> cw = constitution(w, ngen);
    if (first) {
      c = std::move(cw);
      first = false;
    } else if (cw != c) {
      return std::nullopt;
    }
  }
  return c;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Scalar a = c;
    std::string cs = a.to_string();
    bool negated = false;
    if (!cs.empty() && cs[0] == '-') {
      // Print through the sign to keep the term list readable.
      a = -a;
      cs = a.to_string();
      negated = true;
    }
    if (first) {
      if (negated) out << '-';
      first = false;
    } else {
      out << (negated ? '-' : '+');
    }
    bool needParens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
    if (w.empty()) {
      out << (needParens ? "(" + cs + ")" : cs);
      continue;
    }
    if (!a.is_one()) {
      out << (needParens ? "(" + cs + ")" : cs) << '*';
    }
    out << word_string(w);
  }
  return out.str();
}

NcPoly skew_commutator(const Bicharacter& p, const NcPoly& u, const NcPoly& v) {
  std::size_t n = p.rank();
  auto cu = u.homogeneous_constitution(n);
  auto cv = v.homogeneous_constitution(n);
  if (!cu || !cv) throw domain_error("skew commutator of inhomogeneous operand");
  Scalar puv = p.of_constitutions(*cu, *cv);
  return u * v - (v * u).scale(puv);
}

NcPoly super_letter_value(const Bicharacter& p, const BracketTree& t) {
  if (t.is_leaf())
    return NcPoly::monomial(p.symbols(), Word{t.letter()}, Scalar::one(p.symbols()));
  return skew_commutator(p, super_letter_value(p, t.left()),
                         super_letter_value(p, t.right()));
}

NcPoly bracket_identity_defect(const Bicharacter& p, BracketIdentity id,
                               const Word& u, const Word& v, const Word& w) {
  SymbolsPtr syms = p.symbols();
  auto mono = [&](const Word& x) {
    return NcPoly::monomial(syms, x, Scalar::one(syms));
  };
  auto br = [&](const NcPoly& a, const NcPoly& b) { return skew_commutator(p, a, b); };
  NcPoly U = mono(u), V = mono(v), W = mono(w);
  Scalar puv = p.of_words(u, v), puw = p.of_words(u, w);
  Scalar pvw = p.of_words(v, w), pwv = p.of_words(w, v);
  Scalar pvv = p.of_words(v, v);

  switch (id) {
    case BracketIdentity::reassociate_a:
      return br(br(U, V), W) - br(U, br(V, W)) - br(br(U, W), V).scale(pwv.inverse()) -
             (br(U, W) * V).scale(pvw - pwv.inverse());
    case BracketIdentity::reassociate_b:
      return br(br(U, V), W) - br(U, br(V, W)) - br(br(U, W), V).scale(pvw) -
             (V * br(U, W)).scale(puv * (pvw * pwv - Scalar::one(syms)));
    case BracketIdentity::leibniz_right:
      return br(U, V * W) - br(U, V) * W - (V * br(U, W)).scale(puv);
    case BracketIdentity::leibniz_left:
      return br(U * V, W) - (br(U, W) * V).scale(pvw) - U * br(V, W);
    case BracketIdentity::square: {
      NcPoly vuv = V * U * V, vvu = V * V * U;
      return br(U, V * V) - br(br(U, V), V) -
             (vuv - vvu.scale(puv)).scale(puv * (Scalar::one(syms) + pvv));
    }
  }
  throw invariant_error("unknown bracket identity");
}

}  // namespace qea

#include "qea/hopf.hpp"

#include <sstream>

namespace qea {

GPoly GPoly::monomial(SymbolsPtr syms, GroupExp g, Word w, Scalar c) {
  GPoly p(std::move(syms));
  p.add_term(GMono{std::move(g), std::move(w)}, c);
  return p;
}

void GPoly::add_term(const GMono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GPoly GPoly::operator+(const GPoly& o) const {
  GPoly r = *this;
  if (!r.syms_) r.syms_ = o.syms_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GPoly GPoly::operator-(const GPoly& o) const {
  GPoly r = *this;
  if (!r.syms_) r.syms_ = o.syms_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GPoly GPoly::scale(const Scalar& c) const {
  GPoly r(syms_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

namespace {
std::string group_string(const GroupExp& g) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    out << 'g' << (i + 1);
    if (g[i] != 1) out << '^' << g[i];
    any = true;
  }
  return any ? out.str() : std::string("1");
}

std::string gmono_string(const GMono& m) {
  std::string gs = group_string(m.g);
  std::string ws = m.w.empty() ? "" : word_string(m.w);
  if (ws.empty()) return gs;
  if (gs == "1") return ws;
  return gs + "*" + ws;
}
}  // namespace

std::string GPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << gmono_string(m);
  }
  return out.str();
}

GPoly gmul(const Bicharacter& p, const GPoly& a, const GPoly& b) {
  GPoly r(a.symbols() ? a.symbols() : b.symbols());
  std::size_t n = p.rank();
  for (const auto& [ma, ca] : a.terms()) {
    std::vector<unsigned> cu = constitution(ma.w, n);
    for (const auto& [mb, cb] : b.terms()) {
      Scalar twist = p.chi(cu, mb.g);
      GroupExp g = ma.g;
      for (std::size_t i = 0; i < n; ++i) g[i] += mb.g[i];
      Word w = ma.w;
      w.insert(w.end(), mb.w.begin(), mb.w.end());
      r.add_term(GMono{std::move(g), std::move(w)}, ca * cb * twist);
    }
  }
  return r;
}

TensorPoly TensorPoly::monomial(SymbolsPtr syms, TMono m, Scalar c) {
  TensorPoly p(std::move(syms));
  p.add_term(m, c);
  return p;
}

void TensorPoly::add_term(const TMono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly r = *this;
  if (!r.syms_) r.syms_ = o.syms_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly r = *this;
  if (!r.syms_) r.syms_ = o.syms_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

TensorPoly TensorPoly::scale(const Scalar& c) const {
  TensorPoly r(syms_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

std::string TensorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << gmono_string(m.l) << " (x) "
        << gmono_string(m.r);
  }
  return out.str();
}

TensorPoly tmul(const Bicharacter& p, const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r(a.symbols() ? a.symbols() : b.symbols());
  for (const auto& [ma, ca] : a.terms()) {
    GPoly la = GPoly::monomial(r.symbols(), ma.l.g, ma.l.w, Scalar::one(r.symbols()));
    GPoly ra = GPoly::monomial(r.symbols(), ma.r.g, ma.r.w, Scalar::one(r.symbols()));
    for (const auto& [mb, cb] : b.terms()) {
      GPoly lb = GPoly::monomial(r.symbols(), mb.l.g, mb.l.w, Scalar::one(r.symbols()));
      GPoly rb = GPoly::monomial(r.symbols(), mb.r.g, mb.r.w, Scalar::one(r.symbols()));
      GPoly lprod = gmul(p, la, lb);
      GPoly rprod = gmul(p, ra, rb);
      for (const auto& [ml, cl] : lprod.terms())
        for (const auto& [mr, cr] : rprod.terms())
          r.add_term(TMono{ml, mr}, ca * cb * cl * cr);
    }
  }
  return r;
}

TensorPoly coproduct(const Bicharacter& p, const Word& w) {
  std::size_t n = p.rank();
  SymbolsPtr syms = p.symbols();
  GroupExp e0(n, 0);
  TensorPoly t = TensorPoly::monomial(syms, TMono{GMono{e0, {}}, GMono{e0, {}}},
                                      Scalar::one(syms));
  for (Letter l : w) {
    GroupExp gl(n, 0);
    gl[l] = 1;
    TensorPoly dx(syms);
    dx.add_term(TMono{GMono{e0, Word{l}}, GMono{e0, {}}}, Scalar::one(syms));
    dx.add_term(TMono{GMono{gl, {}}, GMono{e0, Word{l}}}, Scalar::one(syms));
    t = tmul(p, t, dx);
  }
  return t;
}

TensorPoly coproduct(const Bicharacter& p, const NcPoly& f) {
  TensorPoly t(f.symbols());
  for (const auto& [w, c] : f.terms()) t = t + coproduct(p, w).scale(c);
  return t;
}

TensorPoly primitivity_defect(const Bicharacter& p, const NcPoly& f) {
  std::size_t n = p.rank();
  auto c = f.homogeneous_constitution(n);
  if (!c) throw domain_error("primitivity test on inhomogeneous operand");
  SymbolsPtr syms = p.symbols();
  GroupExp e0(n, 0);
  GroupExp gc = group_of_constitution(*c);
  TensorPoly d = coproduct(p, f);
  for (const auto& [w, k] : f.terms()) {
    d.add_term(TMono{GMono{e0, w}, GMono{e0, {}}}, -k);   // f (x) 1
    d.add_term(TMono{GMono{gc, {}}, GMono{e0, w}}, -k);   // g_c (x) f
  }
  return d;
}

bool is_skew_primitive(const Bicharacter& p, const NcPoly& f) {
  return primitivity_defect(p, f).is_zero();
}

TensorPoly reduce_legs(const RewriteSystem& sys, const TensorPoly& t) {
  TensorPoly r(t.symbols());
  for (const auto& [m, c] : t.terms()) {
    NcPoly nl = sys.reduce_word(m.l.w);
    NcPoly nr = sys.reduce_word(m.r.w);
    for (const auto& [wl, cl] : nl.terms())
      for (const auto& [wr, cr] : nr.terms())
        r.add_term(TMono{GMono{m.l.g, wl}, GMono{m.r.g, wr}}, c * cl * cr);
  }
  return r;
}

}  // namespace qea

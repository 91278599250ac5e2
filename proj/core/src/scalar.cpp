// scalar.cpp: multivariate rational function arithmetic.
//
// gcd strategy: pull out per-variable monomial content first (the common
// case here is a pure parameter monomial times a polynomial in one variable),
// then run a primitive pseudo-remainder sequence recursively in the highest
// occurring variable. Everything is exact over Q via GMP.

#include "qea/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qea {

// ---------------------------------------------------------------- rationals

Rat parse_rational(std::string_view text) {
  std::size_t i = 0, n = text.size();
  auto fail = [&](const char* m) -> Rat { throw parse_error(std::string("bad rational: ") + m, i); };
  if (n == 0) fail("empty");
  std::string numer, denom;
  if (text[i] == '-' || text[i] == '+') numer.push_back(text[i++]);
  std::size_t digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) numer.push_back(text[i++]), ++digits;
  if (digits == 0) fail("expected digits");
  if (i < n && text[i] == '/') {
    ++i;
    digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) denom.push_back(text[i++]), ++digits;
    if (digits == 0) fail("expected denominator digits");
  }
  if (i != n) fail("trailing characters");
  mpz_class nz(numer), dz(denom.empty() ? "1" : denom);
  if (dz == 0) throw domain_error("rational with zero denominator");
  Rat r(nz, dz);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rat& r) { return r.get_str(); }

// ------------------------------------------------------------------ symbols

Symbols::Symbols(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw domain_error("duplicate parameter name: " + names_[i]);
  }
}

std::optional<std::size_t> Symbols::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolsPtr make_symbols(std::vector<std::string> names) {
  return std::make_shared<const Symbols>(std::move(names));
}

// -------------------------------------------------------------- polynomials

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  long da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return a < b;  // lexicographic on exponent vectors
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(Mono(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  check_invariant(i < nvars, "MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Mono& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  check_invariant(is_constant(), "constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Mono& m = terms_.rbegin()->first;  // graded order: last = highest degree
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

long MultiPoly::degree_in(std::size_t var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
  return d;
}

bool MultiPoly::uses(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] != 0) return true;
  return false;
}

std::vector<std::size_t> MultiPoly::vars_used() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_invariant(nvars_ == o.nvars_, "polynomial variable count mismatch");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_invariant(nvars_ == o.nvars_, "polynomial variable count mismatch");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_invariant(nvars_ == o.nvars_, "polynomial variable count mismatch");
  MultiPoly r(nvars_);
  Mono m(nvars_, 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::mul_rat(const Rat& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

const std::pair<const Mono, Rat>& MultiPoly::leading() const {
  check_invariant(!terms_.empty(), "leading term of zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
  check_invariant(!d.is_zero(), "division by zero polynomial");
  check_invariant(nvars_ == d.nvars_, "polynomial variable count mismatch");
  MultiPoly q(nvars_);
  MultiPoly r = *this;
  const auto& [dm, dc] = d.leading();
  Mono t(nvars_, 0);
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < dm[i]) throw invariant_error("divexact: not divisible");
      t[i] = rm[i] - dm[i];
    }
    Rat qc = rc / dc;
    q.add_term(t, qc);
    MultiPoly piece(nvars_);
    piece.terms_.emplace(t, qc);
    r = r - d * piece;
  }
  return q;
}

Rat MultiPoly::content() const {
  if (terms_.empty()) return Rat(0);
  // gcd of numerators over lcm of denominators, signed by the leading coeff
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class num = c.get_num(), den = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rat cont(g, l);
  cont.canonicalize();
  if (terms_.rbegin()->second < 0) cont = -cont;
  return cont;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  return mul_rat(Rat(1) / content());
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, Rat>& values) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    Mono mm = m;
    for (const auto& [v, val] : values) {
      check_invariant(v < nvars_, "substitute: variable index out of range");
      if (mm[v] == 0) continue;
      Rat p(1);
      for (std::uint32_t k = 0; k < mm[v]; ++k) p *= val;
      coeff *= p;
      mm[v] = 0;
    }
    r.add_term(mm, coeff);
  }
  return r;
}

namespace {

// Coefficient of v^k, as a polynomial with the v-exponent zeroed out.
MultiPoly coeff_of(const MultiPoly& p, std::size_t v, std::uint32_t k) {
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != k) continue;
    Mono mm = m;
    mm[v] = 0;
    r.add_term(mm, c);
  }
  return r;
}

MultiPoly shift_var(const MultiPoly& p, std::size_t v, std::uint32_t k) {
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    mm[v] += k;
    r.add_term(mm, c);
  }
  return r;
}

// Pseudo-remainder of f by g in variable v (deg_v f >= deg_v g > 0).
MultiPoly prem(MultiPoly f, const MultiPoly& g, std::size_t v) {
  long dg = g.degree_in(v);
  MultiPoly lg = coeff_of(g, v, static_cast<std::uint32_t>(dg));
  long df = f.degree_in(v);
  while (!f.is_zero() && (df = f.degree_in(v)) >= dg) {
    MultiPoly lf = coeff_of(f, v, static_cast<std::uint32_t>(df));
    f = f * lg - shift_var(lf, v, static_cast<std::uint32_t>(df - dg)) * g;
  }
  return f;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

// gcd of the v-coefficients of p.
MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  MultiPoly g(p.nvars());
  long d = p.degree_in(v);
  for (long k = d; k >= 0; --k) {
    MultiPoly c = coeff_of(p, v, static_cast<std::uint32_t>(k));
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive_part() : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(a.nvars(), Rat(1));
  if (a == b) return a.primitive_part();

  // Highest variable occurring in either operand.
  std::size_t v = 0;
  bool found = false;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.uses(i) || b.uses(i)) {
      v = i;
      found = true;
      break;
    }
  }
  if (!found) return MultiPoly::constant(a.nvars(), Rat(1));

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd_rec(ca, cb);
  // content_in returns primitive polynomials, so pp(a)/ca is exact (Gauss).
  MultiPoly fa = a.primitive_part().divexact(ca);
  MultiPoly fb = b.primitive_part().divexact(cb);

  if (fa.degree_in(v) < fb.degree_in(v)) std::swap(fa, fb);
  while (!fb.is_zero()) {
    if (fb.degree_in(v) == 0) {
      // Nonzero remainder of degree 0 in v: the gcd has no v-part.
      fa = MultiPoly::constant(a.nvars(), Rat(1));
      break;
    }
    MultiPoly r = prem(fa, fb, v);
    fa = fb;
    fb = r.is_zero() ? r : r.primitive_part().divexact(content_in(r, v));
  }
  return (c * fa).primitive_part();
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
  check_invariant(a.nvars_ == b.nvars_, "polynomial variable count mismatch");
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();

  const std::size_t n = a.nvars_;
  // Monomial content: per-variable minimum exponents.
  Mono amin(n, 0), bmin(n, 0);
  bool first = true;
  for (const auto& [m, c] : a.terms_) {
    if (first) amin = m, first = false;
    else
      for (std::size_t i = 0; i < n; ++i) amin[i] = std::min(amin[i], m[i]);
  }
  first = true;
  for (const auto& [m, c] : b.terms_) {
    if (first) bmin = m, first = false;
    else
      for (std::size_t i = 0; i < n; ++i) bmin[i] = std::min(bmin[i], m[i]);
  }
  Mono gmin(n, 0);
  for (std::size_t i = 0; i < n; ++i) gmin[i] = std::min(amin[i], bmin[i]);

  auto strip = [n](const MultiPoly& p, const Mono& shift) {
    MultiPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
      Mono mm = m;
      for (std::size_t i = 0; i < n; ++i) mm[i] -= shift[i];
      r.add_term(mm, c);
    }
    return r;
  };
  MultiPoly a1 = strip(a, amin), b1 = strip(b, bmin);
  MultiPoly core = gcd_rec(a1, b1);
  // Re-attach the shared monomial factor.
  MultiPoly result(n);
  for (const auto& [m, c] : core.terms()) {
    Mono mm = m;
    for (std::size_t i = 0; i < n; ++i) mm[i] += gmin[i];
    result.add_term(mm, c);
  }
  return result.primitive_part();
}

std::string MultiPoly::to_string(const Symbols& syms) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool firstTerm = true;
  // Highest term first reads better.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ac = c < 0 ? Rat(-c) : c;
    if (firstTerm) {
      if (c < 0) out << '-';
      firstTerm = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    bool hasVars = std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; });
    bool needCoeff = !hasVars || ac != 1;
    if (needCoeff) out << ac.get_str();
    bool needStar = needCoeff;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (needStar) out << '*';
      out << syms.name(i);
      if (m[i] > 1) out << '^' << m[i];
      needStar = true;
    }
  }
  return out.str();
}

// ------------------------------------------------------------------- scalar

Scalar::Scalar(SymbolsPtr syms, MultiPoly num, MultiPoly den)
    : syms_(std::move(syms)), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void Scalar::canonicalize() {
  check_invariant(!den_.is_zero(), "scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  Rat c = den_.content();
  if (c != 1) {
    Rat inv = Rat(1) / c;
    num_ = num_.mul_rat(inv);
    den_ = den_.mul_rat(inv);
  }
}

Scalar Scalar::zero(SymbolsPtr syms) { return from_rat(std::move(syms), Rat(0)); }
Scalar Scalar::one(SymbolsPtr syms) { return from_rat(std::move(syms), Rat(1)); }

Scalar Scalar::from_rat(SymbolsPtr syms, const Rat& r) {
  std::size_t n = syms ? syms->size() : 0;
  return Scalar(std::move(syms), MultiPoly::constant(n, r), MultiPoly::constant(n, Rat(1)));
}

Scalar Scalar::from_int(SymbolsPtr syms, long v) { return from_rat(std::move(syms), Rat(v)); }

Scalar Scalar::var(SymbolsPtr syms, std::size_t index) {
  check_invariant(syms && index < syms->size(), "Scalar::var: bad index");
  std::size_t n = syms->size();
  return Scalar(std::move(syms), MultiPoly::variable(n, index), MultiPoly::constant(n, Rat(1)));
}

Scalar Scalar::var(SymbolsPtr syms, std::string_view name) {
  check_invariant(static_cast<bool>(syms), "Scalar::var: null symbol table");
  auto idx = syms->index(name);
  if (!idx) throw domain_error("unknown parameter: " + std::string(name));
  return var(std::move(syms), *idx);
}

bool Scalar::is_one() const {
  return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
         num_.constant_value() == den_.constant_value();
}

Rat Scalar::rational_value() const {
  check_invariant(is_rational(), "rational_value on non-rational scalar");
  if (num_.is_zero()) return Rat(0);
  return num_.constant_value() / den_.constant_value();
}

namespace {
void require_same_table(const Scalar& a, const Scalar& b) {
  const SymbolsPtr& s = a.symbols();
  const SymbolsPtr& t = b.symbols();
  if (s == t) return;
  if (s && t && *s == *t) return;
  if (!s && (!t || t->size() == 0)) return;
  if (!t && (!s || s->size() == 0)) return;
  throw invariant_error("scalar symbol tables differ");
}
}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_table(*this, o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(syms_, num_ + o.num_, den_);
  MultiPoly g = MultiPoly::gcd(den_, o.den_);
  if (g.is_constant())
    return Scalar(syms_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  MultiPoly db = den_.divexact(g), dd = o.den_.divexact(g);
  return Scalar(syms_, num_ * dd + o.num_ * db, den_ * dd);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_table(*this, o);
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  // Cross-reduce before multiplying to keep the gcds small.
  MultiPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    MultiPoly g = MultiPoly::gcd(a, d);
    if (!g.is_constant()) a = a.divexact(g), d = d.divexact(g);
  }
  if (!b.is_constant()) {
    MultiPoly g = MultiPoly::gcd(c, b);
    if (!g.is_constant()) c = c.divexact(g), b = b.divexact(g);
  }
  return Scalar(syms_, a * c, b * d);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error("division by zero scalar");
  return Scalar(syms_, den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return one(syms_);
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar r = one(syms_);
  unsigned long ue = static_cast<unsigned long>(e);
  while (ue) {
    if (ue & 1ul) r = r * base;
    ue >>= 1;
    if (ue) base = base * base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_table(*this, o);
  return num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::substitute(const std::map<std::string, Rat>& values) const {
  if (values.empty()) return *this;
  check_invariant(static_cast<bool>(syms_), "substitute on table-less scalar");
  std::map<std::size_t, Rat> byIndex;
  for (const auto& [name, val] : values) {
    auto idx = syms_->index(name);
    if (!idx) throw domain_error("unknown parameter: " + name);
    byIndex.emplace(*idx, val);
  }
  MultiPoly n = num_.substitute(byIndex);
  MultiPoly d = den_.substitute(byIndex);
  if (d.is_zero()) throw domain_error("pole at specialization of " + to_string());
  return Scalar(syms_, std::move(n), std::move(d));
}

Rat Scalar::evaluate(const std::map<std::string, Rat>& values) const {
  Scalar s = substitute(values);
  for (std::size_t v = 0; v < (syms_ ? syms_->size() : 0); ++v) {
    if (s.num_.uses(v) || s.den_.uses(v))
      throw domain_error("evaluate: parameter not assigned: " + syms_->name(v));
  }
  return s.rational_value();
}

Scalar Scalar::extend_table(SymbolsPtr to, const std::vector<std::size_t>& map) const {
  check_invariant(static_cast<bool>(to), "extend_table: null target");
  std::size_t newn = to->size();
  auto remap = [&](const MultiPoly& p) {
    MultiPoly r(newn);
    for (const auto& [m, c] : p.terms()) {
      Mono mm(newn, 0);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        check_invariant(map[i] < newn, "extend_table: bad index map");
        mm[map[i]] = m[i];
      }
      r.add_term(mm, c);
    }
    return r;
  };
  return Scalar(std::move(to), remap(num_), remap(den_));
}

std::string Scalar::to_string() const {
  static const Symbols kEmpty;
  const Symbols& syms = syms_ ? *syms_ : kEmpty;
  std::string n = num_.to_string(syms);
  if (den_.is_constant() && !den_.is_zero() && den_.constant_value() == 1) return n;
  std::string d = den_.to_string(syms);
  // Parenthesize so the result re-parses with * and / at equal precedence.
  bool dSimple = den_.term_count() == 1 && [&] {
    const auto& [m, c] = *den_.terms().begin();
    int nz = 0;
    for (auto e : m) nz += e != 0;
    return c == 1 && nz == 1;
  }();
  std::string ns = num_.term_count() > 1 ? "(" + n + ")" : n;
  std::string ds = dSimple ? d : "(" + d + ")";
  return ns + "/" + ds;
}

// --------------------------------------------------------- literal parsing

namespace {

struct ScalarLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

class ScalarParser {
 public:
  ScalarParser(SymbolsPtr syms, std::string_view text) : syms_(std::move(syms)), lx_{text} {}

  Scalar parse_all() {
    Scalar v = expr();
    if (!lx_.eof()) throw parse_error("unexpected character in scalar literal", lx_.pos);
    return v;
  }

  // Exposed so the relation parser can share position state.
  Scalar expr() {
    bool neg = lx_.accept('-');
    Scalar v = term();
    if (neg) v = -v;
    for (;;) {
      if (lx_.accept('+')) v = v + term();
      else if (lx_.accept('-')) v = v - term();
      else return v;
    }
  }

 private:
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (lx_.accept('*')) v = v * factor();
      else if (lx_.accept('/')) {
        Scalar d = factor();
        if (d.is_zero()) throw domain_error("division by zero in scalar literal");
        v = v / d;
      } else
        return v;
    }
  }

  Scalar factor() {
    Scalar v = primary();
    while (lx_.peek() == '^') {
      lx_.accept('^');
      long e = integer();
      if (e < 0 && v.is_zero()) throw domain_error("zero to a negative power");
      v = v.pow(e);
    }
    return v;
  }

  Scalar primary() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.accept('(');
      Scalar v = expr();
      if (!lx_.accept(')')) throw parse_error("expected ')' in scalar literal", lx_.pos);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Scalar::from_rat(syms_, Rat(mpz_class(number_digits()), 1));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = lx_.pos;
      std::string name;
      while (lx_.pos < lx_.text.size()) {
        char ch = lx_.text[lx_.pos];
        if (std::islower(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch)))
          name.push_back(ch), ++lx_.pos;
        else
          break;
      }
      auto idx = syms_ ? syms_->index(name) : std::nullopt;
      if (!idx) throw parse_error("unknown parameter '" + name + "'", start);
      return Scalar::var(syms_, *idx);
    }
    throw parse_error("expected number, parameter or '(' in scalar literal", lx_.pos);
  }

  std::string number_digits() {
    lx_.skip_ws();
    std::string s;
    while (lx_.pos < lx_.text.size() && std::isdigit(static_cast<unsigned char>(lx_.text[lx_.pos])))
      s.push_back(lx_.text[lx_.pos++]);
    if (s.empty()) throw parse_error("expected integer", lx_.pos);
    return s;
  }

  long integer() {
    bool neg = lx_.accept('-');
    std::string digits = number_digits();
    if (digits.size() > 9) throw parse_error("exponent too large", lx_.pos);
    long v = std::stol(digits);
    return neg ? -v : v;
  }

  SymbolsPtr syms_;
  ScalarLexer lx_;
};

}  // namespace

Scalar Scalar::parse(SymbolsPtr syms, std::string_view text) {
  return ScalarParser(std::move(syms), text).parse_all();
}

}  // namespace qea

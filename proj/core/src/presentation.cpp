#include "qea/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qea {

CartanData CartanData::series(Series s, std::size_t n) {
  std::size_t minrank = s == Series::D ? 4 : 2;
  if (n < minrank || n > 9)
    throw domain_error("rank out of range for series preset");
  CartanData cd;
  cd.n = n;
  cd.a.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cd.a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j, int aij, int aji) {
    cd.a[i][j] = aij;
    cd.a[j][i] = aji;
  };
  std::size_t chain = (s == Series::D) ? n - 1 : n;
  for (std::size_t i = 0; i + 1 < chain; ++i) link(i, i + 1, -1, -1);
  switch (s) {
    case Series::A:
      break;
    case Series::B:
      // double edge toward the short last root: a_{n,n-1} = -2
      link(n - 2, n - 1, -1, -2);
      break;
    case Series::C:
      // long last root: a_{n-1,n} = -2
      link(n - 2, n - 1, -2, -1);
      break;
    case Series::D:
      link(n - 3, n - 1, -1, -1);  // branch node n-2 connects to n (1-based)
      break;
  }
  return cd;
}

std::optional<std::pair<Series, std::size_t>> parse_preset_name(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  Series s;
  switch (std::tolower(static_cast<unsigned char>(name[0]))) {
    case 'a': s = Series::A; break;
    case 'b': s = Series::B; break;
    case 'c': s = Series::C; break;
    case 'd': s = Series::D; break;
    default: return std::nullopt;
  }
  std::size_t n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    if (n > 99) return std::nullopt;
  }
  std::size_t minrank = s == Series::D ? 4 : 2;
  if (n < minrank || n > 9) return std::nullopt;
  return std::make_pair(s, n);
}

std::string preset_name(Series s, std::size_t n) {
  const char* letters = "abcd";
  return std::string(1, letters[static_cast<int>(s)]) + std::to_string(n);
}

std::vector<NcPoly> serre_relations(const CartanData& cd, const Bicharacter& p) {
  std::size_t n = cd.n;
  check_invariant(p.rank() == n, "bicharacter rank mismatch");
  SymbolsPtr syms = p.symbols();
  auto gen = [&](std::size_t i) { return NcPoly::generator(syms, static_cast<Letter>(i)); };
  std::vector<NcPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!cd.adjacent(i, j)) {
        out.push_back(skew_commutator(p, gen(i), gen(j)));
        continue;
      }
      // copies of x_{i+1..} attach on the left, of x_{j+1..} on the right
      unsigned nij = static_cast<unsigned>(1 - cd.a[i][j]);
      NcPoly r1 = gen(j);
      for (unsigned k = 0; k < nij; ++k) r1 = skew_commutator(p, gen(i), r1);
      out.push_back(std::move(r1));
      unsigned nji = static_cast<unsigned>(1 - cd.a[j][i]);
      NcPoly r2 = gen(i);
      for (unsigned k = 0; k < nji; ++k) r2 = skew_commutator(p, r2, gen(j));
      out.push_back(std::move(r2));
    }
  }
  return out;
}

bool existence_check(const CartanData& cd, const Bicharacter& p) {
  std::size_t n = cd.n;
  check_invariant(p.rank() == n, "bicharacter rank mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (p.at(i, j) * p.at(j, i) != p.at(i, i).pow(cd.a[i][j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<Scalar> series_diagonal(Series s, std::size_t n, const SymbolsPtr& params) {
  Scalar q = Scalar::var(params, "q");
  std::vector<Scalar> d(n, q);
  switch (s) {
    case Series::A:
    case Series::D:
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < n; ++i) d[i] = q * q;
      break;
    case Series::C:
      d[n - 1] = q * q;
      break;
  }
  return d;
}

std::string pair_param_name(std::size_t i, std::size_t j) {
  // 1-based digits; ranks stay below 10 so the name is unambiguous
  return "t" + std::to_string(i + 1) + std::to_string(j + 1);
}

Bicharacter build_series_bicharacter(const CartanData& cd, Series s,
                                     const SymbolsPtr& params,
                                     const std::vector<std::vector<Rat>>* twist) {
  std::size_t n = cd.n;
  std::vector<Scalar> diag = series_diagonal(s, n, params);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::one(params)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = diag[i];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar t = Scalar::var(params, pair_param_name(i, j));
      Scalar pij = t;
      Scalar pji = diag[i].pow(cd.a[i][j]) * t.inverse();
      if (twist) {
        pij = pij * Scalar::from_rat(params, (*twist)[i][j]);
        pji = pji * Scalar::from_rat(params, (*twist)[j][i]);
      }
      m[i][j] = pij;
      m[j][i] = pji;
    }
  }
  return Bicharacter(params, std::move(m));
}

Presentation build_series_presentation(Series s, std::size_t n,
                                       const std::vector<std::vector<Rat>>* twist,
                                       std::string kind) {
  CartanData cd = CartanData::series(s, n);
  std::vector<std::string> names{"q"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) names.push_back(pair_param_name(i, j));
  SymbolsPtr params = make_symbols(std::move(names));
  Bicharacter bichar = build_series_bicharacter(cd, s, params, twist);
  std::vector<NcPoly> rels = serre_relations(cd, bichar);
  return Presentation{n, std::vector<unsigned>(n, 1), params, std::move(bichar),
                      std::move(rels), std::move(kind)};
}

}  // namespace

Presentation generic_presentation(Series s, std::size_t n) {
  return build_series_presentation(s, n, nullptr, preset_name(s, n));
}

Presentation z_deformed_presentation(Series s, std::size_t n,
                                     const std::vector<std::vector<Rat>>& z) {
  CartanData cd = CartanData::series(s, n);
  check_invariant(z.size() == n, "twist matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    check_invariant(z[i].size() == n, "twist matrix size mismatch");
    if (z[i][i] != 1) throw domain_error("twist diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (z[i][j] == 0) throw domain_error("twist entries must be nonzero");
      if (z[i][j] * z[j][i] != 1) throw domain_error("twist must satisfy z_ij z_ji = 1");
    }
  }
  return build_series_presentation(s, n, &z, preset_name(s, n) + "+z");
}

// ------------------------------------------------------------ word families

namespace {

// 1-based inclusive ascending run x_a x_{a+1} ... x_b; empty when a > b.
Word run_up(std::size_t a, std::size_t b) {
  Word w;
  for (std::size_t i = a; i <= b; ++i) w.push_back(static_cast<Letter>(i - 1));
  return w;
}

// 1-based descending run x_a x_{a-1} ... x_b; empty when a < b.
Word run_down(std::size_t a, std::size_t b) {
  Word w;
  for (std::size_t i = a + 1; i-- > b;) w.push_back(static_cast<Letter>(i - 1));
  return w;
}

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const Word& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

void sort_canonical(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
}

}  // namespace

ExpectedLists expected_lists(Series s, std::size_t n) {
  ExpectedLists out;
  auto u = [&](std::size_t k, std::size_t m) { return run_up(k, m); };
  // B: x_k..x_n x_n..x_m, C: x_k..x_n x_{n-1}..x_m (m=n gives the plain run),
  // D: x_k..x_{n-2} x_n x_{n-1}..x_m.
  auto wB = [&](std::size_t k, std::size_t m) {
    return cat({run_up(k, n), run_down(n, m)});
  };
  auto vC = [&](std::size_t k, std::size_t m) {
    return cat({run_up(k, n), run_down(n - 1, m)});
  };
  auto eD = [&](std::size_t k, std::size_t m) {
    return cat({run_up(k, n - 2), Word{static_cast<Letter>(n - 1)}, run_down(n - 1, m)});
  };

  // non-adjacent commutation rules shared by every series
  auto push_u0 = [&](bool d_branch) {
    for (std::size_t k = 1; k + 1 < n + (d_branch ? 0 : 1); ++k)
      for (std::size_t m = k + 2; m <= n; ++m) {
        if (d_branch && k == n - 2 && m == n) continue;
        out.gs_leading.push_back(cat({u(k, k), u(m, m)}));
      }
  };

  switch (s) {
    case Series::A: {
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m <= n; ++m) out.hard.push_back(u(k, m));
      push_u0(false);
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m)
          out.gs_leading.push_back(cat({u(k, m), u(k + 1, k + 1)}));
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m < n; ++m)
          out.gs_leading.push_back(cat({u(k, m), u(k, m + 1)}));
      break;
    }
    case Series::B: {
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m <= n; ++m) out.hard.push_back(u(k, m));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m) out.hard.push_back(wB(k, m));
      push_u0(false);
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m)
          if (k != n - 1)
            out.gs_leading.push_back(cat({u(k, m), u(k + 1, k + 1)}));
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m < n; ++m)
          out.gs_leading.push_back(cat({u(k, m), u(k, m + 1)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m)
          if (k != m - 2)
            out.gs_leading.push_back(cat({wB(k, m), u(k + 1, k + 1)}));
      for (std::size_t k = 1; k + 1 < n; ++k)
        out.gs_leading.push_back(cat({wB(k, k + 1), u(k + 2, k + 2)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 2; m <= n; ++m)
          out.gs_leading.push_back(cat({wB(k, m), wB(k, m - 1)}));
      for (std::size_t k = 1; k < n; ++k)
        out.gs_leading.push_back(cat({u(k, n), u(k, n), u(n, n)}));
      break;
    }
    case Series::C: {
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m <= n; ++m) out.hard.push_back(u(k, m));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m) out.hard.push_back(vC(k, m));
      for (std::size_t k = 1; k < n; ++k)
        out.hard.push_back(cat({u(k, n - 1), u(k, n)}));
      push_u0(false);
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m)
          if (!(k == n - 2 && m == n))
            out.gs_leading.push_back(cat({u(k, m), u(k + 1, k + 1)}));
      for (std::size_t k = 1; k + 1 < n; ++k)
        for (std::size_t m = k; m + 1 < n; ++m)
          out.gs_leading.push_back(cat({u(k, m), u(k, m + 1)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m)
          if (k != m - 2)
            out.gs_leading.push_back(cat({vC(k, m), u(k + 1, k + 1)}));
      for (std::size_t k = 1; k + 1 < n; ++k)
        out.gs_leading.push_back(cat({vC(k, k + 1), u(k + 2, k + 2)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 2; m <= n; ++m) {
          // v_{kn} means the plain run u_{kn}
          Word left = (m == n) ? u(k, n) : vC(k, m);
          out.gs_leading.push_back(cat({left, vC(k, m - 1)}));
        }
      for (std::size_t k = 1; k < n; ++k)
        out.gs_leading.push_back(
            cat({u(k, n - 1), u(k, n - 1), u(k, n - 1), u(n, n)}));
      // straightening rules the completion derives on top of the classical
      // display: products of a hard letter with the doubled-run letters.
      // [u_{k,n-1} v_{k,n-1}]; for m < n-1 the analogous word starts with
      // the u_2 rule word and is already reducible.
      for (std::size_t k = 1; k + 1 < n; ++k)
        out.gs_leading.push_back(cat({u(k, n - 1), vC(k, n - 1)}));
      // [v_k u_{kn}] where v_k = u_{k,n-1} u_{kn}
      for (std::size_t k = 1; k < n; ++k)
        out.gs_leading.push_back(cat({u(k, n - 1), u(k, n), u(k, n)}));
      break;
    }
    case Series::D: {
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k; m < n; ++m) out.hard.push_back(u(k, m));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m) out.hard.push_back(eD(k, m));
      push_u0(true);
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m)
          out.gs_leading.push_back(cat({u(k, m), u(k + 1, k + 1)}));
      out.gs_leading.push_back(cat({u(n - 2, n - 2), u(n, n), u(n, n)}));
      for (std::size_t k = 1; k + 1 < n; ++k)
        for (std::size_t m = k; m + 1 < n; ++m)
          out.gs_leading.push_back(cat({u(k, m), u(k, m + 1)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 1; m <= n; ++m)
          if (k != n - 1 && k != m - 2)
            out.gs_leading.push_back(cat({eD(k, m), u(k + 1, k + 1)}));
      for (std::size_t k = 1; k + 2 < n; ++k)
        out.gs_leading.push_back(cat({eD(k, k + 1), u(k + 2, k + 2)}));
      if (n >= 4)
        out.gs_leading.push_back(cat({eD(n - 3, n - 2), u(n, n)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k + 2; m <= n; ++m)
          out.gs_leading.push_back(cat({eD(k, m), eD(k, m - 1)}));
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = k; m < n; ++m)
          if (m + 2 >= n) out.gs_leading.push_back(cat({u(k, m), eD(k, n)}));
      break;
    }
  }
  sort_canonical(out.hard);
  sort_canonical(out.gs_leading);
  return out;
}

long verify_bound(Series s, std::size_t n) {
  long gs_max = 0;
  ExpectedLists e = expected_lists(s, n);
  for (const Word& w : e.gs_leading) gs_max = std::max<long>(gs_max, static_cast<long>(w.size()));
  for (const Word& w : e.hard) gs_max = std::max<long>(gs_max, static_cast<long>(w.size()));
  // rank-2 presets also feed the dimension cross-checks up to degree 6
  if (n == 2) gs_max = std::max<long>(gs_max, 6);
  return std::max<long>(gs_max, 4);
}

// --------------------------------------------------------- relation parser

namespace {

struct RelToken {
  enum Kind { Int, Name, Gen, Op, End } kind = End;
  std::string text;      // Int digits or Name
  Letter gen = 0;        // Gen
  char op = 0;           // Op
  std::size_t pos = 0;
};

std::vector<RelToken> rel_tokenize(std::string_view text, std::size_t ngen) {
  std::vector<RelToken> out;
  std::size_t i = 0, n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
        digits.push_back(text[i++]);
      out.push_back(RelToken{RelToken::Int, std::move(digits), 0, 0, start});
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < n && (std::islower(static_cast<unsigned char>(text[i])) ||
                       std::isdigit(static_cast<unsigned char>(text[i]))))
        name.push_back(text[i++]);
      if (name.size() >= 2 && name[0] == 'x' &&
          std::all_of(name.begin() + 1, name.end(),
                      [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        unsigned long idx = std::stoul(name.substr(1));
        if (idx < 1 || idx > ngen)
          throw parse_error("generator index out of range", start);
        out.push_back(RelToken{RelToken::Gen, "", static_cast<Letter>(idx - 1), 0, start});
      } else {
        out.push_back(RelToken{RelToken::Name, std::move(name), 0, 0, start});
      }
      continue;
    }
    if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
      out.push_back(RelToken{RelToken::Op, "", 0, c, start});
      ++i;
      continue;
    }
    throw parse_error("unexpected character in relation", start);
  }
  out.push_back(RelToken{RelToken::End, "", 0, 0, n});
  return out;
}

class RelParser {
 public:
  RelParser(const Bicharacter& p, std::vector<RelToken> toks)
      : p_(p), syms_(p.symbols()), toks_(std::move(toks)) {}

  NcPoly parse() {
    NcPoly v = expr();
    if (cur().kind != RelToken::End)
      throw parse_error("unexpected trailing input in relation", cur().pos);
    return v;
  }

 private:
  const RelToken& cur() const { return toks_[i_]; }
  bool is_op(char c) const { return cur().kind == RelToken::Op && cur().op == c; }
  void advance() { ++i_; }
  void expect(char c, const char* what) {
    if (!is_op(c)) throw parse_error(std::string("expected ") + what, cur().pos);
    advance();
  }

  static std::optional<Scalar> pure_scalar(const NcPoly& f) {
    if (f.is_zero()) return Scalar();
    if (f.term_count() == 1 && f.leading().first.empty()) return f.leading().second;
    return std::nullopt;
  }

  bool starts_atom() const {
    switch (cur().kind) {
      case RelToken::Int:
      case RelToken::Name:
      case RelToken::Gen:
        return true;
      case RelToken::Op:
        return cur().op == '(' || cur().op == '[';
      default:
        return false;
    }
  }

  NcPoly expr() {
    bool neg = false;
    if (is_op('-')) {
      neg = true;
      advance();
    }
    NcPoly v = term();
    if (neg) v = -v;
    for (;;) {
      if (is_op('+')) {
        advance();
        v = v + term();
      } else if (is_op('-')) {
        advance();
        v = v - term();
      } else {
        return v;
      }
    }
  }

  NcPoly term() {
    NcPoly v = factor();
    for (;;) {
      if (is_op('*')) {
        advance();
        v = v * factor();
      } else if (is_op('/')) {
        std::size_t pos = cur().pos;
        advance();
        auto d = pure_scalar(factor());
        if (!d) throw parse_error("division by a non-scalar", pos);
        if (d->is_zero()) throw domain_error("division by zero in relation");
        v = v.scale(d->inverse());
      } else if (starts_atom()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  NcPoly factor() {
    NcPoly v = atom();
    while (is_op('^')) {
      std::size_t pos = cur().pos;
      advance();
      bool neg = false;
      if (is_op('-')) {
        neg = true;
        advance();
      }
      if (cur().kind != RelToken::Int) throw parse_error("expected integer exponent", cur().pos);
      if (cur().text.size() > 6) throw parse_error("exponent too large", cur().pos);
      long e = std::stol(cur().text);
      advance();
      if (neg) {
        auto s = pure_scalar(v);
        if (!s) throw parse_error("negative power of a non-scalar", pos);
        if (s->is_zero()) throw domain_error("zero to a negative power");
        v = NcPoly::constant(syms_, s->pow(-e));
      } else {
        v = v.pow(static_cast<unsigned>(e));
      }
    }
    return v;
  }

  NcPoly atom() {
    const RelToken& t = cur();
    switch (t.kind) {
      case RelToken::Int: {
        Rat r(mpz_class(t.text), 1);
        advance();
        return NcPoly::constant(syms_, Scalar::from_rat(syms_, r));
      }
      case RelToken::Name: {
        auto idx = syms_ ? syms_->index(t.text) : std::nullopt;
        if (!idx) throw parse_error("unknown parameter '" + t.text + "'", t.pos);
        advance();
        return NcPoly::constant(syms_, Scalar::var(syms_, *idx));
      }
      case RelToken::Gen: {
        Letter l = t.gen;
        advance();
        return NcPoly::generator(syms_, l);
      }
      case RelToken::Op:
        if (t.op == '(') {
          advance();
          NcPoly v = expr();
          expect(')', "')'");
          return v;
        }
        if (t.op == '[') {
          advance();
          NcPoly a = expr();
          expect(',', "','");
          NcPoly b = expr();
          expect(']', "']'");
          return skew_commutator(p_, a, b);
        }
        [[fallthrough]];
      default:
        throw parse_error("expected number, parameter, generator or bracket", t.pos);
    }
  }

  const Bicharacter& p_;
  SymbolsPtr syms_;
  std::vector<RelToken> toks_;
  std::size_t i_ = 0;
};

}  // namespace

NcPoly parse_relation(const Bicharacter& p, std::string_view text) {
  return RelParser(p, rel_tokenize(text, p.rank())).parse();
}

// ------------------------------------------------------------------- JSON

namespace {

bool valid_param_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)))
      return false;
  if (name == "x") return false;
  if (name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
    return false;  // would collide with generator tokens
  return true;
}

}  // namespace

Presentation presentation_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad presentation JSON: ") + e.what(), 0);
  }
  try {
    std::size_t ngen = j.at("generators").get<std::size_t>();
    if (ngen == 0 || ngen > 64) throw domain_error("generator count out of range");
    std::vector<unsigned> degrees(ngen, 1);
    if (j.contains("degrees")) {
      degrees = j.at("degrees").get<std::vector<unsigned>>();
      if (degrees.size() != ngen) throw domain_error("degree list size mismatch");
      for (unsigned d : degrees)
        if (d == 0) throw domain_error("generator degrees must be positive");
    }
    std::vector<std::string> names;
    if (j.contains("parameters"))
      names = j.at("parameters").get<std::vector<std::string>>();
    for (const std::string& s : names)
      if (!valid_param_name(s)) throw domain_error("bad parameter name: " + s);
    SymbolsPtr params = make_symbols(std::move(names));

    const auto& jb = j.at("bicharacter");
    if (!jb.is_array() || jb.size() != ngen)
      throw domain_error("bicharacter must be an n x n matrix");
    std::vector<std::vector<Scalar>> entries;
    for (const auto& row : jb) {
      if (!row.is_array() || row.size() != ngen)
        throw domain_error("bicharacter must be an n x n matrix");
      std::vector<Scalar> r;
      for (const auto& cell : row) r.push_back(Scalar::parse(params, cell.get<std::string>()));
      entries.push_back(std::move(r));
    }
    Bicharacter bichar(params, std::move(entries));

    std::vector<NcPoly> relations;
    if (j.contains("relations")) {
      for (const auto& jr : j.at("relations")) {
        NcPoly r = parse_relation(bichar, jr.get<std::string>());
        if (!r.homogeneous_constitution(ngen))
          throw domain_error("inhomogeneous relation: " + jr.get<std::string>());
        relations.push_back(std::move(r));
      }
    }
    std::optional<std::string> kind;
    if (j.contains("kind")) kind = j.at("kind").get<std::string>();
    return Presentation{ngen, std::move(degrees), params, std::move(bichar),
                        std::move(relations), std::move(kind)};
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad presentation JSON: ") + e.what(), 0);
  }
}

std::string presentation_to_json(const Presentation& pr) {
  nlohmann::ordered_json j;
  j["generators"] = pr.ngen;
  j["degrees"] = pr.degrees;
  j["parameters"] = pr.params ? pr.params->names() : std::vector<std::string>{};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < pr.ngen; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < pr.ngen; ++k) row.push_back(pr.bichar.at(i, k).to_string());
    rows.push_back(std::move(row));
  }
  j["bicharacter"] = std::move(rows);
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const NcPoly& r : pr.relations) rels.push_back(r.to_string());
  j["relations"] = std::move(rels);
  if (pr.kind) j["kind"] = *pr.kind;
  return j.dump(2);
}

std::uint64_t presentation_hash(const Presentation& pr) {
  std::ostringstream canon;
  canon << "g:" << pr.ngen << ";d:";
  for (unsigned d : pr.degrees) canon << d << ',';
  canon << ";p:";
  if (pr.params)
    for (const std::string& s : pr.params->names()) canon << s << ',';
  canon << ";b:";
  for (std::size_t i = 0; i < pr.ngen; ++i)
    for (std::size_t k = 0; k < pr.ngen; ++k) canon << pr.bichar.at(i, k).to_string() << ';';
  canon << "r:";
  for (const NcPoly& r : pr.relations) canon << r.to_string() << ';';
  std::string s = canon.str();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Presentation specialize(const Presentation& pr, const std::map<std::string, Rat>& values) {
  std::vector<std::vector<Scalar>> entries(pr.ngen, std::vector<Scalar>());
  for (std::size_t i = 0; i < pr.ngen; ++i)
    for (std::size_t k = 0; k < pr.ngen; ++k)
      entries[i].push_back(pr.bichar.at(i, k).substitute(values));
  Bicharacter bichar(pr.params, std::move(entries));
  std::vector<NcPoly> rels;
  for (const NcPoly& r : pr.relations) {
    NcPoly s(pr.params);
    for (const auto& [w, c] : r.terms()) s.add_term(w, c.substitute(values));
    rels.push_back(std::move(s));
  }
  return Presentation{pr.ngen, pr.degrees, pr.params, std::move(bichar), std::move(rels),
                      pr.kind};
}

}  // namespace qea

#include "qea/pbw.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qea {

namespace {

struct LexLess {
  bool operator()(const Word& a, const Word& b) const { return lex_less(a, b); }
};

Word word_power(const Word& u, unsigned h) {
  Word w;
  w.reserve(u.size() * h);
  for (unsigned i = 0; i < h; ++i) w.insert(w.end(), u.begin(), u.end());
  return w;
}

}  // namespace

std::vector<Word> hard_super_letters(const RewriteSystem& sys, long bound) {
  std::vector<Word> out;
  for (long d = 1; d <= bound; ++d)
    for (Word& w : sys.normal_words_of_weight(d))
      if (is_standard(w)) out.push_back(std::move(w));
  return out;
}

std::vector<HeightReport> heights(const RewriteSystem& sys,
                                  const std::vector<Word>& hard,
                                  unsigned max_power) {
  std::vector<HeightReport> out;
  for (const Word& u : hard) {
    HeightReport r;
    r.word = u;
    r.checked_to = max_power;
    for (unsigned h = 2; h <= max_power; ++h) {
      if (!sys.word_irreducible(word_power(u, h))) {
        r.first_reducible_power = h;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<long> normal_word_dims(const RewriteSystem& sys, long max_weight) {
  std::vector<long> dims(static_cast<std::size_t>(max_weight) + 1, 0);
  dims[0] = 1;
  for (long d = 1; d <= max_weight; ++d)
    dims[static_cast<std::size_t>(d)] =
        static_cast<long>(sys.normal_words_of_weight(d).size());
  return dims;
}

std::vector<long> pbw_dims(const std::vector<Word>& hard,
                           const std::vector<unsigned>& degrees, long max_weight) {
  std::vector<long> dims(static_cast<std::size_t>(max_weight) + 1, 0);
  dims[0] = 1;
  for (const Word& u : hard) {
    long w = weight(u, degrees);
    check_invariant(w > 0, "hard word of nonpositive weight");
    if (w > max_weight) continue;
    // multiply by 1/(1 - x^w): ascending in-place pass allows any multiplicity
    for (long d = w; d <= max_weight; ++d)
      dims[static_cast<std::size_t>(d)] += dims[static_cast<std::size_t>(d - w)];
  }
  return dims;
}

namespace {

void crystal_dfs(const std::vector<Word>& sorted_hard, const std::vector<long>& weights,
                 std::size_t from, long remaining, Word& prefix,
                 std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = from; i < sorted_hard.size(); ++i) {
    if (weights[i] > remaining) continue;
    std::size_t mark = prefix.size();
    prefix.insert(prefix.end(), sorted_hard[i].begin(), sorted_hard[i].end());
    crystal_dfs(sorted_hard, weights, i, remaining - weights[i], prefix, out);
    prefix.resize(mark);
  }
}

}  // namespace

std::vector<Word> crystal_words(const std::vector<Word>& hard,
                                const std::vector<unsigned>& degrees, long target) {
  std::vector<Word> sorted_hard = hard;
  std::sort(sorted_hard.begin(), sorted_hard.end(), LexLess{});
  std::vector<long> weights;
  weights.reserve(sorted_hard.size());
  for (const Word& u : sorted_hard) weights.push_back(weight(u, degrees));
  std::vector<Word> out;
  Word prefix;
  crystal_dfs(sorted_hard, weights, 0, target, prefix, out);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<NcPoly> skew_primitive_space(const RewriteSystem& sys,
                                         const Bicharacter& p,
                                         const std::vector<unsigned>& c) {
  std::vector<Word> basis = sys.normal_words_of_constitution(c);
  std::vector<NcPoly> out;
  if (basis.empty()) return out;
  SymbolsPtr syms = sys.symbols();

  // one defect per unknown; rows of the linear system are tensor monomials
  std::vector<TensorPoly> defects;
  std::map<TMono, std::size_t, TMonoLess> row_of;
  for (const Word& b : basis) {
    NcPoly f = NcPoly::monomial(syms, b, Scalar::one(syms));
    TensorPoly d = reduce_legs(sys, primitivity_defect(p, f));
    for (const auto& [m, coef] : d.terms()) row_of.emplace(m, 0);
    defects.push_back(std::move(d));
  }
  std::size_t nrows = 0;
  for (auto& [m, idx] : row_of) idx = nrows++;
  std::size_t ncols = basis.size();

  std::vector<std::vector<Scalar>> mat(
      nrows, std::vector<Scalar>(ncols, Scalar::zero(syms)));
  for (std::size_t j = 0; j < ncols; ++j)
    for (const auto& [m, coef] : defects[j].terms()) mat[row_of.at(m)][j] = coef;

  // reduced row echelon form over the scalar field
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t sel = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (!mat[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(mat[r], mat[sel]);
    Scalar inv = mat[r][col].inverse();
    for (std::size_t k = col; k < ncols; ++k) mat[r][k] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || mat[i][col].is_zero()) continue;
      Scalar f = mat[i][col];
      for (std::size_t k = col; k < ncols; ++k) mat[i][k] -= f * mat[r][k];
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++r;
  }

  for (std::size_t j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    NcPoly v(syms);
    v.add_term(basis[j], Scalar::one(syms));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (!mat[i][j].is_zero()) v.add_term(basis[pivot_col[i]], -mat[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

HardSetCertificate certify_hard_set(const RewriteSystem& sys,
                                    const std::vector<Word>& hard, long bound) {
  HardSetCertificate cert;
  const std::vector<unsigned>& deg = sys.degrees();
  std::set<Word, LexLess> in_set(hard.begin(), hard.end());
  if (in_set.size() != hard.size()) {
    cert.detail = "duplicate word in the proposed set";
    return cert;
  }
  for (const Word& u : hard) {
    if (u.empty() || !is_standard(u)) {
      cert.detail = "not standard: " + word_string(u);
      return cert;
    }
    if (!sys.word_irreducible(u)) {
      cert.detail = "reducible: " + word_string(u);
      return cert;
    }
    if (weight(u, deg) > bound) {
      cert.detail = "above the bound: " + word_string(u);
      return cert;
    }
  }
  for (std::size_t i = 0; i < sys.ngen(); ++i) {
    Word x{static_cast<Letter>(i)};
    if (sys.word_irreducible(x) != (in_set.count(x) != 0)) {
      cert.detail = "single letter mismatch: " + word_string(x);
      return cert;
    }
  }
  if (!sys.is_closed(bound)) {
    cert.detail = "system is not closed to the bound";
    return cert;
  }
  for (const Word& u : hard) {
    for (const Word& v : hard) {
      if (compare_lex(u, v) <= 0) continue;  // need u > v
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      if (weight(uv, deg) > bound) continue;
      if (!is_standard(uv)) continue;
      if (!sys.word_irreducible(uv)) continue;
      if (standard_split(uv) != u.size()) continue;
      if (!in_set.count(uv)) {
        cert.detail = "missing word: " + word_string(uv);
        return cert;
      }
    }
  }
  cert.ok = true;
  return cert;
}

}  // namespace qea

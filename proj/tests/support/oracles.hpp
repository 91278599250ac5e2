// oracles.hpp: independent reference implementations used to cross-check the
// engine. Everything here is written directly from the definitions and never
// calls the code paths under test: word combinatorics are re-derived from
// the order definition, quotient dimensions come from dense linear algebra
// on the free algebra (no rewriting), and the standard-word enumerations are
// brute force over all words.
#ifndef QEA_TESTS_ORACLES_HPP
#define QEA_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "qea/ncpoly.hpp"
#include "qea/word.hpp"

namespace oracle {

// The word order, transcribed from its definition: at the first differing
// position the smaller letter index wins; a proper prefix is greater than
// its extension. Returns negative / zero / positive like strcmp.
inline int compare(const qea::Word& a, const qea::Word& b) {
  std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? 1 : -1;
}

// A standard word is strictly greater than every proper ending of itself.
inline bool is_standard(const qea::Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    qea::Word ending(w.begin() + static_cast<long>(i), w.end());
    if (compare(w, ending) <= 0) return false;
  }
  return true;
}

// All factorizations into non-decreasing standard pieces, found by trying
// every cut mask. The theory says there is exactly one; the caller asserts.
inline std::vector<std::vector<qea::Word>> all_standard_factorizations(
    const qea::Word& w) {
  std::vector<std::vector<qea::Word>> result;
  if (w.empty()) return result;
  std::size_t cuts = w.size() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cuts); ++mask) {
    std::vector<qea::Word> pieces;
    qea::Word cur;
    bool ok = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      cur.push_back(w[i]);
      if (i == w.size() - 1 || (mask >> i) & 1) {
        if (!is_standard(cur)) { ok = false; break; }
        if (!pieces.empty() && compare(pieces.back(), cur) > 0) { ok = false; break; }
        pieces.push_back(cur);
        cur.clear();
      }
    }
    if (ok) result.push_back(std::move(pieces));
  }
  return result;
}

// All words of exact weighted degree d, in no particular order.
inline void words_of_weight(std::size_t ngen, const std::vector<unsigned>& degrees,
                            long d, qea::Word& cur, std::vector<qea::Word>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < ngen; ++i) {
    if (static_cast<long>(degrees[i]) > d) continue;
    cur.push_back(static_cast<qea::Letter>(i));
    words_of_weight(ngen, degrees, d - static_cast<long>(degrees[i]), cur, out);
    cur.pop_back();
  }
}

inline std::vector<qea::Word> words_of_weight(std::size_t ngen,
                                              const std::vector<unsigned>& degrees,
                                              long d) {
  std::vector<qea::Word> out;
  qea::Word cur;
  words_of_weight(ngen, degrees, d, cur, out);
  return out;
}

// Dimension of the degree-d component of the free algebra modulo the ideal
// generated by the relations, computed with dense Gaussian elimination over
// the exact scalar field: span{ a * r * b } inside the span of all words of
// weight d. No rewriting machinery is involved.
inline long quotient_dim(std::size_t ngen, const std::vector<unsigned>& degrees,
                         const std::vector<qea::NcPoly>& relations, long d) {
  using qea::Scalar;
  using qea::Word;

  std::vector<Word> words = words_of_weight(ngen, degrees, d);
  std::map<Word, std::size_t> col;
  for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = i;

  // Rows of the span, built by raw concatenation.
  std::vector<std::map<std::size_t, Scalar>> rows;
  for (const qea::NcPoly& r : relations) {
    long wr = 0;
    if (r.is_zero()) continue;
    wr = qea::weight(r.terms().begin()->first, degrees);
    for (long da = 0; da + wr <= d; ++da) {
      long db = d - wr - da;
      for (const Word& a : words_of_weight(ngen, degrees, da)) {
        for (const Word& b : words_of_weight(ngen, degrees, db)) {
          std::map<std::size_t, Scalar> row;
          for (const auto& [w, c] : r.terms()) {
            Word awb = a;
            awb.insert(awb.end(), w.begin(), w.end());
            awb.insert(awb.end(), b.begin(), b.end());
            auto it = row.find(col.at(awb));
            if (it == row.end()) {
              row.emplace(col.at(awb), c);
            } else {
              it->second = it->second + c;
              if (it->second.is_zero()) row.erase(it);
            }
          }
          if (!row.empty()) rows.push_back(std::move(row));
        }
      }
    }
  }

  // Gaussian elimination; pivots keyed by column.
  std::map<std::size_t, std::map<std::size_t, Scalar>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      std::size_t lead = row.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        Scalar inv = row.begin()->second.inverse();
        std::map<std::size_t, Scalar> norm;
        for (const auto& [j, c] : row) norm.emplace(j, c * inv);
        pivots.emplace(lead, std::move(norm));
        break;
      }
      Scalar f = row.begin()->second;
      for (const auto& [j, c] : p->second) {
        auto it = row.find(j);
        if (it == row.end()) {
          row.emplace(j, -(f * c));
        } else {
          it->second = it->second - f * c;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
  }
  return static_cast<long>(words.size()) - static_cast<long>(pivots.size());
}

// True when `factor` occurs as a contiguous factor of w.
inline bool contains_factor(const qea::Word& w, const qea::Word& factor) {
  if (factor.empty() || factor.size() > w.size()) return false;
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i)
    if (std::equal(factor.begin(), factor.end(), w.begin() + static_cast<long>(i)))
      return true;
  return false;
}

// Brute-force enumeration of the PBW generator words of a one-relation
// algebra whose only rewriting rule has the given leading word: all standard
// words of weight <= bound avoiding that factor, sorted ascending by
// (weight, word order) like the engine output.
inline std::vector<qea::Word> standard_words_avoiding(
    std::size_t ngen, const std::vector<unsigned>& degrees, long bound,
    const qea::Word& forbidden) {
  std::vector<qea::Word> out;
  for (long d = 1; d <= bound; ++d) {
    std::vector<qea::Word> layer;
    for (const qea::Word& w : words_of_weight(ngen, degrees, d))
      if (is_standard(w) && !contains_factor(w, forbidden)) layer.push_back(w);
    std::sort(layer.begin(), layer.end(),
              [](const qea::Word& a, const qea::Word& b) { return compare(a, b) < 0; });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Seeded nonzero rationals for specialization tests. `unit_safe` avoids 0
// and +-1 (so q-integers stay nonzero and nothing degenerates).
inline qea::Rat random_rational(std::mt19937_64& rng, bool unit_safe) {
  static const std::vector<qea::Rat> any = {
      qea::Rat(1),  qea::Rat(-1),    qea::Rat(2),    qea::Rat(1, 2),
      qea::Rat(-2), qea::Rat(3),     qea::Rat(2, 3), qea::Rat(-3, 2),
      qea::Rat(5),  qea::Rat(-5, 3), qea::Rat(7, 4), qea::Rat(1, 3)};
  static const std::vector<qea::Rat> safe = {
      qea::Rat(2),  qea::Rat(1, 2),  qea::Rat(-2),   qea::Rat(3),
      qea::Rat(2, 3), qea::Rat(-3, 2), qea::Rat(5),  qea::Rat(-5, 3),
      qea::Rat(7, 4), qea::Rat(1, 3), qea::Rat(-1, 3), qea::Rat(4)};
  const auto& pool = unit_safe ? safe : any;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace oracle

#endif

#include "qea/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qea {

int compare_lex(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // smaller index = greater letter
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? 1 : -1;  // proper prefix beats extension
}

long weight(const Word& w, const std::vector<unsigned>& degrees) {
  long s = 0;
  for (Letter l : w) {
    check_invariant(l < degrees.size(), "weight: letter out of range");
    s += degrees[l];
  }
  return s;
}

int compare_hall(const Word& a, const Word& b, const std::vector<unsigned>& degrees) {
  long wa = weight(a, degrees), wb = weight(b, degrees);
  if (wa != wb) return wa < wb ? -1 : 1;
  return compare_lex(a, b);
}

// In reversed reading order the word order is plain lexicographic on letter
// values and standard = Lyndon, so both the test and the factorization are
// Duval's algorithm; `le` is "letter a is lower or equal in the flipped
// alphabet".
namespace {
inline bool letter_le(Letter a, Letter b) { return a <= b; }
}  // namespace

bool is_standard(const Word& w) {
  if (w.empty()) return false;
  // w standard iff w > every proper ending; equivalently w is Lyndon for the
  // value order: w strictly smaller (value-lex, prefix-smaller) than all its
  // proper suffixes.
  std::size_t n = w.size();
  for (std::size_t s = 1; s < n; ++s) {
    // compare w with w[s..): value-lex
    std::size_t i = 0, j = s;
    while (j < n && w[i] == w[j]) ++i, ++j;
    if (j == n) return false;      // suffix is a prefix of w (or equal): w >= suffix in value order
    if (w[i] > w[j]) return false; // suffix smaller
  }
  return true;
}

std::vector<Word> standard_factorization(const Word& w) {
  std::vector<Word> out;
  std::size_t n = w.size(), i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && letter_le(w[k], w[j])) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + j - k));
      i += j - k;
    }
  }
  // Duval emits factors non-increasing in value order, i.e. non-decreasing
  // in the word order used here.
  return out;
}

std::vector<unsigned> constitution(const Word& w, std::size_t ngen) {
  std::vector<unsigned> c(ngen, 0);
  for (Letter l : w) {
    check_invariant(l < ngen, "constitution: letter out of range");
    ++c[l];
  }
  return c;
}

BracketTree BracketTree::leaf(Letter l) {
  BracketTree t;
  t.word_ = {l};
  return t;
}

BracketTree BracketTree::node(const BracketTree& left, const BracketTree& right) {
  BracketTree t;
  t.word_ = left.word_;
  t.word_.insert(t.word_.end(), right.word_.begin(), right.word_.end());
  t.left_ = std::make_shared<const BracketTree>(left);
  t.right_ = std::make_shared<const BracketTree>(right);
  return t;
}

Letter BracketTree::letter() const {
  check_invariant(is_leaf(), "letter() on interior node");
  return word_[0];
}

const BracketTree& BracketTree::left() const {
  check_invariant(!is_leaf(), "left() on leaf");
  return *left_;
}

const BracketTree& BracketTree::right() const {
  check_invariant(!is_leaf(), "right() on leaf");
  return *right_;
}

bool BracketTree::operator==(const BracketTree& o) const {
  if (word_ != o.word_) return false;
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return true;
  return *left_ == *o.left_ && *right_ == *o.right_;
}

std::string BracketTree::to_string() const {
  if (is_leaf()) return "x" + std::to_string(word_[0] + 1);
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

std::size_t standard_split(const Word& w) {
  check_invariant(w.size() >= 2, "standard_split needs length >= 2");
  check_invariant(is_standard(w), "standard_split on non-standard word");
  for (std::size_t p = 1; p < w.size(); ++p) {
    Word u(w.begin(), w.begin() + static_cast<long>(p));
    Word v(w.begin() + static_cast<long>(p), w.end());
    if (is_standard(u) && is_standard(v)) return p;
  }
  throw invariant_error("standard word without a standard split");
}

BracketTree standard_bracketing(const Word& w) {
  check_invariant(!w.empty(), "standard_bracketing on empty word");
  if (w.size() == 1) return BracketTree::leaf(w[0]);
  std::size_t p = standard_split(w);
  Word u(w.begin(), w.begin() + static_cast<long>(p));
  Word v(w.begin() + static_cast<long>(p), w.end());
  return BracketTree::node(standard_bracketing(u), standard_bracketing(v));
}

std::string word_string(const Word& w) {
  std::ostringstream out;
  for (Letter l : w) out << 'x' << (l + 1);
  return out.str();
}

Word parse_word(std::string_view text, std::size_t ngen) {
  Word w;
  std::size_t i = 0, n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'x') throw parse_error("expected 'x' in word", i);
    ++i;
    std::size_t start = i;
    unsigned long idx = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + static_cast<unsigned long>(text[i] - '0');
      if (idx > 1000000) throw parse_error("generator index too large", start);
      ++i;
    }
    if (i == start) throw parse_error("expected generator index after 'x'", i);
    if (idx < 1 || idx > ngen) throw parse_error("generator index out of range", start);
    w.push_back(static_cast<Letter>(idx - 1));
  }
  return w;
}

}  // namespace qea

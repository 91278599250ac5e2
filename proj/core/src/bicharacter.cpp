#include "qea/bicharacter.hpp"

namespace qea {

GroupExp group_of_constitution(const std::vector<unsigned>& c) {
  GroupExp g(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) g[i] = static_cast<long>(c[i]);
  return g;
}

Bicharacter::Bicharacter(SymbolsPtr syms, std::vector<std::vector<Scalar>> entries)
    : syms_(std::move(syms)), entries_(std::move(entries)) {
  std::size_t n = entries_.size();
  for (const auto& row : entries_) {
    check_invariant(row.size() == n, "bicharacter matrix must be square");
    for (const Scalar& s : row) {
      if (s.is_zero()) throw domain_error("bicharacter entries must be nonzero");
    }
  }
}

Scalar Bicharacter::of_constitutions(const std::vector<unsigned>& cu,
                                     const std::vector<unsigned>& cv) const {
  std::size_t n = rank();
  check_invariant(cu.size() == n && cv.size() == n, "constitution size mismatch");
  Scalar r = Scalar::one(syms_);
  for (std::size_t i = 0; i < n; ++i) {
    if (cu[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (cv[j] == 0) continue;
      r = r * entries_[i][j].pow(static_cast<long>(cu[i]) * static_cast<long>(cv[j]));
    }
  }
  return r;
}

Scalar Bicharacter::of_words(const Word& u, const Word& v) const {
  return of_constitutions(constitution(u, rank()), constitution(v, rank()));
}

Scalar Bicharacter::chi(const std::vector<unsigned>& cu, const GroupExp& h) const {
  std::size_t n = rank();
  check_invariant(cu.size() == n && h.size() == n, "chi: size mismatch");
  Scalar r = Scalar::one(syms_);
  for (std::size_t i = 0; i < n; ++i) {
    if (cu[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (h[j] == 0) continue;
      r = r * entries_[i][j].pow(static_cast<long>(cu[i]) * h[j]);
    }
  }
  return r;
}

}  // namespace qea

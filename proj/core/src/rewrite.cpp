#include "qea/rewrite.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

namespace qea {

RewriteSystem::RewriteSystem(SymbolsPtr syms, std::size_t ngen,
                             std::vector<unsigned> degrees)
    : syms_(std::move(syms)), ngen_(ngen), degrees_(std::move(degrees)) {
  if (degrees_.empty()) degrees_.assign(ngen_, 1);
  check_invariant(degrees_.size() == ngen_, "degree vector size mismatch");
  for (unsigned d : degrees_)
    if (d == 0) throw domain_error("generator degrees must be positive");
}

void RewriteSystem::add_rule(Word lhs, NcPoly rhs) {
  check_invariant(!lhs.empty(), "empty rule left side");
  std::vector<unsigned> cl = constitution(lhs, ngen_);
  for (const auto& [w, c] : rhs.terms()) {
    check_invariant(compare_lex(w, lhs) < 0, "rule tail not below its leading word");
    check_invariant(constitution(w, ngen_) == cl, "rule tail changes constitution");
  }
  for (const RewriteRule& r : rules_)
    check_invariant(r.lhs != lhs, "duplicate rule leading word");
  rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
  nf_cache_.clear();
  closed_to_ = -1;
}

namespace {
bool occurs_at(const Word& w, const Word& pat, std::size_t pos) {
  if (pos + pat.size() > w.size()) return false;
  return std::equal(pat.begin(), pat.end(), w.begin() + static_cast<long>(pos));
}
}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_match(
    const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (occurs_at(w, rules_[r].lhs, pos)) return std::make_pair(pos, r);
    }
  }
  return std::nullopt;
}

bool RewriteSystem::word_irreducible(const Word& w) const {
  return !find_match(w).has_value();
}

NcPoly RewriteSystem::reduce_word(const Word& w) const {
  if (auto it = nf_cache_.find(w); it != nf_cache_.end()) return it->second;
  NcPoly out(syms_);
  std::map<Word, Scalar, WordGreater> work;
  work.emplace(w, Scalar::one(syms_));
  while (!work.empty()) {
    auto top = work.begin();
    Word cur = top->first;
    Scalar coeff = top->second;
    work.erase(top);
    if (coeff.is_zero()) continue;
    if (cur != w) {
      if (auto it = nf_cache_.find(cur); it != nf_cache_.end()) {
        for (const auto& [v, a] : it->second.terms()) out.add_term(v, a * coeff);
        continue;
      }
    }
    auto match = find_match(cur);
    if (!match) {
      out.add_term(cur, coeff);
      continue;
    }
    auto [pos, r] = *match;
    const RewriteRule& rule = rules_[r];
    // cur = prefix . lhs . suffix; replace lhs by the tail. Every produced
    // word is strictly smaller, so the loop terminates.
    for (const auto& [v, a] : rule.rhs.terms()) {
      Word next;
      next.reserve(cur.size() - rule.lhs.size() + v.size());
      next.insert(next.end(), cur.begin(), cur.begin() + static_cast<long>(pos));
      next.insert(next.end(), v.begin(), v.end());
      next.insert(next.end(), cur.begin() + static_cast<long>(pos + rule.lhs.size()),
                  cur.end());
      Scalar add = coeff * a;
      auto [it, fresh] = work.emplace(std::move(next), add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  nf_cache_.emplace(w, out);
  return out;
}

NcPoly RewriteSystem::reduce(const NcPoly& f) const {
  NcPoly out(syms_);
  for (const auto& [w, c] : f.terms()) {
    NcPoly nf = reduce_word(w);
    for (const auto& [v, a] : nf.terms()) out.add_term(v, a * c);
  }
  return out;
}

std::vector<RewriteSystem::Ambiguity> RewriteSystem::ambiguities_with(
    std::size_t k, long max_weight) const {
  std::vector<Ambiguity> out;
  auto emit_overlaps = [&](std::size_t i, std::size_t j) {
    const Word& a = rules_[i].lhs;
    const Word& b = rules_[j].lhs;
    std::size_t maxL = std::min(a.size(), b.size()) - 1;
    for (std::size_t L = 1; L <= maxL; ++L) {
      if (!std::equal(b.begin(), b.begin() + static_cast<long>(L),
                      a.end() - static_cast<long>(L)))
        continue;
      Word w = a;
      w.insert(w.end(), b.begin() + static_cast<long>(L), b.end());
      if (weight(w, degrees_) > max_weight) continue;
      out.push_back(Ambiguity{std::move(w), i, j, a.size() - L});
    }
  };
  auto emit_inclusions = [&](std::size_t i, std::size_t j) {
    // lhs of j strictly inside lhs of i
    const Word& a = rules_[i].lhs;
    const Word& b = rules_[j].lhs;
    if (b.size() >= a.size()) return;
    if (weight(a, degrees_) > max_weight) return;
    for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
      if (occurs_at(a, b, pos)) out.push_back(Ambiguity{a, i, j, pos});
    }
  };
  for (std::size_t r = 0; r <= k; ++r) {
    emit_overlaps(k, r);
    if (r != k) {
      emit_overlaps(r, k);
      emit_inclusions(k, r);
      emit_inclusions(r, k);
    }
  }
  return out;
}

NcPoly RewriteSystem::composition_defect(const Ambiguity& a) const {
  const RewriteRule& ri = rules_[a.i];
  const RewriteRule& rj = rules_[a.j];
  check_invariant(occurs_at(a.word, ri.lhs, 0), "ambiguity: rule i not at front");
  check_invariant(occurs_at(a.word, rj.lhs, a.shift), "ambiguity: rule j misplaced");
  NcPoly suffix_i = NcPoly::monomial(
      syms_, Word(a.word.begin() + static_cast<long>(ri.lhs.size()), a.word.end()),
      Scalar::one(syms_));
  NcPoly prefix_j = NcPoly::monomial(
      syms_, Word(a.word.begin(), a.word.begin() + static_cast<long>(a.shift)),
      Scalar::one(syms_));
  NcPoly suffix_j = NcPoly::monomial(
      syms_,
      Word(a.word.begin() + static_cast<long>(a.shift + rj.lhs.size()), a.word.end()),
      Scalar::one(syms_));
  return ri.rhs * suffix_i - prefix_j * rj.rhs * suffix_j;
}

bool RewriteSystem::is_closed(long max_weight) const {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    for (const Ambiguity& a : ambiguities_with(k, max_weight)) {
      if (!reduce(composition_defect(a)).is_zero()) return false;
    }
  }
  return true;
}

void RewriteSystem::complete(const std::vector<NcPoly>& relations, long max_weight) {
  rules_.clear();
  nf_cache_.clear();
  closed_to_ = -1;

  std::deque<NcPoly> pending;
  for (const NcPoly& f : relations) {
    if (!f.homogeneous_constitution(ngen_))
      throw domain_error("inhomogeneous relation: " + f.to_string());
    pending.push_back(f);
  }

  auto absorb = [&](const NcPoly& f0) {
    NcPoly f = reduce(f0);
    if (f.is_zero()) return;
    const Word& lead = f.leading().first;
    if (lead.empty()) throw domain_error("contradictory relation: nonzero constant");
    if (weight(lead, degrees_) > max_weight) return;  // beyond the bound
    f = f.scale(f.leading().second.inverse());
    Word lhs = f.leading().first;
    NcPoly rhs = NcPoly::monomial(syms_, lhs, Scalar::one(syms_)) - f;
    // Retire every rule whose leading word the new rule reduces.
    std::vector<RewriteRule> keep;
    keep.reserve(rules_.size() + 1);
    for (RewriteRule& r : rules_) {
      bool superseded = false;
      for (std::size_t pos = 0; pos + lhs.size() <= r.lhs.size() && !superseded; ++pos)
        superseded = occurs_at(r.lhs, lhs, pos);
      if (superseded) {
        pending.push_back(NcPoly::monomial(syms_, r.lhs, Scalar::one(syms_)) - r.rhs);
      } else {
        keep.push_back(std::move(r));
      }
    }
    keep.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
    rules_ = std::move(keep);
    nf_cache_.clear();
    // Queue the compositions this rule participates in.
    std::size_t k = rules_.size() - 1;
    for (const Ambiguity& a : ambiguities_with(k, max_weight))
      pending.push_back(composition_defect(a));
  };

  for (;;) {
    while (!pending.empty()) {
      NcPoly f = std::move(pending.front());
      pending.pop_front();
      absorb(f);
    }
    std::sort(rules_.begin(), rules_.end(), [&](const RewriteRule& a, const RewriteRule& b) {
      return compare_hall(a.lhs, b.lhs, degrees_) < 0;
    });
    nf_cache_.clear();
    for (RewriteRule& r : rules_) r.rhs = reduce(r.rhs);
    nf_cache_.clear();
    bool dirty = false;
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      for (const Ambiguity& a : ambiguities_with(k, max_weight)) {
        NcPoly d = reduce(composition_defect(a));
        if (!d.is_zero()) {
          pending.push_back(std::move(d));
          dirty = true;
        }
      }
    }
    if (!dirty) break;
  }
  closed_to_ = max_weight;
}

std::vector<Word> RewriteSystem::leading_words() const {
  std::vector<Word> out;
  out.reserve(rules_.size());
  for (const RewriteRule& r : rules_) out.push_back(r.lhs);
  return out;
}

namespace {
// Does any rule lhs match a suffix of w ending at the last position?
bool tail_reducible(const std::vector<RewriteRule>& rules, const Word& w) {
  for (const RewriteRule& r : rules) {
    if (r.lhs.size() > w.size()) continue;
    if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - static_cast<long>(r.lhs.size())))
      return true;
  }
  return false;
}
}  // namespace

std::vector<Word> RewriteSystem::normal_words_of_weight(long target) const {
  std::vector<Word> out;
  Word cur;
  auto dfs = [&](auto&& self, long wsofar) -> void {
    if (wsofar == target) {
      out.push_back(cur);
      return;
    }
    for (Letter l = 0; l < ngen_; ++l) {
      long wnext = wsofar + degrees_[l];
      if (wnext > target) continue;
      cur.push_back(l);
      if (!tail_reducible(rules_, cur)) self(self, wnext);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Word> RewriteSystem::normal_words_of_constitution(
    const std::vector<unsigned>& c) const {
  check_invariant(c.size() == ngen_, "constitution size mismatch");
  std::vector<Word> out;
  Word cur;
  std::vector<unsigned> left = c;
  std::size_t remaining = 0;
  for (unsigned k : c) remaining += k;
  auto dfs = [&](auto&& self, std::size_t left_total) -> void {
    if (left_total == 0) {
      out.push_back(cur);
      return;
    }
    for (Letter l = 0; l < ngen_; ++l) {
      if (left[l] == 0) continue;
      --left[l];
      cur.push_back(l);
      if (!tail_reducible(rules_, cur)) self(self, left_total - 1);
      cur.pop_back();
      ++left[l];
    }
  };
  dfs(dfs, remaining);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::string system_to_json(const RewriteSystem& sys) {
  nlohmann::ordered_json j;
  j["generators"] = sys.ngen();
  j["degrees"] = sys.degrees();
  j["closed_to"] = sys.closed_to();
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  for (const RewriteRule& r : sys.rules()) {
    nlohmann::ordered_json jr;
    jr["lhs"] = word_string(r.lhs);
    nlohmann::ordered_json tail = nlohmann::ordered_json::array();
    for (const auto& [w, c] : r.rhs.terms())
      tail.push_back({word_string(w), c.to_string()});
    jr["rhs"] = std::move(tail);
    rules.push_back(std::move(jr));
  }
  j["rules"] = std::move(rules);
  return j.dump(2);
}

RewriteSystem system_from_json(SymbolsPtr syms, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad system JSON: ") + e.what(), 0);
  }
  try {
    std::size_t ngen = j.at("generators").get<std::size_t>();
    std::vector<unsigned> degrees = j.at("degrees").get<std::vector<unsigned>>();
    RewriteSystem sys(syms, ngen, std::move(degrees));
    for (const auto& jr : j.at("rules")) {
      Word lhs = parse_word(jr.at("lhs").get<std::string>(), ngen);
      NcPoly rhs(syms);
      for (const auto& term : jr.at("rhs")) {
        Word w = parse_word(term.at(0).get<std::string>(), ngen);
        Scalar c = Scalar::parse(syms, term.at(1).get<std::string>());
        rhs.add_term(w, c);
      }
      sys.add_rule(std::move(lhs), std::move(rhs));
    }
    if (j.contains("closed_to")) sys.mark_closed(j.at("closed_to").get<long>());
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad system JSON: ") + e.what(), 0);
  }
}

}  // namespace qea

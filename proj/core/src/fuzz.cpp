#include "qea/fuzz.hpp"

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "qea/bicharacter.hpp"
#include "qea/errors.hpp"
#include "qea/ncpoly.hpp"

namespace qea {

namespace {

// Nonzero rationals the matrix entries are drawn from; mixes signs,
// integers, and proper fractions so cancellations are exercised.
const std::vector<Rat> kPool = {
    Rat(1),      Rat(-1),     Rat(2),      Rat(1, 2),  Rat(-2),
    Rat(-1, 2),  Rat(3),      Rat(1, 3),   Rat(2, 3),  Rat(-3, 2),
    Rat(5),      Rat(-5, 3),  Rat(7, 4),   Rat(-4, 7),
};

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(rank - 1));
  Word w(len(rng));
  for (Letter& l : w) l = letter(rng);
  return w;
}

Bicharacter random_bicharacter(std::mt19937_64& rng, const SymbolsPtr& syms,
                               std::size_t rank) {
  std::uniform_int_distribution<std::size_t> pick(0, kPool.size() - 1);
  std::vector<std::vector<Scalar>> entries(rank, std::vector<Scalar>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      entries[i][j] = Scalar::from_rat(syms, kPool[pick(rng)]);
  return Bicharacter(syms, std::move(entries));
}

const char* identity_name(BracketIdentity id) {
  switch (id) {
    case BracketIdentity::reassociate_a: return "reassociate-a";
    case BracketIdentity::reassociate_b: return "reassociate-b";
    case BracketIdentity::leibniz_right: return "leibniz-right";
    case BracketIdentity::leibniz_left: return "leibniz-left";
    case BracketIdentity::square: return "square";
  }
  return "?";
}

}  // namespace

FuzzReport fuzz_identities(std::size_t rank, unsigned long trials,
                           unsigned long seed, FuzzMode mode) {
  if (rank == 0) throw domain_error("fuzz rank must be positive");
  FuzzReport rep;
  rep.rank = rank;
  rep.trials = trials;
  rep.seed = seed;
  rep.mode = mode;

  SymbolsPtr syms = make_symbols({});
  std::mt19937_64 rng(seed);

  for (unsigned long t = 0; t < trials; ++t) {
    if (mode == FuzzMode::general) {
      Bicharacter p = random_bicharacter(rng, syms, rank);
      Word u = random_word(rng, rank, 3);
      Word v = random_word(rng, rank, 3);
      Word w = random_word(rng, rank, 3);
      for (BracketIdentity id :
           {BracketIdentity::reassociate_a, BracketIdentity::reassociate_b,
            BracketIdentity::leibniz_right, BracketIdentity::leibniz_left,
            BracketIdentity::square}) {
        NcPoly defect = bracket_identity_defect(p, id, u, v, w);
        ++rep.checks;
        if (!defect.is_zero()) {
          ++rep.failures;
          if (rep.failing.size() < 8) {
            std::ostringstream os;
            os << "trial " << t << " " << identity_name(id) << " u="
               << word_string(u) << " v=" << word_string(v)
               << " w=" << word_string(w);
            rep.failing.push_back(os.str());
          }
        }
      }
    } else {
      // Square identity at p(v,v) = -1: the correction term vanishes, so
      // [u, v^2] must literally equal [[u, v], v].
      std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(rank - 1));
      Bicharacter base = random_bicharacter(rng, syms, rank);
      Letter k = letter(rng);
      std::vector<std::vector<Scalar>> entries(rank, std::vector<Scalar>(rank));
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) entries[i][j] = base.at(i, j);
      entries[k][k] = Scalar::from_rat(syms, Rat(-1));
      Bicharacter p(syms, std::move(entries));

      Word u = random_word(rng, rank, 3);
      NcPoly up = NcPoly::monomial(syms, u, Scalar::from_rat(syms, Rat(1)));
      NcPoly vp = NcPoly::generator(syms, k);
      NcPoly defect = skew_commutator(p, up, vp * vp) -
                      skew_commutator(p, skew_commutator(p, up, vp), vp);
      ++rep.checks;
      if (!defect.is_zero()) {
        ++rep.failures;
        if (rep.failing.size() < 8) {
          std::ostringstream os;
          os << "trial " << t << " square-at-minus-one u=" << word_string(u)
             << " v=x" << (k + 1);
          rep.failing.push_back(os.str());
        }
      }
    }
  }
  return rep;
}

std::string fuzz_report_to_json(const FuzzReport& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["mode"] = r.mode == FuzzMode::general ? "general" : "square-at-minus-one";
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["failing"] = r.failing;
  return j.dump(2);
}

std::string fuzz_report_to_text(const FuzzReport& r) {
  std::ostringstream os;
  os << "identity fuzz: rank " << r.rank << ", " << r.trials << " trials, seed "
     << r.seed << ", mode "
     << (r.mode == FuzzMode::general ? "general" : "square-at-minus-one")
     << "\n"
     << r.checks << " checks, " << r.failures << " failures\n";
  for (const std::string& s : r.failing) os << "  FAIL " << s << "\n";
  return os.str();
}

}  // namespace qea

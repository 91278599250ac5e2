// presentation.hpp: generator/relation presentations over a bicharacter.
//
// A presentation fixes the generator count and degrees, the parameter table,
// the bicharacter matrix, and a list of constitution-homogeneous defining
// relations (each one a polynomial that equals zero). The classical series
// presets build the quantified Serre relations for the four Cartan families
// over a generic constrained parameter set: the diagonal entries and the
// products p_ij p_ji are forced by the quantification conditions, one free
// parameter t_ij remains per unordered pair, plus the single diagonal
// parameter q.
#ifndef QEA_PRESENTATION_HPP
#define QEA_PRESENTATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qea/bicharacter.hpp"
#include "qea/ncpoly.hpp"

namespace qea {

enum class Series { A, B, C, D };

struct CartanData {
  std::size_t n = 0;
  std::vector<std::vector<int>> a;  // Cartan matrix, a[i][i] = 2

  static CartanData series(Series s, std::size_t n);
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && a[i][j] != 0; }
};

struct Presentation {
  std::size_t ngen;
  std::vector<unsigned> degrees;
  SymbolsPtr params;
  Bicharacter bichar;
  std::vector<NcPoly> relations;
  std::optional<std::string> kind;
};

// "a2", "b3", "d4" -> series + rank. Rank must be at least 2 (4 for D).
std::optional<std::pair<Series, std::size_t>> parse_preset_name(std::string_view name);
std::string preset_name(Series s, std::size_t n);

// The quantified Serre relations of the Cartan datum over the bicharacter.
// Copies of the smaller-index generator attach on the left, copies of the
// larger-index one on the right; non-adjacent pairs give plain skew
// commutators.
std::vector<NcPoly> serre_relations(const CartanData& cd, const Bicharacter& p);

// Existence of the quantification: p_ij p_ji = p_ii^{a_ij} for every ordered
// pair i != j.
bool existence_check(const CartanData& cd, const Bicharacter& p);

Presentation generic_presentation(Series s, std::size_t n);

// Expected outputs for the series presets, generated from the closed-form
// word families; both lists are sorted ascending by (weight, word order).
struct ExpectedLists {
  std::vector<Word> hard;        // PBW generator words
  std::vector<Word> gs_leading;  // leading words of the closed system
};
ExpectedLists expected_lists(Series s, std::size_t n);

// Completion bound that covers the expected system and every check that the
// preset participates in.
long verify_bound(Series s, std::size_t n);

// Relation expression parser. Integers, parameters, generators x<k>,
// products by juxtaposition or '*', '/', powers, parentheses, and the skew
// commutator bracket [e1,e2]. Division and negative powers require scalar
// operands; brackets require homogeneous ones.
NcPoly parse_relation(const Bicharacter& p, std::string_view text);

// JSON round-trip.
Presentation presentation_from_json(std::string_view text);
std::string presentation_to_json(const Presentation& pr);

// FNV-1a over the canonical serialization, kind excluded.
std::uint64_t presentation_hash(const Presentation& pr);

// Substitutes rational values for a subset of the parameters everywhere.
// Throws domain_error if a bicharacter entry vanishes or a pole is hit.
Presentation specialize(const Presentation& pr, const std::map<std::string, Rat>& values);

// Series preset with the bicharacter twisted by a rational 2-cocycle:
// p'_ij = p_ij z_ij where z_ii = 1 and z_ij z_ji = 1. The twist preserves
// the quantification conditions; relations are rebuilt from the twisted
// matrix.
Presentation z_deformed_presentation(Series s, std::size_t n,
                                     const std::vector<std::vector<Rat>>& z);

}  // namespace qea

#endif

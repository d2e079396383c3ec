#pragma once

#include <string>
#include <vector>

#include "spheretile/linear.hpp"
#include "spheretile/vertex.hpp"

namespace spheretile {

// Side symbols ordered a > b > c (lengths in units of pi).
enum class Side { a = 0, b = 1, c = 2 };

using EdgeWord = std::vector<Side>;

std::string word_str(const EdgeWord& w);  // "c+2a+c"

// Render an equality over (a, b, c) with positive coefficients on both sides,
// fewer-term side first: "2b = a+c", "a = 2c".
std::string relation_str(const LinCon& con);

// Linear relations over the side lengths (a, b, c); reuses LinCon with the
// variable order (a, b, c).
struct LengthRelationSet {
  std::vector<LinCon> cons;

  // 0 < c < b < a < 1 plus the triangle inequality a < b + c (the other two
  // follow from the ordering).
  static LengthRelationSet base();
};

// One row of the extended-edge grammar. Families 1..7 are parametric in the
// repetition count k; family 8 is the great-circle marker (no words).
struct ExtendedEdgePattern {
  int family = 0;  // 0 = side-to-side (used by match_words only)
  int k = 0;
  EdgeWord top, bottom;
  std::vector<LinCon> forced_relations;  // length equality after cancelling ka

  std::string str() const;  // "c+2a+c = b+a+b"; "great circle" for family 8
};

// All instantiations of families 1..7 for k <= k_max, plus the family-8 marker.
std::vector<ExtendedEdgePattern> enumerate_patterns(int k_max);

struct MatchResult {
  bool matched = false;
  bool side_to_side = false;
  ExtendedEdgePattern pattern;  // valid when matched && !side_to_side
  std::string reason;           // set when !matched
};

// Match a proposed pair of edge words against the grammar (up to swapping the
// rows and reading the edge from the other end), requiring the pattern's
// forced relations to be satisfiable together with the given relations.
// Throws std::invalid_argument if the given relations are already infeasible.
MatchResult match_words(const EdgeWord& top, const EdgeWord& bottom,
                        const LengthRelationSet& relations);

// Forced side-length relations for an AVC's half vertices: any realization
// must satisfy at least one alternative (an alternative is a conjunction; an
// empty conjunction means a relation-free pattern is compatible).
struct ForcedRelationOutcome {
  std::vector<std::vector<LinCon>> alternatives;
  bool contradiction = false;  // no pattern can host any of the AVC's halves
};

// Supported shapes: alpha absent from all half vertices, or beta absent (the
// gamma-absent case has no matching grammar). Throws std::invalid_argument
// ("Unsupported") otherwise.
ForcedRelationOutcome forced_relations_for_avc(const AVC& avc, int k_max = 2);

}  // namespace spheretile

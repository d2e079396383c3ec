#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spheretile/angle.hpp"
#include "spheretile/linear.hpp"

namespace spheretile {

// Exponent vector of a vertex: alpha^n1 beta^n2 gamma^n3, full (corner sum
// 2 pi) or half (corner sum pi, interior of a side).
struct VertexVector {
  std::array<int, 3> n{0, 0, 0};
  bool half = false;

  int degree() const { return n[0] + n[1] + n[2]; }
  bool all_even() const { return n[0] % 2 == 0 && n[1] % 2 == 0 && n[2] % 2 == 0; }
  auto operator<=>(const VertexVector&) const = default;
};

// Sort key used for all reproducible listings: (kind, degree, n1, n2, n3).
bool vertex_less(const VertexVector& x, const VertexVector& y);

std::string vertex_str(const VertexVector& v);          // compact: "a2bc", "b4c4"
VertexVector parse_vertex(const std::string& s);        // inverse of vertex_str

struct AVCEntry {
  VertexVector vertex;
  long count = -1;  // -1 = unconstrained
};

struct AVC {
  std::vector<AVCEntry> entries;
  long f = 0;
};

std::string avc_record(const AVCEntry& e);   // "a^2 b^1 c^0 full x4" / "... x?"
AVCEntry parse_avc_record(const std::string& line);

// --- enumeration and derivation -------------------------------------------

// All n >= 0 with n.(alpha,beta,gamma) = 2 (full) or 1 (half), satisfiable
// for some t in the triple's bound. Throws UnboundedEnumeration (as
// std::runtime_error) when some angle has no positive rational lower bound.
std::vector<VertexVector> enumerate_vertices(const AngleTriple& angles,
                                             const IntervalBound& bound, bool half);

struct LowDegreeCatalog {
  std::vector<VertexVector> full3, full4, full5, half2;
};
// Candidate vertices of a scalene-ordered tile with f > 4, pruned by exact
// feasibility of {1 < sum < 2, 0 < gamma < beta < alpha < 1}.
LowDegreeCatalog low_degree_catalog();

// det(u, m, n) = 0 with u = (1,1,1). (f does not enter the determinant; it is
// accepted for interface parity with the line formulation.)
bool is_collinear(const VertexVector& m, const VertexVector& n, long f);

// Exact feasibility of the base angle system for a full seed at tile count f:
// sum = 1 + 4/f, seed.angles = 2, and the scalene chain; strict by default,
// closure (<=) when strict = false (gamma > 0 stays strict either way).
bool base_feasible(const VertexVector& seed, long f, bool strict = true);

// Concrete AVC derivation: all full vertices on Line{seed, (2f/(f+4))u} with
// nonnegative integer coordinates and degree >= 3, given a feasible base
// system; halves are the all-even fulls halved. Entries sorted, counts
// unconstrained. Throws DegenerateSeed (std::invalid_argument) if seed ~ u.
AVC derive_avc(const VertexVector& seed, long f);

// All integer points on the line at f (degree >= 3 filter applied, base
// feasibility NOT applied) — building block shared with the oracle tests.
std::vector<VertexVector> line_lattice_points(const VertexVector& seed, long f);

bool balance_filter(const AVC& avc);

// --- symbolic derivation (table rows) -------------------------------------

// Exponent (a*f + b)/d in lowest terms, d > 0.
struct FLin {
  long a = 0, b = 0, d = 1;
  static FLin constant(long v) { return {0, v, 1}; }
  long eval(long f) const;             // throws if not integral
  bool is_constant() const { return a == 0 && d == 1; }
  std::string str() const;             // "f/4", "(f+4)/8", "3"
};

struct SymVertex {
  std::array<FLin, 3> e;
  bool half = false;
};

// A congruence family of companion cells: for f ≡ res (mod mod), the fulls
// listed (beyond the seed); halves carry their own (coarser) congruence.
struct FamilyCell {
  long mod = 1, res = 0;
  std::vector<SymVertex> fulls;
  bool has_halves = false;
  long half_mod = 1, half_res = 0;
  std::vector<SymVertex> halves;
};

struct SporadicCell {
  long f = 0;
  std::vector<VertexVector> fulls, halves;  // beyond the seed
};

struct DerivedAVC {
  VertexVector seed;
  std::string relation;               // e.g. "2n2 = n1+n3"
  bool seed_half = false;             // seed all even => seed/2 half at every f
  std::vector<FamilyCell> families;   // symbolic rows
  std::vector<SporadicCell> sporadics;
};

// Symbolic derivation over all f (concrete scan up to scan_limit for the
// sporadic part, exact congruence analysis for the families).
DerivedAVC derive_avc_symbolic(const VertexVector& seed, long scan_limit = 2000);

// The linear relation satisfied by every vertex collinear with the seed,
// rendered with positive coefficients on both sides.
std::string collinear_relation(const VertexVector& seed);

}  // namespace spheretile

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spheretile/angle.hpp"
#include "spheretile/counting.hpp"
#include "spheretile/edges.hpp"

namespace spheretile {

enum class Corner { alpha = 0, beta = 1, gamma = 2 };

enum class Chirality { direct, mirrored };

std::string corner_str(Corner c);
Corner parse_corner(const std::string& s);

struct Tile {
  int id = 0;
  Chirality chirality = Chirality::direct;
};

// A segment of a tile side: side `side` of tile `tile`, piece `seg` counted
// from the side's start corner (c runs alpha->beta, a runs beta->gamma,
// b runs gamma->alpha along the boundary cycle alpha,beta,gamma).
struct SegRef {
  int tile = 0;
  Side side = Side::a;
  int seg = 0;
  auto operator<=>(const SegRef&) const = default;
};

struct CornerRef {
  int tile = 0;
  Corner corner = Corner::alpha;
  auto operator<=>(const CornerRef&) const = default;
};

struct SideRef {
  int tile = 0;
  Side side = Side::a;
  auto operator<=>(const SideRef&) const = default;
};

// A declared vertex: its incident corners and, for a half vertex, the side in
// whose interior it sits.
struct VertexRecord {
  bool half = false;
  std::vector<CornerRef> corners;
  std::optional<SideRef> host;
};

// Affine length over the side symbols: v[0]*a + v[1]*b + v[2]*c + constant,
// all in units of pi, plus (for segments of a closed extended edge) a multiple
// of that edge's free rotation offset phi.
struct SideLen {
  std::array<Rational, 3> v{Rational(0), Rational(0), Rational(0)};
  Rational constant{0};
  int chain = -1;       // closed-chain id the offset belongs to, -1 = none
  Rational ocoeff{0};   // coefficient of the chain's offset phi

  SideLen operator+(const SideLen& o) const;
  SideLen operator-(const SideLen& o) const;
  bool operator==(const SideLen& o) const = default;
  bool is_zero() const;
  double eval(double a, double b, double c, double phi = 0) const;
  static SideLen side(Side s);
};

std::string side_len_str(const SideLen& l);

struct TilingComplex {
  std::vector<Tile> tiles;
  // Number of segments of each side; sides absent from the map have 1.
  std::map<SideRef, int> seg_count;
  // Fixed-point-free pairing of segments; stored once per pair.
  std::vector<std::pair<SegRef, SegRef>> gluings;
  std::vector<VertexRecord> vertices;

  int segments_of(const SideRef& s) const;
};

// Segment lengths derived by walking extended-edge chains: at every interior
// junction exactly one of the two rows has a segment boundary, which pins the
// junction's position; closed chains get one free rational offset, chosen
// deterministically inside the feasible region of `relations`.
struct LengthAssignment {
  std::map<SegRef, SideLen> len;
  int num_chains = 0;  // closed chains, one offset variable each
  bool ok = false;
  std::string reason;  // set when !ok
};

LengthAssignment assign_lengths(const TilingComplex& t);

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> checks;  // (description, pass)
  bool pass() const;
  std::string render() const;
};

// Full combinatorial verification: gluing involution, chain-walk length
// consistency, exact vertex angle sums, vertex partition by corner rotation,
// extended-edge word matching, Euler/deficit counting, and balance. Only the
// relations passed in are used (degenerate families need non-base sets).
VerifyReport verify(const TilingComplex& t, const AngleTriple& angles,
                    const std::vector<LinCon>& relations);

VertexStats stats_of(const TilingComplex& t);
AVC avc_of(const TilingComplex& t);

// Interchange format: `tile <id> <direct|mirrored>`, `glue t.side.seg
// t.side.seg`, `vertex <full|half> t.corner,... [host=t.side]`; canonical
// ordering; lengths are recomputed on parse, not stored.
std::string serialize(const TilingComplex& t);
TilingComplex parse_tiling(const std::string& text);

TilingComplex relabel_tiles(const TilingComplex& t, const std::map<int, int>& perm);
TilingComplex mirror(const TilingComplex& t);

// --- generators -----------------------------------------------------------

// k degenerate lunes (alpha = pi, beta = gamma = 2pi/k). With an offset the
// two hemispheres of k/2 lunes are rotated against each other (k even only;
// odd k throws std::invalid_argument("InvalidModification")).
TilingComplex generate_one_layer(int k, bool rotation = false);

// 2n tiles, angles (t, 1-t, 2/n); n < 3 throws std::invalid_argument("TooFew").
TilingComplex generate_two_layer(int n);

// Hemisphere rotation of the two-layer map; n odd throws
// std::invalid_argument("InvalidModification").
TilingComplex generate_two_layer_rotation(int n);

TilingComplex generate_f8_sporadic();
TilingComplex generate_f16_sporadic();
TilingComplex generate_f36_rational();

// f' = f/3 subdivided-quadrilateral tiling; only the unmodified variant is
// implemented (anything else throws std::runtime_error("Unsupported")).
TilingComplex generate_subdivided_quad(int f_prime, int variant = 1);

// Angle triple and side-length relation set that each generator's output is
// meant to be verified against (t is the free parameter where applicable).
struct TilingParams {
  AngleTriple angles;
  std::vector<LinCon> relations;
};
TilingParams one_layer_params(int k);
TilingParams two_layer_params(int n);
TilingParams f8_params();
TilingParams f16_params();
TilingParams f36_params();
TilingParams subdivided_quad_params(int f_prime);

// "a=1", "b+c=1", "a+b=1", "b=2c", "a<2c", ... -> LinCon over (a,b,c).
LinCon parse_relation(const std::string& s);

}  // namespace spheretile

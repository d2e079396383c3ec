#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "spheretile/geometry.hpp"
#include "spheretile/tiling.hpp"

using namespace spheretile;

namespace {

constexpr double kPi = 3.14159265358979323846;

TriangleGeometry geometry_at(const AngleTriple& a, double t) {
  double al = a.alpha.eval(t) * kPi, be = a.beta.eval(t) * kPi,
         ga = a.gamma.eval(t) * kPi;
  if (std::abs(al - kPi) < 1e-12) return lune_geometry(be, 0.4 * kPi);
  return make_geometry(al, be, ga);
}

void check_family(const TilingComplex& t, const TilingParams& p, double tv) {
  auto rep = verify(t, p.angles, p.relations);
  INFO(rep.render());
  CHECK(rep.pass());
  auto r = realize_tiling(t, geometry_at(p.angles, tv));
  CHECK(r.closure_residual < 1e-8);
}

std::map<std::string, long> avc_counts(const TilingComplex& t) {
  std::map<std::string, long> m;
  for (const auto& e : avc_of(t).entries)
    m[std::string(e.vertex.half ? "half " : "full ") + vertex_str(e.vertex)] =
        e.count;
  return m;
}

}  // namespace

TEST_CASE("one-layer earth maps verify and realize for k = 2..12") {
  for (int k = 2; k <= 12; ++k) {
    CAPTURE(k);
    check_family(generate_one_layer(k), one_layer_params(k), 0.3);
  }
}

TEST_CASE("one-layer rotations verify and realize for even k") {
  for (int k = 4; k <= 12; k += 2) {
    CAPTURE(k);
    auto t = generate_one_layer(k, true);
    check_family(t, one_layer_params(k), 0.3);
    // Expected structure: no full vertices, four boundary half vertices
    // beyond the k interior meridian ones.
    auto st = stats_of(t);
    CHECK(st.total_full() == 0);
    CHECK(st.total_half() == long(k) + 4);
  }
  CHECK_THROWS_AS(generate_one_layer(5, true), std::invalid_argument);
}

TEST_CASE("two-layer earth maps verify and realize for n = 3..12") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    auto t = generate_two_layer(n);
    check_family(t, two_layer_params(n), 0.55);
    auto c = avc_counts(t);
    CHECK(c["full " + vertex_str({{0, 0, n}, false})] == 2);  // the two poles
    CHECK(c["half " + vertex_str({{1, 1, 0}, true})] == 2 * n);
  }
  CHECK_THROWS_AS(generate_two_layer(2), std::invalid_argument);
}

TEST_CASE("two-layer rotations verify and realize for n = 4, 6, 8") {
  for (int n : {4, 6, 8}) {
    CAPTURE(n);
    auto t = generate_two_layer_rotation(n);
    check_family(t, two_layer_params(n), 0.55);
    CHECK(stats_of(t).total_full() == 0);  // every vertex is cut by the offset
  }
  CHECK_THROWS_AS(generate_two_layer_rotation(5), std::invalid_argument);
}

TEST_CASE("f=8 sporadic tiling at three parameter values") {
  auto t = generate_f8_sporadic();
  auto p = f8_params();
  for (double gu : {0.26, 0.30, 0.33}) {
    CAPTURE(gu);
    check_family(t, p, gu);
  }
  auto c = avc_counts(t);
  CHECK(c["full " + vertex_str({{2, 0, 1}, false})] == 4);
  CHECK(c["half " + vertex_str({{0, 2, 1}, true})] == 4);
  CHECK(avc_of(t).entries.size() == 2);
}

TEST_CASE("f=16 sporadic tiling") {
  auto t = generate_f16_sporadic();
  check_family(t, f16_params(), std::atan(std::sqrt(2.0)) / kPi);
  auto c = avc_counts(t);
  CHECK(c["full " + vertex_str({{2, 1, 1}, false})] == 8);
  CHECK(c["half " + vertex_str({{0, 2, 2}, true})] == 4);
  CHECK(avc_of(t).entries.size() == 2);
}

TEST_CASE("f=36 rational tiling") {
  auto t = generate_f36_rational();
  check_family(t, f36_params(), 0.3);
  auto c = avc_counts(t);
  CHECK(c["full " + vertex_str({{4, 0, 0}, false})] == 6);
  CHECK(c["full " + vertex_str({{0, 6, 0}, false})] == 2);
  CHECK(c["full " + vertex_str({{0, 1, 6}, false})] == 6);
  CHECK(c["half " + vertex_str({{2, 0, 0}, true})] == 6);
  CHECK(c["half " + vertex_str({{0, 3, 0}, true})] == 6);
  CHECK(avc_of(t).entries.size() == 5);
}

TEST_CASE("subdivided-quadrilateral tiling, f' = 10") {
  auto t = generate_subdivided_quad(10);
  check_family(t, subdivided_quad_params(10), 0.3);
  auto c = avc_counts(t);
  CHECK(c["full " + vertex_str({{3, 0, 1}, false})] == 10);
  CHECK(c["full " + vertex_str({{0, 0, 10}, false})] == 2);
  CHECK(c["half " + vertex_str({{0, 3, 0}, true})] == 10);
  CHECK(avc_of(t).entries.size() == 3);
  CHECK_THROWS_AS(generate_subdivided_quad(10, 3), std::runtime_error);
  CHECK_THROWS_AS(generate_subdivided_quad(9), std::runtime_error);
}

TEST_CASE("negative control: removing a tile breaks the verifier") {
  auto t = generate_two_layer(4);
  t.tiles.pop_back();
  auto rep = verify(t, two_layer_params(4).angles, two_layer_params(4).relations);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("negative control: a perturbed gluing fails or misrealizes") {
  auto t = generate_two_layer(4);
  // Reroute one meridian gluing to a different segment.
  for (auto& g : t.gluings)
    if (g.first == SegRef{0, Side::b, 0}) g.second = SegRef{6, Side::a, 1};
  auto p = two_layer_params(4);
  auto rep = verify(t, p.angles, p.relations);
  bool bad_verify = !rep.pass();
  bool bad_realize = true;
  try {
    auto r = realize_tiling(t, geometry_at(p.angles, 0.55));
    bad_realize = r.closure_residual > 1e-3;
  } catch (const std::exception&) {
  }
  CHECK((bad_verify || bad_realize));
}

TEST_CASE("negative control: wrong angle triple fails the vertex sums") {
  auto t = generate_two_layer(3);
  // Right angle sum (1 + 4/6), wrong distribution: gamma = 1/2 breaks the poles.
  AngleTriple wrong(AngleExpr(rat(2, 3)), AngleExpr(rat(1, 2)),
                    AngleExpr(rat(1, 2)), 6, false,
                    IntervalBound(Rational(0), Rational(1)));
  auto rep = verify(t, wrong, two_layer_params(3).relations);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("verify is invariant under tile relabeling and global mirror") {
  auto t = generate_f8_sporadic();
  auto p = f8_params();
  std::map<int, int> perm;
  for (int i = 0; i < 8; ++i) perm[i] = (3 * i + 1) % 8;
  CHECK(verify(relabel_tiles(t, perm), p.angles, p.relations).pass());
  CHECK(verify(mirror(t), p.angles, p.relations).pass());
  auto t2 = generate_two_layer(5);
  auto p2 = two_layer_params(5);
  CHECK(verify(mirror(t2), p2.angles, p2.relations).pass());
}

TEST_CASE("serialization round-trips bit-exactly and preserves verification") {
  for (const auto& t :
       {generate_one_layer(6, true), generate_two_layer_rotation(6),
        generate_f8_sporadic(), generate_f16_sporadic(), generate_f36_rational(),
        generate_subdivided_quad(10)}) {
    std::string s1 = serialize(t);
    TilingComplex u = parse_tiling(s1);
    CHECK(serialize(u) == s1);
    CHECK(u.tiles.size() == t.tiles.size());
    CHECK(u.gluings.size() == t.gluings.size());
    CHECK(u.seg_count == t.seg_count);
  }
}

TEST_CASE("assign_lengths pins the expected segment expressions") {
  auto la = assign_lengths(generate_two_layer(4));
  REQUIRE(la.ok);
  CHECK(la.num_chains == 0);
  // Upper lune side a splits into a-b (toward the pole: b).
  SideLen ab = SideLen::side(Side::a) - SideLen::side(Side::b);
  CHECK(la.len.at({0, Side::a, 0}) == ab);
  CHECK(la.len.at({0, Side::a, 1}) == SideLen::side(Side::b));

  auto lb = assign_lengths(generate_f8_sporadic());
  REQUIRE(lb.ok);
  CHECK(lb.num_chains == 0);
  CHECK(lb.len.at({0, Side::a, 0}) == ab);
  CHECK(lb.len.at({0, Side::a, 1}) == SideLen::side(Side::b));
}

TEST_CASE("hemisphere rotations introduce one free offset per cut circle") {
  auto la = assign_lengths(generate_one_layer(6, true));
  REQUIRE(la.ok);
  CHECK(la.num_chains == 1);  // the rotated boundary circle is a closed chain
  auto lb = assign_lengths(generate_two_layer_rotation(6));
  REQUIRE(lb.ok);
  CHECK(lb.num_chains == 1);
}

TEST_CASE("parse_relation round-trips the catalog forms") {
  auto is_eq = [](const LinCon& c) { return c.rel == Rel::Eq; };
  CHECK(is_eq(parse_relation("b=2c")));
  CHECK(is_eq(parse_relation("a+b=1")));
  CHECK(parse_relation("a>b").rel == Rel::Gt);
  CHECK(parse_relation("a<2c").rel == Rel::Gt);
  // b = 2c as coefficients.
  auto c = parse_relation("b=2c");
  CHECK(c.coeff[1] == 1);
  CHECK(c.coeff[2] == -2);
  CHECK(c.constant == 0);
  // a < 2c flips to 2c - a > 0.
  auto d = parse_relation("a<2c");
  CHECK(d.coeff[0] == -1);
  CHECK(d.coeff[2] == 2);
}

TEST_CASE("stats agree with the AVC view") {
  for (const auto& t : {generate_f36_rational(), generate_subdivided_quad(10)}) {
    auto direct = stats_of(t);
    auto via_avc = stats_from_avc(avc_of(t));
    CHECK(direct.v == via_avc.v);
    CHECK(direct.h == via_avc.h);
    CHECK(direct.f == via_avc.f);
  }
}

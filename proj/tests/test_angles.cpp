#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spheretile/angle.hpp"

using namespace spheretile;

static IntervalBound unit_open() { return IntervalBound(Rational(0), Rational(1)); }

TEST_CASE("angle addition is exact and componentwise") {
  AngleExpr half{rat(1, 2)}, third{rat(1, 3)};
  CHECK((half + third) == AngleExpr{rat(5, 6)});
  AngleExpr t{Rational(0), Rational(1)}, one_minus_t{Rational(1), Rational(-1)};
  CHECK((t + one_minus_t) == AngleExpr{Rational(1)});
  // Two-layer family: alpha + (1 - alpha) + 4/f = 1 + 4/f.
  long f = 12;
  AngleExpr gamma{rat(4, f)};
  CHECK((t + one_minus_t + gamma) == AngleExpr{Rational(1) + rat(4, f)});
}

TEST_CASE("angle addition commutes and associates") {
  AngleExpr x{rat(1, 7), rat(2, 5)}, y{rat(-3, 4), rat(1, 9)}, z{rat(5, 11), rat(-1, 2)};
  CHECK((x + y) == (y + x));
  CHECK(((x + y) + z) == (x + (y + z)));
}

TEST_CASE("angle_compare on rational angles") {
  CHECK(angle_compare(AngleExpr{rat(1, 2)}, AngleExpr{rat(1, 3)}, unit_open()) ==
        Order::Greater);
  CHECK(angle_compare(AngleExpr{rat(1, 3)}, AngleExpr{rat(1, 3)}, unit_open()) ==
        Order::Equal);
}

TEST_CASE("angle_compare uses the interval bound") {
  AngleExpr t{Rational(0), Rational(1)}, one_minus_t{Rational(1), Rational(-1)};
  CHECK(angle_compare(t, one_minus_t, IntervalBound(Rational(0), rat(1, 2))) ==
        Order::Less);
  CHECK(angle_compare(t, one_minus_t, unit_open()) == Order::Unknown);
  // Open endpoint at the sign change still yields a definite answer.
  CHECK(angle_compare(t, one_minus_t, IntervalBound(rat(1, 2), Rational(1))) ==
        Order::Greater);
  // Closed endpoint at the sign change does not.
  CHECK(angle_compare(t, one_minus_t,
                      IntervalBound(rat(1, 2), Rational(1), false, true)) ==
        Order::Unknown);
}

TEST_CASE("angle_compare never contradicts numeric samples") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  for (int iter = 0; iter < 1000; ++iter) {
    AngleExpr x{rat(num(rng), den(rng)), rat(num(rng), den(rng))};
    AngleExpr y{rat(num(rng), den(rng)), rat(num(rng), den(rng))};
    Rational lo = rat(num(rng), den(rng));
    Rational hi = lo + rat(den(rng), den(rng));
    IntervalBound b(lo, hi);
    Order ord = angle_compare(x, y, b);
    std::uniform_real_distribution<double> ts(to_double(lo) + 1e-9, to_double(hi) - 1e-9);
    for (int s = 0; s < 20; ++s) {
      double t = ts(rng);
      double d = x.eval(t) - y.eval(t);
      if (ord == Order::Greater) CHECK(d > -1e-12);
      if (ord == Order::Less) CHECK(d < 1e-12);
      if (ord == Order::Equal) CHECK(d == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("angle triple validates the sum and the scalene order") {
  AngleExpr t{Rational(0), Rational(1)};
  AngleExpr one_minus_t{Rational(1), Rational(-1)};
  long f = 12;
  // Two-layer family: (t, 1-t, 4/f) with t in (1/2, 1 - 4/f) is scalene.
  AngleTriple ok(t, one_minus_t, AngleExpr{rat(4, f)}, f, true,
                 IntervalBound(rat(1, 2), Rational(1) - rat(4, f)));
  CHECK(ok.alpha == t);
  CHECK_THROWS(AngleTriple(t, one_minus_t, AngleExpr{rat(4, f)}, f, true, unit_open()));
  CHECK_THROWS(AngleTriple(t, one_minus_t, AngleExpr{rat(1, 2)}, f, false, unit_open()));
  CHECK_THROWS(AngleTriple(t, one_minus_t, AngleExpr{Rational(2)}, 1, false, unit_open()));
  // Degenerate one-layer case: f=2 allowed when not scalene-ordered.
  AngleTriple lune(AngleExpr{Rational(1)}, AngleExpr{Rational(1)}, AngleExpr{Rational(1)},
                   2, false, unit_open());
  CHECK(lune.f == 2);
}

TEST_CASE("numeric angle sum matches 1 + 4/f at sampled t") {
  AngleExpr t{Rational(0), Rational(1)}, one_minus_t{Rational(1), Rational(-1)};
  for (long f : {12L, 20L, 30L}) {
    AngleTriple tri(t, one_minus_t, AngleExpr{rat(4, f)}, f, true,
                    IntervalBound(rat(1, 2), Rational(1) - rat(4, f)));
    for (double tv : {0.51, 0.55, 0.62}) {
      double sum = tri.alpha.eval(tv) + tri.beta.eval(tv) + tri.gamma.eval(tv);
      CHECK(sum == doctest::Approx(1.0 + 4.0 / double(f)).epsilon(1e-12));
    }
  }
}

TEST_CASE("serialization round-trips bit-exactly") {
  AngleExpr x{rat(-7, 12), rat(22, 7)};
  CHECK(angle_str(x) == "-7/12 + 22/7*t");
  CHECK(parse_angle(angle_str(x)) == x);
  AngleExpr plain{rat(3, 4)};
  CHECK(angle_str(plain) == "3/4 + 0*t");
  CHECK(parse_angle(angle_str(plain)) == plain);
  CHECK_THROWS(parse_angle("1/2"));
}

TEST_CASE("solve_linear reproduces the hand-solved systems") {
  // Seed a^3 at f=24: alpha = 2/3, beta + gamma = 1/2 with one free parameter.
  std::vector<AngleEquation> sys = {
      {{Rational(1), Rational(1), Rational(1)}, Rational(1) + rat(4, 24)},
      {{Rational(3), Rational(0), Rational(0)}, Rational(2)}};
  auto sol = solve_linear(sys);
  REQUIRE(sol.feasible);
  CHECK(sol.num_free == 1);
  CHECK(sol.expr[0].eval({rat(1, 5)}) == rat(2, 3));
  CHECK(sol.expr[1].eval({rat(1, 5)}) + sol.expr[2].eval({rat(1, 5)}) == rat(1, 2));

  // Seed a^2 b at f=8: alpha = 1/2 + gamma, beta = 1 - 2*gamma.
  std::vector<AngleEquation> sys2 = {
      {{Rational(1), Rational(1), Rational(1)}, Rational(1) + rat(4, 8)},
      {{Rational(2), Rational(1), Rational(0)}, Rational(2)}};
  auto sol2 = solve_linear(sys2);
  REQUIRE(sol2.feasible);
  CHECK(sol2.num_free == 1);
  for (Rational g : {rat(1, 3), rat(2, 7)}) {
    CHECK(sol2.expr[0].eval({g}) == rat(1, 2) + sol2.expr[2].eval({g}));
    CHECK(sol2.expr[1].eval({g}) == Rational(1) - 2 * sol2.expr[2].eval({g}));
  }

  // Contradictory rows are infeasible.
  std::vector<AngleEquation> bad = {
      {{Rational(1), Rational(1), Rational(1)}, Rational(1) + rat(4, 8)},
      {{Rational(1), Rational(1), Rational(1)}, Rational(3)}};
  CHECK_FALSE(solve_linear(bad).feasible);
}

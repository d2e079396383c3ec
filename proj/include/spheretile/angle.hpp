#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spheretile/rational.hpp"

namespace spheretile {

// An angle q + r*t in units of pi. t is the session's single symbolic
// irrational, constrained by an IntervalBound when comparisons are needed.
struct AngleExpr {
  Rational q;
  Rational r;

  AngleExpr() : q(0), r(0) {}
  AngleExpr(Rational q_, Rational r_ = Rational(0)) : q(std::move(q_)), r(std::move(r_)) {}

  bool is_rational() const { return r == 0; }
  bool operator==(const AngleExpr& o) const { return q == o.q && r == o.r; }
  bool operator!=(const AngleExpr& o) const { return !(*this == o); }

  AngleExpr operator+(const AngleExpr& o) const { return {q + o.q, r + o.r}; }
  AngleExpr operator-(const AngleExpr& o) const { return {q - o.q, r - o.r}; }
  AngleExpr operator-() const { return {-q, -r}; }

  friend AngleExpr operator*(const Rational& s, const AngleExpr& x) {
    return {s * x.q, s * x.r};
  }

  // Numeric value (still in units of pi) at a concrete t.
  double eval(double t) const { return to_double(q) + to_double(r) * t; }
};

// Open/closed interval constraint on t. Always lower < upper.
struct IntervalBound {
  Rational lower;
  Rational upper;
  bool lower_open = true;
  bool upper_open = true;

  IntervalBound(Rational lo, Rational hi, bool lo_open = true, bool hi_open = true);
  bool contains(const Rational& v) const;
};

enum class Order { Less, Equal, Greater, Unknown };

// Definite ordering of x vs y valid for every t in the bound; Unknown if the
// sign of x - y is not constant there.
Order angle_compare(const AngleExpr& x, const AngleExpr& y, const IntervalBound& bound);

// Sign of x on the bound: -1, 0 (identically), +1, or nullopt if mixed.
std::optional<int> angle_sign(const AngleExpr& x, const IntervalBound& bound);

std::string angle_str(const AngleExpr& x);      // "q + r*t", lowest terms
AngleExpr parse_angle(const std::string& s);    // round-trips angle_str bit-exactly

// The tile's angle triple. Sum must equal 1 + 4/f exactly; when
// scalene_ordered, 0 < gamma < beta < alpha < 1 must be certifiable on bound.
struct AngleTriple {
  AngleExpr alpha, beta, gamma;
  long f;
  bool scalene_ordered;
  IntervalBound bound;

  AngleTriple(AngleExpr a, AngleExpr b, AngleExpr g, long f, bool scalene_ordered,
              IntervalBound bound);

  const AngleExpr& angle(int i) const { return i == 0 ? alpha : (i == 1 ? beta : gamma); }
};

// One linear equation c0*alpha + c1*beta + c2*gamma = rhs over rationals.
struct AngleEquation {
  std::array<Rational, 3> coeff;
  Rational rhs;
};

// Affine expression c0 + sum_i coeff[i]*param_i over free parameters.
struct AffineExpr {
  Rational c0;
  std::vector<Rational> coeff;

  Rational eval(const std::vector<Rational>& params) const;
};

struct LinearSolution {
  bool feasible = false;
  int num_free = 0;
  // expr[i] gives angle i as an affine function of the free parameters.
  std::array<AffineExpr, 3> expr;
};

// Exact Gaussian elimination over (alpha, beta, gamma).
LinearSolution solve_linear(const std::vector<AngleEquation>& equations);

}  // namespace spheretile

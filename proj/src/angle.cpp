#include "spheretile/angle.hpp"

#include <sstream>
#include <stdexcept>

namespace spheretile {

IntervalBound::IntervalBound(Rational lo, Rational hi, bool lo_open, bool hi_open)
    : lower(std::move(lo)), upper(std::move(hi)), lower_open(lo_open), upper_open(hi_open) {
  if (!(lower < upper)) throw std::invalid_argument("empty interval bound");
}

bool IntervalBound::contains(const Rational& v) const {
  if (v < lower || v > upper) return false;
  if (v == lower && lower_open) return false;
  if (v == upper && upper_open) return false;
  return true;
}

std::optional<int> angle_sign(const AngleExpr& x, const IntervalBound& bound) {
  if (x.r == 0) return x.q == 0 ? 0 : (x.q > 0 ? 1 : -1);
  // Affine in t and non-constant: examine the endpoint values.
  Rational vlo = x.q + x.r * bound.lower;
  Rational vhi = x.q + x.r * bound.upper;
  Rational vmin = vlo, vmax = vhi;
  bool min_attained = !bound.lower_open, max_attained = !bound.upper_open;
  if (vmin > vmax) {
    std::swap(vmin, vmax);
    std::swap(min_attained, max_attained);
  }
  if (vmin > 0) return 1;
  if (vmax < 0) return -1;
  if (vmin == 0 && !min_attained && vmax > 0) return 1;
  if (vmax == 0 && !max_attained && vmin < 0) return -1;
  return std::nullopt;  // sign changes or zero is attained
}

Order angle_compare(const AngleExpr& x, const AngleExpr& y, const IntervalBound& bound) {
  AngleExpr d = x - y;
  if (d.q == 0 && d.r == 0) return Order::Equal;
  auto s = angle_sign(d, bound);
  if (!s) return Order::Unknown;
  return *s > 0 ? Order::Greater : (*s < 0 ? Order::Less : Order::Equal);
}

std::string angle_str(const AngleExpr& x) {
  return rat_str(x.q) + " + " + rat_str(x.r) + "*t";
}

AngleExpr parse_angle(const std::string& s) {
  auto plus = s.find(" + ");
  auto star = s.rfind("*t");
  if (plus == std::string::npos || star == std::string::npos || star + 2 != s.size())
    throw std::invalid_argument("bad angle: " + s);
  return {parse_rational(s.substr(0, plus)),
          parse_rational(s.substr(plus + 3, star - plus - 3))};
}

AngleTriple::AngleTriple(AngleExpr a, AngleExpr b, AngleExpr g, long f_, bool ordered,
                         IntervalBound bound_)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)), f(f_),
      scalene_ordered(ordered), bound(std::move(bound_)) {
  if (f < 2) throw std::invalid_argument("tile count f < 2");
  AngleExpr sum = alpha + beta + gamma;
  if (sum != AngleExpr(Rational(1) + rat(4, f)))
    throw std::invalid_argument("angle sum is not 1 + 4/f");
  if (scalene_ordered) {
    if (f <= 4) throw std::invalid_argument("scalene-ordered triple needs f > 4");
    AngleExpr zero, one{Rational(1)};
    bool ok = angle_compare(alpha, beta, bound) == Order::Greater &&
              angle_compare(beta, gamma, bound) == Order::Greater &&
              angle_compare(gamma, zero, bound) == Order::Greater &&
              angle_compare(alpha, one, bound) == Order::Less;
    if (!ok) throw std::invalid_argument("cannot certify 0 < gamma < beta < alpha < 1");
  }
}

Rational AffineExpr::eval(const std::vector<Rational>& params) const {
  Rational v = c0;
  for (size_t i = 0; i < coeff.size(); ++i) v += coeff[i] * params[i];
  return v;
}

LinearSolution solve_linear(const std::vector<AngleEquation>& equations) {
  // Rows [c0 c1 c2 | rhs]; reduce to row echelon form over Q.
  std::vector<std::array<Rational, 4>> rows;
  for (const auto& e : equations)
    rows.push_back({e.coeff[0], e.coeff[1], e.coeff[2], e.rhs});

  std::array<int, 3> pivot_row = {-1, -1, -1};
  size_t next = 0;
  for (int col = 0; col < 3 && next < rows.size(); ++col) {
    size_t p = next;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    Rational inv = 1 / rows[next][col];
    for (auto& x : rows[next]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][col] == 0) continue;
      Rational m = rows[i][col];
      for (int j = 0; j < 4; ++j) rows[i][j] -= m * rows[next][j];
    }
    pivot_row[col] = static_cast<int>(next);
    ++next;
  }
  LinearSolution sol;
  for (size_t i = next; i < rows.size(); ++i)
    if (rows[i][3] != 0) return sol;  // 0 = nonzero
  sol.feasible = true;

  std::array<int, 3> param_index = {-1, -1, -1};
  for (int col = 0; col < 3; ++col)
    if (pivot_row[col] < 0) param_index[col] = sol.num_free++;
  for (int col = 0; col < 3; ++col) {
    AffineExpr e;
    e.coeff.assign(sol.num_free, Rational(0));
    if (pivot_row[col] < 0) {
      e.c0 = 0;
      e.coeff[param_index[col]] = 1;
    } else {
      const auto& row = rows[pivot_row[col]];
      e.c0 = row[3];
      for (int j = 0; j < 3; ++j)
        if (param_index[j] >= 0) e.coeff[param_index[j]] = -row[j];
    }
    sol.expr[col] = std::move(e);
  }
  return sol;
}

}  // namespace spheretile

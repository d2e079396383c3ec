#include "spheretile/linear.hpp"

#include <optional>
#include <stdexcept>

namespace spheretile {
namespace {

// Substitute x_var = (-c.constant - other coeffs)/c.coeff[var] from an
// equality into every other constraint, dropping the equality.
std::vector<LinCon> substitute_equality(const std::vector<LinCon>& cons, size_t eq_index,
                                        int var) {
  const LinCon& eq = cons[eq_index];
  Rational pivot = eq.coeff[var];
  std::vector<LinCon> out;
  for (size_t i = 0; i < cons.size(); ++i) {
    if (i == eq_index) continue;
    LinCon c = cons[i];
    if (c.coeff[var] != 0) {
      Rational m = c.coeff[var] / pivot;
      for (size_t j = 0; j < c.coeff.size(); ++j) c.coeff[j] -= m * eq.coeff[j];
      c.constant -= m * eq.constant;
      c.coeff[var] = 0;
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Fourier-Motzkin elimination of x_var from a pure-inequality system.
std::vector<LinCon> eliminate_var(const std::vector<LinCon>& cons, int var) {
  std::vector<LinCon> lower, upper, rest;
  for (const auto& c : cons) {
    if (c.coeff[var] > 0) lower.push_back(c);        // x_var >(=) -(...)/coeff
    else if (c.coeff[var] < 0) upper.push_back(c);
    else rest.push_back(c);
  }
  for (const auto& lo : lower) {
    for (const auto& hi : upper) {
      LinCon c;
      c.coeff.assign(lo.coeff.size(), Rational(0));
      Rational s = -hi.coeff[var];  // positive
      Rational t = lo.coeff[var];   // positive
      for (size_t j = 0; j < c.coeff.size(); ++j)
        c.coeff[j] = s * lo.coeff[j] + t * hi.coeff[j];
      c.constant = s * lo.constant + t * hi.constant;
      c.coeff[var] = 0;
      c.rel = (lo.rel == Rel::Gt || hi.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
      rest.push_back(std::move(c));
    }
  }
  return rest;
}

bool constant_holds(const LinCon& c) {
  switch (c.rel) {
    case Rel::Eq: return c.constant == 0;
    case Rel::Ge: return c.constant >= 0;
    case Rel::Gt: return c.constant > 0;
  }
  return false;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool feasible(std::vector<LinCon> cons, int num_vars) {
  // Equality substitution first.
  for (;;) {
    bool changed = false;
    for (size_t i = 0; i < cons.size(); ++i) {
      if (cons[i].rel != Rel::Eq) continue;
      int var = -1;
      for (int j = 0; j < num_vars; ++j)
        if (cons[i].coeff[j] != 0) { var = j; break; }
      if (var < 0) {
        if (cons[i].constant != 0) return false;
        cons.erase(cons.begin() + i);
      } else {
        cons = substitute_equality(cons, i, var);
      }
      changed = true;
      break;
    }
    if (!changed) break;
  }
  for (int var = 0; var < num_vars; ++var) cons = eliminate_var(cons, var);
  for (const auto& c : cons)
    if (!constant_holds(c)) return false;
  return true;
}

std::vector<Rational> sample_point(std::vector<LinCon> cons, int num_vars) {
  if (!feasible(cons, num_vars)) return {};
  std::vector<Rational> point(num_vars, Rational(0));
  for (int var = 0; var < num_vars; ++var) {
    // Project the system onto x_var: substitute out equalities touching other
    // variables, then Fourier-Motzkin the other variables away.
    std::vector<LinCon> proj = cons;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < proj.size(); ++i) {
        if (proj[i].rel != Rel::Eq) continue;
        int v = -1;
        for (int j = 0; j < num_vars; ++j)
          if (j != var && proj[i].coeff[j] != 0) { v = j; break; }
        if (v >= 0) {
          proj = substitute_equality(proj, i, v);
          changed = true;
          break;
        }
      }
    }
    std::optional<Rational> pinned;
    std::vector<LinCon> ineqs;
    for (auto& c : proj) {
      if (c.rel == Rel::Eq) {
        if (c.coeff[var] != 0) pinned = -c.constant / c.coeff[var];
      } else {
        ineqs.push_back(std::move(c));
      }
    }
    if (pinned) {
      point[var] = *pinned;
    } else {
      for (int v2 = 0; v2 < num_vars; ++v2)
        if (v2 != var) ineqs = eliminate_var(ineqs, v2);
      std::optional<Rational> lo, hi;
      for (const auto& c : ineqs) {
        if (c.coeff[var] == 0) continue;
        Rational bound = -c.constant / c.coeff[var];
        if (c.coeff[var] > 0) {
          if (!lo || bound > *lo) lo = bound;
        } else {
          if (!hi || bound < *hi) hi = bound;
        }
      }
      if (lo && hi) point[var] = (*lo + *hi) / 2;
      else if (lo) point[var] = *lo + 1;
      else if (hi) point[var] = *hi - 1;
      else point[var] = 0;
    }
    // Freeze the chosen value for later rounds.
    LinCon pin;
    pin.coeff.assign(num_vars, Rational(0));
    pin.coeff[var] = 1;
    pin.constant = -point[var];
    pin.rel = Rel::Eq;
    cons.push_back(std::move(pin));
    if (!feasible(cons, num_vars)) throw std::logic_error("sample_point: bad pin");
  }
  return point;
}

}  // namespace spheretile

#pragma once

#include <vector>

#include "spheretile/rational.hpp"

namespace spheretile {

enum class Rel { Eq, Ge, Gt };  // sum_i coeff[i]*x_i + constant  (=|>=|>)  0

struct LinCon {
  std::vector<Rational> coeff;
  Rational constant;
  Rel rel = Rel::Ge;
};

// Exact feasibility of a conjunction of linear constraints over num_vars
// rational unknowns, by equality substitution + Fourier-Motzkin elimination.
// Intended for the small systems here (<= 4 variables).
bool feasible(std::vector<LinCon> cons, int num_vars);

// Convenience: a sample point of a feasible system (used by tests); empty if
// infeasible. Found by bisecting each variable's feasible range in turn.
std::vector<Rational> sample_point(std::vector<LinCon> cons, int num_vars);

}  // namespace spheretile

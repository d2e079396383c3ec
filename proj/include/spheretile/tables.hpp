#pragma once

#include <string>
#include <vector>

#include "spheretile/vertex.hpp"

namespace spheretile {

// A fully curated AVC row for one seed: the raw symbolic derivation with
// companions of lower degree removed (those pairs are classified by the
// lower-degree tables), plus the boundary cells where the base system is
// feasible only in closure.
DerivedAVC curated_row(const VertexVector& seed);

// Golden-style text of one curated row (used by the CLI's symbolic avc mode).
std::string table_row(const VertexVector& seed);

// Text renderings used for golden-file comparison. All listings follow the
// canonical (kind, degree, n1, n2, n3) sort.
std::string table_low_degree();            // candidate vertices of degree 3/4/5 (+ half 2)
std::string table_degree3();               // AVC rows seeded by a degree-3 full vertex
std::string table_degree4();               // ... degree-4 full vertex (or degree-2 half)
std::string table_degree5();               // ... degree-5 full vertex
std::string table_rational(long fmax = 300);  // f-classes for the rational triple

}  // namespace spheretile

#pragma once

#include <map>
#include <string>

#include <Eigen/Dense>

#include "spheretile/tiling.hpp"

namespace spheretile {

using SpherePoint = Eigen::Vector3d;

// All fields in radians; side a is opposite alpha, etc.
struct TriangleGeometry {
  double alpha = 0, beta = 0, gamma = 0;
  double a = 0, b = 0, c = 0;
};

struct Sides {
  double a = 0, b = 0, c = 0;
};

// Dual spherical law of cosines; throws std::domain_error("NotATriangle")
// when the corner inequalities or the excess condition fail.
Sides sides_from_angles(double alpha, double beta, double gamma);

TriangleGeometry make_geometry(double alpha, double beta, double gamma);

// Degenerate 2-gon tile (alpha = pi): a = pi, b + c = pi with c free.
TriangleGeometry lune_geometry(double beta, double c);

// |f*(alpha+beta+gamma-pi) - 4pi| at a concrete t (angles in pi units).
double area_consistency(const AngleTriple& angles, double t);

struct Realization {
  // Positions of every corner of every tile.
  std::map<CornerRef, SpherePoint> corner;
  double closure_residual = 0;
};

// Breadth-first placement across gluings; the residual aggregates position
// spread of identified corners and glued segment-endpoint mismatches.
Realization realize_tiling(const TilingComplex& t, const TriangleGeometry& g);

// OBJ text mesh of the realized tiling, arcs sampled at `segments` points.
std::string export_obj(const TilingComplex& t, const TriangleGeometry& g,
                       int segments = 16);

struct GeomCheck {
  std::string label;
  double closed_form = 0, dual_law = 0, printed = 0;
  bool pass() const;
};

// Closed-form side values for the tabulated monotiles vs the dual law vs the
// printed 4-decimal values (1e-9 and 1e-3 tolerances respectively).
std::vector<GeomCheck> verify_table_data();

// Rendering of verify_table_data used for golden comparison.
std::string render_geom_table();

}  // namespace spheretile

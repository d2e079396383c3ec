#include "spheretile/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spheretile {

namespace {

constexpr double kPi = 3.14159265358979323846;

Corner side_start(Side s) {
  return s == Side::a ? Corner::beta : (s == Side::b ? Corner::gamma : Corner::alpha);
}
Corner side_end(Side s) {
  return s == Side::a ? Corner::gamma : (s == Side::b ? Corner::alpha : Corner::beta);
}
Side in_side(Corner c) {  // side ending at the corner
  return c == Corner::alpha ? Side::b : (c == Corner::beta ? Side::c : Side::a);
}

Eigen::Vector3d rodrigues(const Eigen::Vector3d& v, const Eigen::Vector3d& axis,
                          double theta) {
  return v * std::cos(theta) + axis.cross(v) * std::sin(theta) +
         axis * (axis.dot(v)) * (1 - std::cos(theta));
}

}  // namespace

Sides sides_from_angles(double alpha, double beta, double gamma) {
  auto bad = [] { throw std::domain_error("NotATriangle"); };
  for (double x : {alpha, beta, gamma})
    if (!(x > 0) || !(x < kPi)) bad();
  if (!(alpha + beta + gamma > kPi)) bad();
  auto side = [&](double A, double B, double C) {
    double cs = (std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C));
    if (!(cs > -1) || !(cs < 1)) throw std::domain_error("NotATriangle");
    return std::acos(cs);
  };
  Sides s;
  s.a = side(alpha, beta, gamma);
  s.b = side(beta, gamma, alpha);
  s.c = side(gamma, alpha, beta);
  return s;
}

TriangleGeometry make_geometry(double alpha, double beta, double gamma) {
  Sides s = sides_from_angles(alpha, beta, gamma);
  return {alpha, beta, gamma, s.a, s.b, s.c};
}

TriangleGeometry lune_geometry(double beta, double c) {
  if (!(beta > 0) || !(beta <= kPi) || !(c > 0) || !(c < kPi))
    throw std::domain_error("NotATriangle");
  return {kPi, beta, beta, kPi, kPi - c, c};
}

double area_consistency(const AngleTriple& angles, double t) {
  double sum = angles.alpha.eval(t) + angles.beta.eval(t) + angles.gamma.eval(t);
  return std::abs(angles.f * kPi * (sum - 1) - 4 * kPi);
}

// ---------------------------------------------------------------------------
// Numeric realization.

namespace {

struct LocalTile {
  // Node positions per side: index 0..n along the side's direction.
  std::array<std::vector<Eigen::Vector3d>, 3> nodes;
};

Eigen::Vector3d corner_pos(const TriangleGeometry& g, Chirality ch, Corner c) {
  double s = ch == Chirality::direct ? 1.0 : -1.0;
  switch (c) {
    case Corner::alpha: return {0, 0, 1};
    case Corner::beta: return {std::sin(g.c), 0, std::cos(g.c)};
    default:
      return {std::sin(g.b) * std::cos(g.alpha), s * std::sin(g.b) * std::sin(g.alpha),
              std::cos(g.b)};
  }
}

double corner_angle_num(const TriangleGeometry& g, Corner c) {
  return c == Corner::alpha ? g.alpha : (c == Corner::beta ? g.beta : g.gamma);
}

// Point at arc distance d from the start of side s of a tile.
Eigen::Vector3d side_point(const TriangleGeometry& g, Chirality ch, Side s, double d) {
  Eigen::Vector3d p0 = corner_pos(g, ch, side_start(s));
  Eigen::Vector3d p1 = corner_pos(g, ch, side_end(s));
  Eigen::Vector3d u;
  if (std::abs(p0.dot(p1)) < 1 - 1e-9) {
    u = (p1 - p0.dot(p1) * p0).normalized();
  } else {
    // Antipodal endpoints (a full lune side): take the tangent of the adjacent
    // side at the start corner and rotate it by the interior angle.
    Corner sc = side_start(s);
    Eigen::Vector3d q = corner_pos(g, ch, side_start(in_side(sc)));
    Eigen::Vector3d t0 = (q - p0.dot(q) * p0).normalized();
    double sgn = ch == Chirality::direct ? -1.0 : 1.0;
    u = rodrigues(t0, p0, sgn * corner_angle_num(g, sc));
  }
  return std::cos(d) * p0 + std::sin(d) * u;
}

Eigen::Matrix3d frame(const Eigen::Vector3d& v, const Eigen::Vector3d& w) {
  Eigen::Vector3d e1 = v.normalized();
  Eigen::Vector3d e2 = (w - e1.dot(w) * e1).normalized();
  Eigen::Matrix3d m;
  m.col(0) = e1;
  m.col(1) = e2;
  m.col(2) = e1.cross(e2);
  return m;
}

struct RealizeData {
  std::map<int, int> idx;
  std::vector<Chirality> chir;
  std::vector<LocalTile> local;
  std::vector<Eigen::Matrix3d> orient;
  std::vector<bool> placed;
};

RealizeData realize_core(const TilingComplex& t, const TriangleGeometry& g) {
  RealizeData rd;
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    rd.idx[t.tiles[i].id] = int(i);
    rd.chir.push_back(t.tiles[i].chirality);
  }
  int T = int(t.tiles.size());
  if (T == 0) throw std::runtime_error("empty complex");

  LengthAssignment la = assign_lengths(t);
  if (!la.ok) throw std::runtime_error("length assignment failed: " + la.reason);

  // Concrete offset for each closed chain: midpoint of the interval on which
  // every segment of the chain has positive length.
  double pa = g.a / kPi, pb = g.b / kPi, pc = g.c / kPi;
  std::vector<double> lo(la.num_chains, -1e30), hi(la.num_chains, 1e30);
  for (const auto& [seg, l] : la.len) {
    if (l.ocoeff == 0) continue;
    double base = l.eval(pa, pb, pc, 0);
    double coef = to_double(l.ocoeff);
    if (coef > 0)
      lo[l.chain] = std::max(lo[l.chain], -base / coef);
    else
      hi[l.chain] = std::min(hi[l.chain], -base / coef);
  }
  std::vector<double> phi(la.num_chains, 0);
  for (int i = 0; i < la.num_chains; ++i) phi[i] = (lo[i] + hi[i]) / 2;

  rd.local.resize(T);
  for (int ti = 0; ti < T; ++ti) {
    int id = t.tiles[ti].id;
    for (int s = 0; s < 3; ++s) {
      int n = t.segments_of({id, Side(s)});
      auto& nd = rd.local[ti].nodes[s];
      nd.resize(n + 1);
      double d = 0;
      nd[0] = corner_pos(g, rd.chir[ti], side_start(Side(s)));
      for (int k = 1; k <= n; ++k) {
        const SideLen& l = la.len.at({id, Side(s), k - 1});
        d += kPi * l.eval(pa, pb, pc, l.ocoeff == 0 ? 0 : phi[l.chain]);
        nd[k] = k == n ? corner_pos(g, rd.chir[ti], side_end(Side(s)))
                       : side_point(g, rd.chir[ti], Side(s), d);
      }
    }
  }

  // Breadth-first placement across the gluing graph.
  std::vector<std::vector<int>> adj(T);
  for (size_t gi = 0; gi < t.gluings.size(); ++gi) {
    adj[rd.idx[t.gluings[gi].first.tile]].push_back(int(gi));
    adj[rd.idx[t.gluings[gi].second.tile]].push_back(int(gi));
  }
  rd.orient.assign(T, Eigen::Matrix3d::Identity());
  rd.placed.assign(T, false);
  std::deque<int> queue{0};
  rd.placed[0] = true;
  auto node_local = [&](const SegRef& s, int end) {
    return rd.local[rd.idx[s.tile]].nodes[int(s.side)][s.seg + end];
  };
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int gi : adj[cur]) {
      SegRef sp = t.gluings[gi].first, su = t.gluings[gi].second;
      if (rd.idx[sp.tile] != cur) std::swap(sp, su);
      int u = rd.idx[su.tile];
      if (rd.placed[u]) continue;
      bool same = rd.chir[cur] == rd.chir[u];
      Eigen::Vector3d X1 = rd.orient[cur] * node_local(sp, 0);
      Eigen::Vector3d X2 = rd.orient[cur] * node_local(sp, 1);
      Eigen::Vector3d x1 = node_local(su, same ? 1 : 0);
      Eigen::Vector3d x2 = node_local(su, same ? 0 : 1);
      rd.orient[u] = frame(X1, X2) * frame(x1, x2).transpose();
      rd.placed[u] = true;
      queue.push_back(u);
    }
  }
  for (int ti = 0; ti < T; ++ti)
    if (!rd.placed[ti]) throw std::runtime_error("gluing graph is disconnected");
  return rd;
}

}  // namespace

Realization realize_tiling(const TilingComplex& t, const TriangleGeometry& g) {
  RealizeData rd = realize_core(t, g);
  Realization out;
  auto node_global = [&](const SegRef& s, int end) {
    int ti = rd.idx.at(s.tile);
    return Eigen::Vector3d(rd.orient[ti] *
                           rd.local[ti].nodes[int(s.side)][s.seg + end]);
  };
  double res = 0;
  for (const auto& [x, y] : t.gluings) {
    bool same = rd.chir[rd.idx[x.tile]] == rd.chir[rd.idx[y.tile]];
    res = std::max(res, (node_global(x, 0) - node_global(y, same ? 1 : 0)).norm());
    res = std::max(res, (node_global(x, 1) - node_global(y, same ? 0 : 1)).norm());
  }
  for (size_t i = 0; i < t.tiles.size(); ++i)
    for (Corner c : {Corner::alpha, Corner::beta, Corner::gamma}) {
      int ti = int(i);
      out.corner[{t.tiles[i].id, c}] =
          rd.orient[ti] * corner_pos(g, rd.chir[ti], c);
    }
  for (const auto& v : t.vertices) {
    if (v.corners.empty()) continue;
    Eigen::Vector3d p0 = out.corner.at(v.corners.front());
    for (const auto& c : v.corners)
      res = std::max(res, (out.corner.at(c) - p0).norm());
  }
  out.closure_residual = res;
  return out;
}

std::string export_obj(const TilingComplex& t, const TriangleGeometry& g,
                       int segments) {
  RealizeData rd = realize_core(t, g);
  std::ostringstream os;
  os << "# monohedral spherical tiling, " << t.tiles.size() << " tiles\n";
  std::vector<std::vector<int>> face(t.tiles.size());
  int vcount = 0;
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    int ti = int(i);
    for (Side s : {Side::c, Side::a, Side::b}) {
      const auto& nd = rd.local[ti].nodes[int(s)];
      // Sample the whole side, dropping its end corner (the next side's start).
      int n = int(nd.size()) - 1;
      for (int k = 0; k < n; ++k) {
        Eigen::Vector3d p = nd[k], q = nd[k + 1];
        bool anti = std::abs(p.dot(q)) > 1 - 1e-9;
        for (int j = 0; j < segments; ++j) {
          double f = double(j) / segments;
          Eigen::Vector3d x;
          if (!anti) {
            Eigen::Vector3d u = (q - p.dot(q) * p).normalized();
            double full = std::acos(std::max(-1.0, std::min(1.0, p.dot(q))));
            x = std::cos(f * full) * p + std::sin(f * full) * u;
          } else {
            x = (1 - f) * p + f * q;  // degenerate; endpoints only matter
            if (x.norm() > 1e-9) x.normalize();
            else x = p;
          }
          Eigen::Vector3d w = rd.orient[ti] * x;
          os << "v " << w.x() << " " << w.y() << " " << w.z() << "\n";
          face[i].push_back(++vcount);
        }
      }
    }
  }
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    os << "f";
    for (int v : face[i]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Tabulated monotile geometry.

bool GeomCheck::pass() const {
  if (std::abs(closed_form - dual_law) >= 1e-9) return false;
  if (printed != 0 && std::abs(closed_form - printed) > 1e-3 + 1e-12) return false;
  return true;
}

namespace {

struct TableRow {
  std::string label;
  double alpha, beta, gamma;
  double ca, cb, cc;             // closed forms
  double pa = 0, pb = 0, pc = 0;  // printed 4-decimal values, 0 = not printed
};

std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  auto P = kPi;

  // Isosceles earth-map monotiles, beta = gamma = pi/3.
  {
    double t = 4 * P / 9;  // recurring sub-angle
    rows.push_back({"t2 f=8", 5 * P / 6, P / 3, P / 3,
                    P - std::acos(2 * std::sqrt(3) / 3 - 1.0 / 3),
                    P - std::acos((-2 + std::sqrt(3)) * std::sqrt(3) / 3),
                    P - std::acos((-2 + std::sqrt(3)) * std::sqrt(3) / 3),
                    2.5346, 1.4155, 1.4155});
    rows.push_back({"t2 f=18", 5 * P / 9, P / 3, P / 3,
                    std::acos(-4 * std::cos(t) / 3 + 1.0 / 3),
                    P - std::acos((std::cos(t) - 1) * std::sqrt(3) / (3 * std::sin(t))),
                    P - std::acos((std::cos(t) - 1) * std::sqrt(3) / (3 * std::sin(t))),
                    1.4688, 1.0651, 1.0651});
    rows.push_back({"t2 f=36", 4 * P / 9, P / 3, P / 3,
                    std::acos(4 * std::cos(t) / 3 + 1.0 / 3),
                    std::acos((std::cos(t) + 1) * std::sqrt(3) / (3 * std::sin(t))),
                    std::acos((std::cos(t) + 1) * std::sqrt(3) / (3 * std::sin(t))),
                    0.9705, 0.8120, 0.8120});
  }

  // Scalene monotiles with rational angles.
  {
    double r5 = std::sqrt(5.0);
    rows.push_back(
        {"t3 f=10", 3 * P / 5, P / 2, 3 * P / 10,
         P - std::acos((r5 / 4 - 0.25) / (r5 / 4 + 0.25)),
         P - std::acos((r5 / 4 - 0.25) * std::sqrt(5 - r5) /
                       (std::sqrt(5 + r5) * (r5 / 4 + 0.25))),
         std::acos(std::sqrt(5 - r5) / std::sqrt(5 + r5)), 1.9627, 1.8091, 0.9046});
  }
  {
    double r3 = std::sqrt(3.0);
    rows.push_back({"t3 f=12", 7 * P / 12, P / 2, P / 4,
                    P - std::acos(r3 / 2 - 0.5), P - std::acos((r3 - 1) / (1 + r3)),
                    std::acos(2 / (1 + r3)), 1.9455, 1.8421, 0.7495});
    rows.push_back({"t3 f=16", P / 2, 5 * P / 12, P / 3,
                    std::acos((r3 - 1) * r3 / (3 * (1 + r3))),
                    std::acos(std::sqrt(2.0) * (r3 - 1) * r3 / 6),
                    std::acos(std::sqrt(2.0) / (1 + r3)), 1.4155, 1.2673, 1.0267});
    rows.push_back({"t3 f=24", P / 2, 5 * P / 12, P / 4,
                    std::acos((r3 - 1) / (1 + r3)), std::acos(r3 / 2 - 0.5),
                    std::acos(2 / (1 + r3)), 1.2995, 1.1961, 0.7495});
  }
  rows.push_back({"t3 f=32", P / 2, 7 * P / 16, 3 * P / 16,
                  std::acos(std::cos(7 * P / 16) * std::cos(3 * P / 16) /
                            (std::sin(7 * P / 16) * std::sin(3 * P / 16))),
                  std::acos(std::cos(7 * P / 16) / std::sin(3 * P / 16)),
                  std::acos(std::cos(3 * P / 16) / std::sin(7 * P / 16)), 1.2685,
                  1.2120, 0.5591});
  {
    double t = 2 * P / 9;
    rows.push_back({"t3 f=72", P / 2, P / 3, 2 * P / 9,
                    std::acos(std::cos(t) * std::sqrt(3) / (3 * std::sin(t))),
                    std::acos(1 / (2 * std::sin(t))),
                    std::acos(2 * std::cos(t) * std::sqrt(3) / 3), 0.8120, 0.6795,
                    0.4853});
  }
  // Symbolic f = 4n family: alpha = pi/2, beta = (f-8)pi/2f, gamma = 8pi/f.
  for (long f : {28L, 44L}) {
    double be = (f - 8) * P / (2 * f), ga = 8 * P / f;
    rows.push_back({"t3 f=" + std::to_string(f) + " (symbolic row)", P / 2, be, ga,
                    std::acos(std::cos(be) * std::cos(ga) / (std::sin(be) * std::sin(ga))),
                    std::acos(std::cos(be) / std::sin(ga)),
                    std::acos(std::cos(ga) / std::sin(be))});
  }

  // Irrational-angle families (closed forms only, no printed decimals).
  for (auto [al, f] : std::vector<std::pair<double, long>>{{0.55 * P, 12L},
                                                           {0.6 * P, 20L}}) {
    double ga = 4 * P / f;
    rows.push_back({"t4 family1 alpha=" + std::to_string(al / P) + "pi f=" +
                        std::to_string(f),
                    al, P - al, ga,
                    std::acos(std::cos(al) * (1 - std::cos(ga)) /
                              (std::sin(ga) * std::sin(al))),
                    P - std::acos(std::cos(al) * (1 - std::cos(ga)) /
                                  (std::sin(ga) * std::sin(al))),
                    std::acos((std::cos(ga) - std::cos(al) * std::cos(al)) /
                              (std::sin(al) * std::sin(al)))});
  }
  for (double gu : {0.26, 0.30, 1.0 / 3, 0.33}) {
    double ga = gu * P;
    rows.push_back({"t4 family2 gamma=" + std::to_string(gu) + "pi", P - ga / 2,
                    P / 2 - ga / 2, ga,
                    std::acos((std::tan(ga / 2) * std::cos(ga) - 1) / std::sin(ga)),
                    std::acos((1 - std::cos(ga) / std::tan(ga / 2)) / std::sin(ga)),
                    std::acos(2 * std::cos(ga) / std::sin(ga) - 1)});
  }
  rows.push_back({"t4 family3", 3 * P / 4, std::atan(std::sqrt(2.0)),
                  P / 2 - std::atan(std::sqrt(2.0)), 2 * P / 3, P / 2, P / 4});
  return rows;
}

}  // namespace

std::vector<GeomCheck> verify_table_data() {
  std::vector<GeomCheck> out;
  for (const auto& r : table_rows()) {
    Sides s = sides_from_angles(r.alpha, r.beta, r.gamma);
    out.push_back({r.label + " a", r.ca, s.a, r.pa});
    out.push_back({r.label + " b", r.cb, s.b, r.pb});
    out.push_back({r.label + " c", r.cc, s.c, r.pc});
    if (r.label.find("family2") != std::string::npos &&
        std::abs(r.gamma - kPi / 3) < 1e-12)
      out.push_back({r.label + " isosceles b=c", s.b, s.c, 0});
  }
  return out;
}

std::string render_geom_table() {
  std::ostringstream os;
  char buf[256];
  for (const auto& g : verify_table_data()) {
    if (g.printed != 0)
      std::snprintf(buf, sizeof buf, "%-40s closed=%.6f dual=%.6f printed=%.4f %s",
                    g.label.c_str(), g.closed_form, g.dual_law, g.printed,
                    g.pass() ? "ok" : "MISMATCH");
    else
      std::snprintf(buf, sizeof buf, "%-40s closed=%.6f dual=%.6f printed=-      %s",
                    g.label.c_str(), g.closed_form, g.dual_law,
                    g.pass() ? "ok" : "MISMATCH");
    os << buf << "\n";
  }
  return os.str();
}

}  // namespace spheretile

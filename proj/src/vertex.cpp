#include "spheretile/vertex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spheretile {
namespace {

const char kSide[3] = {'a', 'b', 'c'};

// Ordering chain 0 < gamma < beta < alpha < 1 over (alpha, beta, gamma).
// The convexity corner inequalities are deliberately not imposed here: vertex
// candidacy depends only on the ordering, and convexity is applied downstream
// (edges/geometry) where side lengths enter.
void push_scalene(std::vector<LinCon>& cons, bool strict) {
  Rel r = strict ? Rel::Gt : Rel::Ge;
  auto add = [&](long c0, long c1, long c2, long k, Rel rel) {
    LinCon c;
    c.coeff = {Rational(c0), Rational(c1), Rational(c2)};
    c.constant = Rational(k);
    c.rel = rel;
    cons.push_back(std::move(c));
  };
  add(0, 0, 1, 0, Rel::Gt);    // gamma > 0 even in closure mode
  add(0, 1, -1, 0, r);         // beta >(=) gamma
  add(1, -1, 0, 0, r);         // alpha >(=) beta
  add(-1, 0, 0, 1, r);         // alpha <(=) 1
}

LinCon vertex_equation(const VertexVector& v) {
  LinCon c;
  c.coeff = {Rational(v.n[0]), Rational(v.n[1]), Rational(v.n[2])};
  c.constant = Rational(v.half ? -1 : -2);
  c.rel = Rel::Eq;
  return c;
}

LinCon sum_equation(const Rational& sum) {
  LinCon c;
  c.coeff = {Rational(1), Rational(1), Rational(1)};
  c.constant = -sum;
  c.rel = Rel::Eq;
  return c;
}

long my_gcd(long a, long b) { return std::gcd(a, b); }

// Merge congruences f ≡ r1 (mod m1) and f ≡ r2 (mod m2); nullopt if disjoint.
std::optional<std::pair<long, long>> crt(long m1, long r1, long m2, long r2) {
  long g = my_gcd(m1, m2);
  if ((r2 - r1) % g != 0) return std::nullopt;
  long lcm = m1 / g * m2;
  // Search within one lcm period (moduli here are tiny powers of two).
  for (long x = r1 % lcm; x < lcm + r1 % lcm; x += m1) {
    long xx = ((x % lcm) + lcm) % lcm;
    if (xx % m2 == ((r2 % m2) + m2) % m2) return std::make_pair(lcm, xx);
  }
  return std::nullopt;
}

}  // namespace

bool vertex_less(const VertexVector& x, const VertexVector& y) {
  auto key = [](const VertexVector& v) {
    return std::make_tuple(v.half, v.degree(), v.n[0], v.n[1], v.n[2]);
  };
  return key(x) < key(y);
}

std::string vertex_str(const VertexVector& v) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (v.n[i] == 0) continue;
    s += kSide[i];
    if (v.n[i] > 1) s += std::to_string(v.n[i]);
  }
  return s.empty() ? "1" : s;
}

VertexVector parse_vertex(const std::string& s) {
  VertexVector v;
  size_t i = 0;
  while (i < s.size()) {
    int idx = -1;
    for (int j = 0; j < 3; ++j)
      if (s[i] == kSide[j]) idx = j;
    if (idx < 0) throw std::invalid_argument("bad vertex: " + s);
    ++i;
    int e = 0;
    while (i < s.size() && isdigit(s[i])) e = e * 10 + (s[i++] - '0');
    v.n[idx] += e == 0 ? 1 : e;
  }
  return v;
}

std::string avc_record(const AVCEntry& e) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) os << kSide[i] << '^' << e.vertex.n[i] << ' ';
  os << (e.vertex.half ? "half" : "full") << " x";
  if (e.count < 0) os << '?';
  else os << e.count;
  return os.str();
}

AVCEntry parse_avc_record(const std::string& line) {
  std::istringstream is(line);
  AVCEntry e;
  for (int i = 0; i < 3; ++i) {
    std::string tok;
    is >> tok;
    if (tok.size() < 3 || tok[0] != kSide[i] || tok[1] != '^')
      throw std::invalid_argument("bad AVC record: " + line);
    e.vertex.n[i] = std::stoi(tok.substr(2));
  }
  std::string kind, count;
  is >> kind >> count;
  if (kind == "half") e.vertex.half = true;
  else if (kind != "full") throw std::invalid_argument("bad AVC record: " + line);
  if (count.size() < 2 || count[0] != 'x') throw std::invalid_argument("bad AVC record: " + line);
  e.count = count == "x?" ? -1 : std::stol(count.substr(1));
  return e;
}

std::vector<VertexVector> enumerate_vertices(const AngleTriple& angles,
                                             const IntervalBound& bound, bool half) {
  Rational target(half ? 1 : 2);
  std::array<Rational, 3> lb;
  for (int i = 0; i < 3; ++i) {
    const AngleExpr& x = angles.angle(i);
    Rational vlo = x.q + x.r * bound.lower;
    Rational vhi = x.q + x.r * bound.upper;
    lb[i] = std::min(vlo, vhi);
    if (lb[i] <= 0)
      throw std::runtime_error("UnboundedEnumeration: no positive lower bound for angle " +
                               std::to_string(i));
  }
  std::array<long, 3> nmax;
  for (int i = 0; i < 3; ++i) {
    Rational m = target / lb[i];
    mpz_class fl = m.get_num() / m.get_den();  // floor (positive)
    nmax[i] = fl.get_si();
  }
  std::vector<VertexVector> out;
  for (int n1 = 0; n1 <= nmax[0]; ++n1)
    for (int n2 = 0; n2 <= nmax[1]; ++n2)
      for (int n3 = 0; n3 <= nmax[2]; ++n3) {
        AngleExpr s = Rational(n1) * angles.alpha + Rational(n2) * angles.beta +
                      Rational(n3) * angles.gamma;
        bool ok;
        if (s.r == 0) {
          ok = s.q == target;
        } else {
          Rational tstar = (target - s.q) / s.r;
          ok = bound.contains(tstar);
        }
        if (ok) out.push_back({{n1, n2, n3}, half});
      }
  std::sort(out.begin(), out.end(), vertex_less);
  return out;
}

LowDegreeCatalog low_degree_catalog() {
  auto candidates = [&](int degree, bool half) {
    std::vector<VertexVector> out;
    for (int n1 = 0; n1 <= degree; ++n1)
      for (int n2 = 0; n2 + n1 <= degree; ++n2) {
        VertexVector v{{n1, n2, degree - n1 - n2}, half};
        std::vector<LinCon> cons;
        push_scalene(cons, true);
        cons.push_back(vertex_equation(v));
        // 1 < sum < 2 (f > 4 scalene assumption).
        LinCon lo, hi;
        lo.coeff = {Rational(1), Rational(1), Rational(1)};
        lo.constant = Rational(-1);
        lo.rel = Rel::Gt;
        hi.coeff = {Rational(-1), Rational(-1), Rational(-1)};
        hi.constant = Rational(2);
        hi.rel = Rel::Gt;
        cons.push_back(lo);
        cons.push_back(hi);
        if (feasible(cons, 3)) out.push_back(v);
      }
    std::sort(out.begin(), out.end(), vertex_less);
    return out;
  };
  LowDegreeCatalog cat;
  cat.full3 = candidates(3, false);
  cat.full4 = candidates(4, false);
  cat.full5 = candidates(5, false);
  cat.half2 = candidates(2, true);
  return cat;
}

bool is_collinear(const VertexVector& m, const VertexVector& n, long /*f*/) {
  long det = (long(m.n[1]) * n.n[2] - long(m.n[2]) * n.n[1]) -
             (long(m.n[0]) * n.n[2] - long(m.n[2]) * n.n[0]) +
             (long(m.n[0]) * n.n[1] - long(m.n[1]) * n.n[0]);
  return det == 0;
}

bool base_feasible(const VertexVector& seed, long f, bool strict) {
  if (f <= 4) return false;
  std::vector<LinCon> cons;
  push_scalene(cons, strict);
  cons.push_back(sum_equation(Rational(1) + rat(4, f)));
  cons.push_back(vertex_equation(seed));
  return feasible(cons, 3);
}

std::vector<VertexVector> line_lattice_points(const VertexVector& seed, long f) {
  if (seed.n[0] == seed.n[1] && seed.n[1] == seed.n[2])
    throw std::invalid_argument("DegenerateSeed: seed proportional to (1,1,1)");
  // Direction of Line{seed, (2f/(f+4))u} after clearing denominators.
  std::array<long, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = 2 * f - long(seed.n[i]) * (f + 4);
  long g = 0;
  for (long x : v) g = my_gcd(g, std::abs(x));
  for (auto& x : v) x /= g;
  // Without a sign change the progression never leaves the nonnegative
  // octant (only possible when the base system is infeasible, e.g. f <= 4).
  bool pos = false, neg = false;
  for (long x : v) (x > 0 ? pos : neg) = true;
  if (!pos || !neg) return {};
  std::vector<VertexVector> out;
  for (int dir : {1, -1}) {
    for (long j = 1;; ++j) {
      VertexVector p;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        long c = seed.n[i] + dir * j * v[i];
        if (c < 0) ok = false;
        p.n[i] = int(c);
      }
      if (!ok) break;
      if (p.degree() >= 3) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), vertex_less);
  return out;
}

AVC derive_avc(const VertexVector& seed, long f) {
  AVC avc;
  avc.f = f;
  if (seed.n[0] == seed.n[1] && seed.n[1] == seed.n[2])
    throw std::invalid_argument("DegenerateSeed: seed proportional to (1,1,1)");
  if (!base_feasible(seed, f, true)) return avc;
  auto pts = line_lattice_points(seed, f);
  pts.push_back(seed);
  std::sort(pts.begin(), pts.end(), vertex_less);
  std::vector<VertexVector> halves;
  for (const auto& p : pts)
    if (p.all_even()) {
      VertexVector h{{p.n[0] / 2, p.n[1] / 2, p.n[2] / 2}, true};
      if (h.degree() >= 2) halves.push_back(h);
    }
  for (const auto& p : pts) avc.entries.push_back({p, -1});
  for (const auto& h : halves) avc.entries.push_back({h, -1});
  return avc;
}

bool balance_filter(const AVC& avc) {
  std::array<long, 3> total{0, 0, 0};
  for (const auto& e : avc.entries) {
    if (e.count < 0) return false;  // pre: all counts numeric
    for (int i = 0; i < 3; ++i) total[i] += e.count * e.vertex.n[i];
  }
  return total[0] == avc.f && total[1] == avc.f && total[2] == avc.f;
}

long FLin::eval(long f) const {
  long num = a * f + b;
  if (num % d != 0) throw std::invalid_argument("FLin not integral at f");
  return num / d;
}

std::string FLin::str() const {
  if (a == 0) return std::to_string(b / d);
  std::string num;
  if (a == 1) num = "f";
  else num = std::to_string(a) + "f";
  if (b > 0) num = "(" + num + "+" + std::to_string(b) + ")";
  else if (b < 0) num = "(" + num + "-" + std::to_string(-b) + ")";
  if (d == 1) return num;
  return num + "/" + std::to_string(d);
}

std::string collinear_relation(const VertexVector& seed) {
  std::array<long, 3> c = {long(seed.n[1]) - seed.n[2], long(seed.n[2]) - seed.n[0],
                           long(seed.n[0]) - seed.n[1]};
  long g = my_gcd(my_gcd(std::abs(c[0]), std::abs(c[1])), std::abs(c[2]));
  if (g > 1)
    for (auto& x : c) x /= g;
  auto side = [&](int sign) {
    std::string s;
    int terms = 0;
    for (int i = 0; i < 3; ++i) {
      long k = c[i] * sign;
      if (k <= 0) continue;
      if (!s.empty()) s += "+";
      if (k > 1) s += std::to_string(k);
      s += "n" + std::to_string(i + 1);
      ++terms;
    }
    return std::make_pair(s, terms);
  };
  auto [pos, npos] = side(1);
  auto [neg, nneg] = side(-1);
  // Layout rule: fewer-term side on the left; tie broken by smaller index.
  bool neg_first;
  if (nneg != npos) neg_first = nneg < npos;
  else {
    int first_neg = 0, first_pos = 0;
    for (int i = 0; i < 3; ++i)
      if (c[i] < 0) { first_neg = i; break; }
    for (int i = 0; i < 3; ++i)
      if (c[i] > 0) { first_pos = i; break; }
    neg_first = first_neg < first_pos;
  }
  return neg_first ? neg + "=" + pos : pos + "=" + neg;
}

DerivedAVC derive_avc_symbolic(const VertexVector& seed, long scan_limit) {
  if (seed.n[0] == seed.n[1] && seed.n[1] == seed.n[2])
    throw std::invalid_argument("DegenerateSeed: seed proportional to (1,1,1)");
  DerivedAVC out;
  out.seed = seed;
  out.relation = collinear_relation(seed);
  out.seed_half = seed.all_even();

  int maxc = std::max({seed.n[0], seed.n[1], seed.n[2]});
  if (maxc == 2) {
    // The pivot coordinate (= 2) moves by -1 per 1/8 step of the line
    // parameter, so companions have pivot value t in {0, 1} with exponents
    // linear in f; integrality is a congruence on f per coordinate.
    for (int t : {0, 1}) {
      FamilyCell fam;
      bool solvable = true;
      for (int i = 0; i < 3 && solvable; ++i) {
        FLin e = t == 0 ? FLin{2 - seed.n[i], 0, 4}
                        : FLin{2 - seed.n[i], 4L * seed.n[i], 8};
        long g = my_gcd(my_gcd(std::abs(e.a), std::abs(e.b)), e.d);
        e.a /= g; e.b /= g; e.d /= g;
        if (e.d > 1) {
          // e.a and e.d coprime and e.a = 1 here: f ≡ -e.b (mod e.d).
          long r = ((-e.b) % e.d + e.d) % e.d;
          auto m = crt(fam.mod, fam.res, e.d, r);
          if (!m) solvable = false;
          else { fam.mod = m->first; fam.res = m->second; }
        }
        fam.fulls.push_back(SymVertex{{FLin{}, FLin{}, FLin{}}, false});
        fam.fulls.back().e[i] = e;
      }
      if (!solvable) continue;
      // Collapse the per-coordinate scratch into one vertex.
      SymVertex v;
      for (int i = 0; i < 3; ++i) v.e[i] = fam.fulls[i].e[i];
      fam.fulls = {v};
      // Keep only families feasible for arbitrarily large f.
      long f0 = fam.res;
      while (f0 <= 9000) f0 += fam.mod;
      if (!base_feasible(seed, f0, true) || !base_feasible(seed, f0 + fam.mod, true))
        continue;
      // Halves: every coordinate even.
      fam.has_halves = true;
      long hm = fam.mod, hr = fam.res;
      for (int i = 0; i < 3; ++i) {
        const FLin& e = v.e[i];
        if (e.is_constant()) {
          if (e.b % 2 != 0) fam.has_halves = false;
          continue;
        }
        // e = (a f + b)/d with a = 1; even iff f ≡ -b (mod 2d).
        long r = ((-e.b) % (2 * e.d) + 2 * e.d) % (2 * e.d);
        auto m = crt(hm, hr, 2 * e.d, r);
        if (!m) fam.has_halves = false;
        else { hm = m->first; hr = m->second; }
      }
      if (fam.has_halves) {
        fam.half_mod = hm;
        fam.half_res = hr;
        SymVertex h;
        for (int i = 0; i < 3; ++i) {
          h.e[i] = v.e[i];
          h.e[i].d *= 2;
          long g = my_gcd(my_gcd(std::abs(h.e[i].a), std::abs(h.e[i].b)), h.e[i].d);
          h.e[i].a /= g; h.e[i].b /= g; h.e[i].d /= g;
        }
        h.half = true;
        fam.halves = {h};
      }
      out.families.push_back(std::move(fam));
    }
  }

  // Concrete scan: sporadic companions not explained by the families.
  for (long f = 5; f <= scan_limit; ++f) {
    if (!base_feasible(seed, f, true)) continue;
    auto pts = line_lattice_points(seed, f);
    SporadicCell cell;
    cell.f = f;
    for (const auto& p : pts) {
      bool in_family = false;
      for (const auto& fam : out.families) {
        if ((f - fam.res) % fam.mod != 0) continue;
        const SymVertex& v = fam.fulls[0];
        bool eq = true;
        for (int i = 0; i < 3; ++i) {
          long num = v.e[i].a * f + v.e[i].b;
          if (num % v.e[i].d != 0 || num / v.e[i].d != p.n[i]) eq = false;
        }
        if (eq) in_family = true;
      }
      if (!in_family) cell.fulls.push_back(p);
    }
    if (cell.fulls.empty()) continue;
    for (const auto& p : cell.fulls)
      if (p.all_even())
        cell.halves.push_back({{p.n[0] / 2, p.n[1] / 2, p.n[2] / 2}, true});
    out.sporadics.push_back(std::move(cell));
  }
  return out;
}

}  // namespace spheretile

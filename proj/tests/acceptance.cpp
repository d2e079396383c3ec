// Acceptance gate: one line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spheretile/edges.hpp"
#include "spheretile/geometry.hpp"
#include "spheretile/tables.hpp"
#include "spheretile/tiling.hpp"
#include "spheretile/vertex.hpp"

using namespace spheretile;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string golden(const std::string& name) {
  const char* env = std::getenv("SPHERETILE_GOLDEN_DIR");
  std::string dir = env ? env : "golden";
  std::ifstream f(dir + "/" + name);
  if (!f) return "";
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

VertexVector vv(int a, int b, int c, bool half = false) { return {{a, b, c}, half}; }

// Degree-bounded rederivation of derive_avc from the collinearity determinant
// and exact feasibility alone.
AVC oracle_avc(const VertexVector& seed, long f, int degmax = 40) {
  AVC avc;
  avc.f = f;
  if (!base_feasible(seed, f, true)) return avc;
  std::vector<VertexVector> fulls;
  for (int n1 = 0; n1 <= degmax; ++n1)
    for (int n2 = 0; n1 + n2 <= degmax; ++n2)
      for (int n3 = 0; n1 + n2 + n3 <= degmax; ++n3) {
        VertexVector v = vv(n1, n2, n3);
        if (v.degree() < 3 || !is_collinear(seed, v, f)) continue;
        std::vector<LinCon> cons;
        cons.push_back({{rat(1), rat(1), rat(1)}, -(Rational(1) + rat(4, f)), Rel::Eq});
        cons.push_back({{rat(seed.n[0]), rat(seed.n[1]), rat(seed.n[2])}, rat(-2), Rel::Eq});
        cons.push_back({{rat(n1), rat(n2), rat(n3)}, rat(-2), Rel::Eq});
        cons.push_back({{rat(0), rat(0), rat(1)}, rat(0), Rel::Gt});
        cons.push_back({{rat(0), rat(1), rat(-1)}, rat(0), Rel::Gt});
        cons.push_back({{rat(1), rat(-1), rat(0)}, rat(0), Rel::Gt});
        cons.push_back({{rat(-1), rat(0), rat(0)}, rat(1), Rel::Gt});
        if (feasible(cons, 3)) fulls.push_back(v);
      }
  std::sort(fulls.begin(), fulls.end(), vertex_less);
  for (const auto& p : fulls) avc.entries.push_back({p, -1});
  for (const auto& p : fulls)
    if (p.all_even())
      avc.entries.push_back({vv(p.n[0] / 2, p.n[1] / 2, p.n[2] / 2, true), -1});
  return avc;
}

std::set<std::string> avc_key(const AVC& a) {
  std::set<std::string> s;
  for (const auto& e : a.entries) s.insert(avc_record(e));
  return s;
}

std::string word_text(const EdgeWord& w) {
  std::string out;
  for (Side x : w) out += "abc"[int(x)];
  return out;
}

using Key = std::pair<std::string, std::string>;
Key canon(std::string top, std::string bottom) {
  std::string rt(top.rbegin(), top.rend()), rb(bottom.rbegin(), bottom.rend());
  return std::min({Key{top, bottom}, Key{bottom, top}, Key{rt, rb}, Key{rb, rt}});
}

// ---------------------------------------------------------------------------

bool degree3_table() { return table_degree3() == golden("t7.txt"); }

bool degree45_tables() {
  return table_degree4() == golden("t8.txt") && table_degree5() == golden("t9.txt");
}

bool rational_table() {
  std::string out = table_rational(300);
  if (out != golden("t10.txt")) return false;
  long classes = 0;
  std::istringstream is(out);
  std::string line;
  while (std::getline(is, line)) ++classes;  // "f=all" plus one line per class
  return classes == 17;
}

bool geometry_tables() {
  int printed = 0;
  for (const auto& g : verify_table_data()) {
    if (std::abs(g.closed_form - g.dual_law) >= 1e-9) return false;
    if (g.printed != 0) {
      ++printed;
      if (std::abs(g.closed_form - g.printed) > 1e-3 + 1e-12) return false;
    }
  }
  return printed == 27;
}

bool tiling_suite() {
  auto check = [](const TilingComplex& t, const TilingParams& p, double tv) {
    if (!verify(t, p.angles, p.relations).pass()) return false;
    double al = p.angles.alpha.eval(tv) * kPi, be = p.angles.beta.eval(tv) * kPi,
           ga = p.angles.gamma.eval(tv) * kPi;
    TriangleGeometry g = std::abs(al - kPi) < 1e-12 ? lune_geometry(be, 0.4 * kPi)
                                                    : make_geometry(al, be, ga);
    return realize_tiling(t, g).closure_residual < 1e-8;
  };
  for (int k = 2; k <= 12; ++k)
    if (!check(generate_one_layer(k), one_layer_params(k), 0.3)) return false;
  for (int n = 3; n <= 12; ++n)
    if (!check(generate_two_layer(n), two_layer_params(n), 0.55)) return false;
  for (int n : {4, 6, 8})
    if (!check(generate_two_layer_rotation(n), two_layer_params(n), 0.55)) return false;
  for (double g : {0.26, 0.30, 0.33})
    if (!check(generate_f8_sporadic(), f8_params(), g)) return false;
  if (!check(generate_f16_sporadic(), f16_params(), std::atan(std::sqrt(2.0)) / kPi))
    return false;
  if (!check(generate_f36_rational(), f36_params(), 0.3)) return false;
  if (!check(generate_subdivided_quad(10), subdivided_quad_params(10), 0.3)) return false;
  return true;
}

bool collinearity_oracle() {
  auto cat = low_degree_catalog();
  for (const auto& seed : cat.full3)
    for (long f : {6, 8, 12, 16, 20, 24, 36})
      if (avc_key(derive_avc(seed, f)) != avc_key(oracle_avc(seed, f))) return false;
  return true;
}

bool edge_word_oracle() {
  // Patterns of repetition count <= 3, rows of length <= 6, against brute-force
  // word pairs with equal totals and no shared interior boundary, at exact
  // sample lengths covering the generic and each degenerate relation.
  std::set<Key> table, known;
  for (const auto& p : enumerate_patterns(3)) {
    if (p.family == 8 || p.top == p.bottom) continue;
    if (p.top.size() > 6 || p.bottom.size() > 6) continue;
    table.insert(canon(word_text(p.top), word_text(p.bottom)));
  }
  // Higher repetition counts of the same families; word pairs landing here are
  // correct but outside the k <= 3 coverage requirement.
  for (const auto& p : enumerate_patterns(7)) {
    if (p.family == 8 || p.top == p.bottom) continue;
    if (p.top.size() > 6 || p.bottom.size() > 6) continue;
    known.insert(canon(word_text(p.top), word_text(p.bottom)));
  }

  std::vector<std::array<Rational, 3>> samples = {
      {rat(7, 12), rat(5, 12), rat(1, 3)},
      {rat(2, 3), rat(1, 2), rat(1, 3)},
      {rat(5, 8), rat(1, 2), rat(1, 4)},
      {rat(3, 5), rat(1, 2), rat(2, 5)},
      {rat(3, 5), rat(1, 2), rat(1, 5)},
  };
  std::vector<std::string> words, layer{""};
  for (int l = 1; l <= 6; ++l) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char ch : {'a', 'b', 'c'}) next.push_back(w + ch);
    layer = next;
    words.insert(words.end(), layer.begin(), layer.end());
  }
  auto interior_ok = [](const std::string& w) {
    for (size_t i = 1; i + 1 < w.size(); ++i)
      if (w[i] != 'a') return false;
    return true;
  };
  auto boundaries = [](const std::string& w, const std::array<Rational, 3>& len) {
    std::vector<Rational> out;
    Rational acc = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) out.push_back(acc += len[w[i] - 'a']);
    return out;
  };
  auto base = LengthRelationSet::base().cons;
  std::set<Key> found;
  for (const auto& len : samples) {
    std::map<Rational, std::vector<const std::string*>> bucket;
    for (const auto& w : words) {
      if (!interior_ok(w)) continue;
      Rational total = 0;
      for (char ch : w) total += len[ch - 'a'];
      bucket[total].push_back(&w);
    }
    for (const auto& [total, group] : bucket)
      for (size_t i = 0; i < group.size(); ++i)
        for (size_t j = i + 1; j < group.size(); ++j) {
          const std::string &t = *group[i], &b = *group[j];
          auto bt = boundaries(t, len), bb = boundaries(b, len);
          bool tie = false;
          for (const auto& x : bt)
            if (std::find(bb.begin(), bb.end(), x) != bb.end()) tie = true;
          if (tie) continue;
          if (known.count(canon(t, b))) {
            if (table.count(canon(t, b))) found.insert(canon(t, b));
            continue;
          }
          // A coincidence at this sample is acceptable only if the exact
          // system (totals equal, the observed boundary order) is infeasible.
          auto cons = base;
          std::array<long, 3> d{0, 0, 0};
          for (char ch : t) d[ch - 'a'] += 1;
          for (char ch : b) d[ch - 'a'] -= 1;
          cons.push_back({{rat(d[0]), rat(d[1]), rat(d[2])}, rat(0), Rel::Eq});
          auto pos = [&](const std::string& w, size_t k) {
            std::array<long, 3> c{0, 0, 0};
            for (size_t m = 0; m <= k; ++m) c[w[m] - 'a'] += 1;
            return c;
          };
          for (size_t it = 0; it < bt.size(); ++it)
            for (size_t ib = 0; ib < bb.size(); ++ib) {
              auto ct = pos(t, it), cb = pos(b, ib);
              long sign = bt[it] < bb[ib] ? 1 : -1;
              cons.push_back({{rat(sign * (cb[0] - ct[0])), rat(sign * (cb[1] - ct[1])),
                               rat(sign * (cb[2] - ct[2]))},
                              rat(0), Rel::Gt});
            }
          if (feasible(cons, 3)) return false;
        }
  }
  return found == table;
}

std::vector<Rational> residues(const VertexStats& s) {
  std::vector<Rational> out;
  for (const auto& rep : {check_euler(s), check_deficit(s)})
    for (const auto& it : rep.items) out.push_back(it.lhs - it.rhs);
  return out;
}

bool property_suites() {
  // Replacement invariance: a full vertex of degree 2l never changes the
  // counting residues differently from two half vertices of degree l.
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> deg(2, 24), cnt(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    VertexStats s;
    for (int i = 0; i < 6; ++i) s.v[deg(rng)] += cnt(rng);
    for (int i = 0; i < 3; ++i) s.h[deg(rng) / 2] += cnt(rng);
    s.f = 2 * s.total_full() + s.total_half() - 4;
    for (int l = 1; l <= 12; ++l) {
      VertexStats t = s, u = s;
      t.v[2 * l] += 1;
      u.h[l] += 2;
      if (residues(t) != residues(u)) return false;
    }
  }

  // Scalene order: alpha > beta > gamma forces a > b > c.
  std::uniform_real_distribution<double> un(0.02, 0.98);
  int done = 0;
  while (done < 10000) {
    double x[3] = {un(rng) * kPi, un(rng) * kPi, un(rng) * kPi};
    std::sort(x, x + 3, std::greater<>());
    if (!(x[0] > x[1] + 1e-9) || !(x[1] > x[2] + 1e-9)) continue;
    Sides s;
    try {
      s = sides_from_angles(x[0], x[1], x[2]);
    } catch (const std::domain_error&) {
      continue;
    }
    ++done;
    if (!(s.a > s.b && s.b > s.c)) return false;
  }

  // Vertex enumeration commutes with permuting the angles.
  auto triple = [](Rational a, Rational b, Rational g, bool sc) {
    return AngleTriple(AngleExpr(a), AngleExpr(b), AngleExpr(g), 24, sc,
                       IntervalBound(Rational(0), Rational(1)));
  };
  auto t1 = triple(rat(11, 20), rat(9, 20), rat(1, 6), true);
  auto t2 = triple(rat(11, 20), rat(1, 6), rat(9, 20), false);
  auto a = enumerate_vertices(t1, t1.bound, false);
  auto b = enumerate_vertices(t2, t2.bound, false);
  if (a.size() != b.size()) return false;
  for (auto v : a) {
    std::swap(v.n[1], v.n[2]);
    if (std::find(b.begin(), b.end(), v) == b.end()) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)();
    double budget_s;
  };
  const Criterion criteria[] = {
      {"degree-3 seed table regenerates", degree3_table, 5},
      {"degree-4/5 seed tables regenerate", degree45_tables, 30},
      {"rational-triple table has 17 f-classes up to 300", rational_table, 10},
      {"tabulated side lengths match closed forms and dual law", geometry_tables, 60},
      {"all tiling families verify and realize", tiling_suite, 20},
      {"vertex derivation equals the collinearity oracle", collinearity_oracle, 60},
      {"edge pattern table equals the word-pair oracle", edge_word_oracle, 60},
      {"property suites (replacement, scalene order, equivariance)", property_suites, 60},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string err;
    try {
      pass = c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = dt < c.budget_s;
    std::cout << (pass && in_budget ? "pass" : "FAIL") << "  " << c.name << "  ("
              << dt << "s, budget " << c.budget_s << "s)";
    if (!err.empty()) std::cout << "  [" << err << "]";
    std::cout << "\n";
    ok = ok && pass && in_budget;
  }
  return ok ? 0 : 1;
}

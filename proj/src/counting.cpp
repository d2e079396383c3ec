#include "spheretile/counting.hpp"

#include <sstream>

namespace spheretile {

long VertexStats::total_full() const {
  long s = 0;
  for (auto& [k, c] : v) s += c;
  return s;
}

long VertexStats::total_half() const {
  long s = 0;
  for (auto& [l, c] : h) s += c;
  return s;
}

bool CheckReport::pass() const {
  for (const auto& it : items)
    if (!it.pass()) return false;
  return true;
}

std::string CheckReport::render() const {
  std::ostringstream os;
  for (const auto& it : items)
    os << (it.pass() ? "pass" : "FAIL") << "  " << it.identity << "  lhs="
       << rat_str(it.lhs) << " rhs=" << rat_str(it.rhs) << "\n";
  return os.str();
}

CheckReport check_euler(const VertexStats& stats) {
  CheckReport rep;
  long v = stats.total_full(), h = stats.total_half(), f = stats.f;
  rep.items.push_back({"parity: 3f+h even", Rational((3 * f + h) % 2), Rational(0)});
  Rational e = rat(3 * f + h, 2);
  rep.items.push_back({"(v+h)-e+f = 2", Rational(v + h + f) - e, Rational(2)});
  rep.items.push_back({"f = 2v+h-4", Rational(f), Rational(2 * v + h - 4)});
  long corners = 0;
  for (auto& [k, c] : stats.v) corners += k * c;
  for (auto& [l, c] : stats.h) corners += l * c;
  rep.items.push_back({"3f = sum k*v_k + sum l*h_l", Rational(3 * f), Rational(corners)});
  return rep;
}

CheckReport check_deficit(const VertexStats& stats) {
  CheckReport rep;
  long lhs3 = 0, rhs3 = 12, lhs4 = 3 * stats.f, rhs4 = 12;
  for (auto& [k, c] : stats.v) {
    if (k <= 6) lhs3 += (6 - k) * c;
    else rhs3 += (k - 6) * c;
    if (k == 2) lhs4 += 2 * c;
    if (k >= 4) rhs4 += (2 * k - 6) * c;
  }
  for (auto& [l, c] : stats.h) {
    if (l <= 3) lhs3 += (3 - l) * c;
    else rhs3 += (l - 3) * c;
    if (l == 1) lhs4 += c;
    if (l >= 2) rhs4 += (2 * l - 3) * c;
  }
  rep.items.push_back({"4v2+3v3+2v4+v5+2h1+h2 = 12+excess", Rational(lhs3), Rational(rhs3)});
  rep.items.push_back({"3f+2v2+h1 = 12+excess", Rational(lhs4), Rational(rhs4)});
  return rep;
}

VertexStats stats_from_avc(const AVC& avc) {
  VertexStats s;
  s.f = avc.f;
  for (const auto& e : avc.entries) {
    auto& m = e.vertex.half ? s.h : s.v;
    m[e.vertex.degree()] += e.count;
  }
  return s;
}

}  // namespace spheretile

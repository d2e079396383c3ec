#include "spheretile/edges.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace spheretile {

namespace {

constexpr const char* kSideName = "abc";

// Corner angles flanking each side along the tile boundary (0=alpha, 1=beta,
// 2=gamma): side a runs between beta and gamma, b between alpha and gamma,
// c between alpha and beta.
constexpr std::array<std::array<int, 2>, 3> kFlanks{{{1, 2}, {0, 2}, {0, 1}}};

// The two sides adjacent to each corner angle.
constexpr std::array<std::array<int, 2>, 3> kAdjSides{{{1, 2}, {0, 2}, {0, 1}}};

// The side on the far side of corner x from side s.
int up_side(int x, int s) {
  return kAdjSides[x][0] == s ? kAdjSides[x][1] : kAdjSides[x][0];
}

EdgeWord word(std::initializer_list<std::pair<Side, int>> runs) {
  EdgeWord w;
  for (auto [s, n] : runs)
    for (int i = 0; i < n; ++i) w.push_back(s);
  return w;
}

// Equality "total(top) = total(bottom)" as coeff.(a,b,c) = 0, normalized to
// lowest terms with positive leading coefficient; empty result if trivial.
std::vector<LinCon> length_relation(const EdgeWord& top, const EdgeWord& bottom) {
  std::array<long, 3> d{0, 0, 0};
  for (Side s : top) d[int(s)] += 1;
  for (Side s : bottom) d[int(s)] -= 1;
  long g = 0;
  for (long v : d) g = std::gcd(g, std::abs(v));
  if (g == 0) return {};
  long lead = 0;
  for (long v : d)
    if (v != 0) {
      lead = v;
      break;
    }
  if (lead < 0) g = -g;
  LinCon con;
  con.rel = Rel::Eq;
  for (long v : d) con.coeff.push_back(rat(v / g));
  con.constant = 0;
  return {con};
}

ExtendedEdgePattern make_pattern(int family, int k, EdgeWord top, EdgeWord bottom) {
  ExtendedEdgePattern p;
  p.family = family;
  p.k = k;
  p.forced_relations = length_relation(top, bottom);
  p.top = std::move(top);
  p.bottom = std::move(bottom);
  return p;
}

// Family words for the alpha-absent grammar; relabel swaps sides a and b for
// the beta-absent variant (the safe side — the one not flanked by the special
// angle — takes the role of a).
std::vector<ExtendedEdgePattern> family_instances(int k_max, bool relabel) {
  using enum Side;
  std::vector<ExtendedEdgePattern> out;
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(make_pattern(1, k, word({{b, 1}, {a, k}}), word({{a, k}, {b, 1}})));
    out.push_back(make_pattern(2, k, word({{c, 1}, {a, k}}), word({{a, k}, {c, 1}})));
    out.push_back(
        make_pattern(3, k, word({{c, 1}, {a, k}, {b, 1}}), word({{b, 1}, {a, k}, {c, 1}})));
    out.push_back(
        make_pattern(4, k, word({{b, 1}, {a, k}, {b, 1}}), word({{a, k + 1}, {c, 1}})));
    out.push_back(make_pattern(5, k, word({{a, k + 1}}), word({{c, 1}, {a, k}, {c, 1}})));
    out.push_back(
        make_pattern(6, k, word({{c, 1}, {a, k}, {c, 1}}), word({{a, k}, {b, 1}})));
    out.push_back(make_pattern(7, k, word({{c, 1}, {a, k + 1}, {c, 1}}),
                               word({{b, 1}, {a, k}, {b, 1}})));
  }
  if (relabel) {
    auto swap_ab = [](EdgeWord& w) {
      for (Side& s : w)
        if (s != c) s = (s == a ? b : a);
    };
    for (auto& p : out) {
      swap_ab(p.top);
      swap_ab(p.bottom);
      p.forced_relations = length_relation(p.top, p.bottom);
    }
  }
  return out;
}

std::array<Rational, 3> generic_lengths(const std::vector<LinCon>& forced) {
  auto cons = LengthRelationSet::base().cons;
  cons.insert(cons.end(), forced.begin(), forced.end());
  auto pt = sample_point(cons, 3);
  if (pt.empty()) return {};  // forced relations infeasible with the ordering
  return {pt[0], pt[1], pt[2]};
}

struct Breakpoint {
  // Segment indices on the row carrying the boundary; the left segment's right
  // end and the right segment's left end flank the half vertex.
  bool on_top = false;
  int left = 0;
};

// Interior boundary structure of a pattern at generic side lengths; nullopt
// if some boundary of one row coincides with a boundary of the other (the
// words then split at a stop vertex instead of forming one extended edge).
std::optional<std::vector<Breakpoint>> breakpoints(const ExtendedEdgePattern& p,
                                                   const std::array<Rational, 3>& len) {
  auto prefixes = [&](const EdgeWord& w) {
    std::vector<Rational> pos;
    Rational acc = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      acc += len[int(w[i])];
      pos.push_back(acc);
    }
    return pos;
  };
  auto pt = prefixes(p.top), pb = prefixes(p.bottom);
  for (const auto& x : pt)
    if (std::find(pb.begin(), pb.end(), x) != pb.end()) return std::nullopt;
  std::vector<Breakpoint> bps;
  for (size_t i = 0; i < pt.size(); ++i) bps.push_back({true, int(i)});
  for (size_t i = 0; i < pb.size(); ++i) bps.push_back({false, int(i)});
  return bps;
}

struct HalfType {
  std::array<int, 3> n{0, 0, 0};  // corner multiset alpha^n1 beta^n2 gamma^n3
  int degree() const { return n[0] + n[1] + n[2]; }
};

// Whether a breakpoint with line-adjacent corners x1 (on side s1) and x2 (on
// side s2) can be a half vertex of type h. For degree 2 the two corners meet
// along a shared side, so their far sides must coincide.
bool hosts(const HalfType& h, int x1, int s1, int x2, int s2) {
  std::array<int, 3> need{0, 0, 0};
  ++need[x1];
  ++need[x2];
  for (int i = 0; i < 3; ++i)
    if (need[i] > h.n[i]) return false;
  if (h.degree() == 2) return up_side(x1, s1) == up_side(x2, s2);
  return true;
}

// Whether some assignment of flank corners to segment ends makes every
// breakpoint avoid the special angle and land on a half type of the AVC.
// Collects nothing; pure feasibility of the pattern against the half types.
bool compatible(const ExtendedEdgePattern& p, const std::vector<Breakpoint>& bps,
                const std::vector<HalfType>& halves, int special) {
  int nt = int(p.top.size()), nb = int(p.bottom.size());
  int nseg = nt + nb;
  for (unsigned mask = 0; mask < (1u << nseg); ++mask) {
    // bit set: flanks (left, right) = (kFlanks[s][1], kFlanks[s][0])
    auto right_flank = [&](bool on_top, int i) {
      int seg = on_top ? i : nt + i;
      int s = int((on_top ? p.top : p.bottom)[i]);
      return (mask >> seg) & 1 ? kFlanks[s][0] : kFlanks[s][1];
    };
    auto left_flank = [&](bool on_top, int i) {
      int seg = on_top ? i : nt + i;
      int s = int((on_top ? p.top : p.bottom)[i]);
      return (mask >> seg) & 1 ? kFlanks[s][1] : kFlanks[s][0];
    };
    bool ok = true;
    for (const auto& bp : bps) {
      const EdgeWord& w = bp.on_top ? p.top : p.bottom;
      int x1 = right_flank(bp.on_top, bp.left);
      int x2 = left_flank(bp.on_top, bp.left + 1);
      int s1 = int(w[bp.left]), s2 = int(w[bp.left + 1]);
      if (x1 == special || x2 == special) {
        ok = false;
        break;
      }
      bool hosted = false;
      for (const auto& h : halves)
        if (hosts(h, x1, s1, x2, s2)) {
          hosted = true;
          break;
        }
      if (!hosted) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool relation_less(const LinCon& x, const LinCon& y) {
  if (x.coeff != y.coeff) return std::lexicographical_compare(
      x.coeff.begin(), x.coeff.end(), y.coeff.begin(), y.coeff.end());
  return x.constant < y.constant;
}

}  // namespace

std::string word_str(const EdgeWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += kSideName[int(w[i])];
    i = j;
  }
  return out;
}

std::string relation_str(const LinCon& con) {
  if (con.rel != Rel::Eq || con.coeff.size() != 3 || con.constant != 0)
    throw std::invalid_argument("not a homogeneous side-length equality");
  auto render = [](const std::vector<std::pair<Rational, int>>& terms) {
    std::string out;
    for (const auto& [c, i] : terms) {
      if (!out.empty()) out += "+";
      if (c != 1) out += rat_str(c);
      out += kSideName[i];
    }
    return out.empty() ? std::string("0") : out;
  };
  std::vector<std::pair<Rational, int>> pos, neg;
  for (int i = 0; i < 3; ++i) {
    if (con.coeff[i] > 0) pos.push_back({con.coeff[i], i});
    if (con.coeff[i] < 0) neg.push_back({-con.coeff[i], i});
  }
  bool swap = neg.size() < pos.size() ||
              (neg.size() == pos.size() && !neg.empty() && !pos.empty() &&
               neg[0].second < pos[0].second);
  if (swap) std::swap(pos, neg);
  return render(pos) + " = " + render(neg);
}

LengthRelationSet LengthRelationSet::base() {
  LengthRelationSet s;
  auto add = [&](long ca, long cb, long cc, long k, Rel rel) {
    s.cons.push_back({{rat(ca), rat(cb), rat(cc)}, rat(k), rel});
  };
  add(0, 0, 1, 0, Rel::Gt);    // c > 0
  add(0, 1, -1, 0, Rel::Gt);   // b > c
  add(1, -1, 0, 0, Rel::Gt);   // a > b
  add(-1, 0, 0, 1, Rel::Gt);   // a < 1
  add(1, 1, -1, 0, Rel::Gt);   // a + b > c
  add(1, -1, 1, 0, Rel::Gt);   // a + c > b
  add(-1, 1, 1, 0, Rel::Gt);   // b + c > a
  return s;
}

std::string ExtendedEdgePattern::str() const {
  if (family == 8) return "great circle";
  return word_str(top) + " = " + word_str(bottom);
}

std::vector<ExtendedEdgePattern> enumerate_patterns(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  auto out = family_instances(k_max, false);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.family, x.k) < std::tie(y.family, y.k);
  });
  ExtendedEdgePattern gc;
  gc.family = 8;
  out.push_back(gc);
  return out;
}

MatchResult match_words(const EdgeWord& top, const EdgeWord& bottom,
                        const LengthRelationSet& relations) {
  if (top.empty() || bottom.empty()) throw std::invalid_argument("empty edge word");
  if (!feasible(relations.cons, 3)) throw std::invalid_argument("InfeasibleRelations");
  MatchResult res;
  if (top == bottom) {
    res.matched = true;
    res.side_to_side = true;
    res.pattern.family = 0;
    res.pattern.top = top;
    res.pattern.bottom = bottom;
    return res;
  }
  auto rev = [](EdgeWord w) {
    std::reverse(w.begin(), w.end());
    return w;
  };
  std::vector<std::pair<EdgeWord, EdgeWord>> variants = {
      {top, bottom}, {bottom, top}, {rev(top), rev(bottom)}, {rev(bottom), rev(top)}};
  int k_max = int(std::max(top.size(), bottom.size()));
  for (const auto& p : family_instances(k_max, false)) {
    bool hit = false;
    for (const auto& [t, b] : variants)
      if (t == p.top && b == p.bottom) hit = true;
    if (!hit) continue;
    auto cons = relations.cons;
    cons.insert(cons.end(), p.forced_relations.begin(), p.forced_relations.end());
    if (!feasible(cons, 3)) {
      res.reason = "pattern " + p.str() + " forces " +
                   relation_str(p.forced_relations.front()) +
                   ", infeasible with the given relations";
      return res;
    }
    res.matched = true;
    res.pattern = p;
    return res;
  }
  auto cons = relations.cons;
  auto eq = length_relation(top, bottom);
  cons.insert(cons.end(), eq.begin(), eq.end());
  res.reason = feasible(cons, 3) ? "no extended-edge pattern matches"
                                 : "total lengths cannot be equal";
  return res;
}

ForcedRelationOutcome forced_relations_for_avc(const AVC& avc, int k_max) {
  std::vector<HalfType> halves;
  bool has_alpha = false, has_beta = false;
  for (const auto& e : avc.entries) {
    if (!e.vertex.half || e.count == 0) continue;
    halves.push_back({e.vertex.n});
    has_alpha |= e.vertex.n[0] > 0;
    has_beta |= e.vertex.n[1] > 0;
  }
  ForcedRelationOutcome out;
  if (halves.empty()) return out;
  int special;
  if (!has_alpha)
    special = 0;
  else if (!has_beta)
    special = 1;
  else
    throw std::invalid_argument(
        "Unsupported: both alpha and beta appear at half vertices");
  bool hostable = false;
  std::vector<std::vector<LinCon>> alts;
  for (const auto& p : family_instances(k_max, special == 1)) {
    if (p.top == p.bottom) continue;  // side-to-side, no half vertex
    auto len = generic_lengths(p.forced_relations);
    if (len[0] == 0) continue;  // forced relation infeasible for scalene sides
    auto bps = breakpoints(p, len);
    if (!bps) continue;
    if (!compatible(p, *bps, halves, special)) continue;
    hostable = true;
    alts.push_back(p.forced_relations);
  }
  std::sort(alts.begin(), alts.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        relation_less);
  });
  alts.erase(std::unique(alts.begin(), alts.end(),
                         [](const auto& x, const auto& y) {
                           if (x.size() != y.size()) return false;
                           for (size_t i = 0; i < x.size(); ++i)
                             if (relation_less(x[i], y[i]) || relation_less(y[i], x[i]))
                               return false;
                           return true;
                         }),
             alts.end());
  out.alternatives = std::move(alts);
  out.contradiction = !hostable;
  return out;
}

}  // namespace spheretile

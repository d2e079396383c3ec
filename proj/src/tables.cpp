#include "spheretile/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spheretile {
namespace {

// Lower-degree companions that a row keeps anyway (full vertex only); the
// companion's own row already treats the pair, but the case split for the
// seed needs the cell explicitly.
struct KeepException {
  VertexVector seed;
  long f;
  VertexVector full;
};
const std::vector<KeepException> kKeep = {
    {{{0, 5, 0}, false}, 10, {{2, 0, 2}, false}},
};

// Cells where the base system is feasible only in closure (an angle chain
// equality or alpha = 1); the row lists them so the degenerate configuration
// can be excluded downstream instead of silently dropped here.
struct BoundaryCell {
  VertexVector seed;
  long f;
  bool halves;
};
const std::vector<BoundaryCell> kBoundary = {
    {{{4, 0, 0}, false}, 8, true},
    {{{1, 3, 1}, false}, 8, true},
    {{{1, 2, 2}, false}, 8, false},
};

VertexVector halved(const VertexVector& p) {
  return {{p.n[0] / 2, p.n[1] / 2, p.n[2] / 2}, true};
}

std::string cong_label(long mod, long res) {
  if (mod == 1) return "all";
  if (res == 0) return std::to_string(mod) + "k";
  return std::to_string(mod) + "k+" + std::to_string(res);
}

std::string sym_vertex_str(const SymVertex& v) {
  static const char kSide[3] = {'a', 'b', 'c'};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    const FLin& e = v.e[i];
    if (e.is_constant()) {
      if (e.b == 0) continue;
      s += kSide[i];
      if (e.b > 1) s += std::to_string(e.b);
    } else {
      s += kSide[i];
      s += "^(" + e.str() + ")";
    }
  }
  return s;
}

std::string row_text(const DerivedAVC& d) {
  std::ostringstream os;
  os << "[" << vertex_str(d.seed) << "] " << d.relation << "\n";
  bool empty = true;
  if (d.seed_half) {
    os << "half f=all: " << vertex_str(halved(d.seed)) << "\n";
    empty = false;
  }
  for (const auto& fam : d.families) {
    os << "f=" << cong_label(fam.mod, fam.res) << ": full";
    for (const auto& v : fam.fulls) os << " " << sym_vertex_str(v);
    if (fam.has_halves) {
      os << " | half f=" << cong_label(fam.mod, fam.res) << "="
         << fam.half_mod << "l:";
      for (const auto& v : fam.halves) os << " " << sym_vertex_str(v);
    }
    os << "\n";
    empty = false;
  }
  for (const auto& cell : d.sporadics) {
    os << "f=" << cell.f << ": full";
    for (const auto& p : cell.fulls) os << " " << vertex_str(p);
    if (!cell.halves.empty()) {
      os << " | half:";
      for (const auto& h : cell.halves) os << " " << vertex_str(h);
    }
    os << "\n";
    empty = false;
  }
  if (empty) os << "none\n";
  return os.str();
}

}  // namespace

DerivedAVC curated_row(const VertexVector& seed) {
  DerivedAVC d = derive_avc_symbolic(seed);
  const int sd = seed.degree();
  for (auto& cell : d.sporadics) {
    std::vector<VertexVector> fulls, halves;
    for (const auto& p : cell.fulls) {
      bool keep = p.degree() >= sd;
      bool exception = false;
      if (!keep)
        for (const auto& k : kKeep)
          if (k.seed == seed && k.f == cell.f && k.full == p) keep = exception = true;
      if (!keep) continue;
      fulls.push_back(p);
      if (!exception && p.all_even()) halves.push_back(halved(p));
    }
    cell.fulls = std::move(fulls);
    cell.halves = std::move(halves);
  }
  std::erase_if(d.sporadics, [](const SporadicCell& c) { return c.fulls.empty(); });
  for (const auto& b : kBoundary) {
    if (!(b.seed == seed)) continue;
    if (base_feasible(seed, b.f, true) || !base_feasible(seed, b.f, false)) continue;
    SporadicCell cell;
    cell.f = b.f;
    for (const auto& p : line_lattice_points(seed, b.f)) {
      if (p.degree() < sd) continue;
      cell.fulls.push_back(p);
      if (b.halves && p.all_even()) cell.halves.push_back(halved(p));
    }
    if (!cell.fulls.empty()) d.sporadics.push_back(std::move(cell));
  }
  std::sort(d.sporadics.begin(), d.sporadics.end(),
            [](const SporadicCell& x, const SporadicCell& y) { return x.f < y.f; });
  return d;
}

std::string table_row(const VertexVector& seed) { return row_text(curated_row(seed)); }

std::string table_low_degree() {
  LowDegreeCatalog cat = low_degree_catalog();
  std::ostringstream os;
  auto line = [&](const char* label, const std::vector<VertexVector>& vs) {
    os << label << ":";
    for (const auto& v : vs) os << " " << vertex_str(v);
    os << "\n";
  };
  line("full deg3", cat.full3);
  line("full deg4", cat.full4);
  line("full deg5", cat.full5);
  line("half deg2", cat.half2);
  return os.str();
}

static std::string table_for(const std::vector<VertexVector>& seeds) {
  std::string out;
  for (const auto& seed : seeds) out += row_text(curated_row(seed));
  return out;
}

std::string table_degree3() { return table_for(low_degree_catalog().full3); }
std::string table_degree4() { return table_for(low_degree_catalog().full4); }
std::string table_degree5() { return table_for(low_degree_catalog().full5); }

std::string table_rational(long fmax) {
  std::vector<VertexVector> always;
  std::map<long, std::vector<VertexVector>> classes;
  for (long f = 5; f <= fmax; ++f) {
    AngleExpr gamma(rat(1, 6) + rat(4, f));
    std::optional<AngleTriple> triple;
    try {
      triple.emplace(AngleExpr(rat(1, 2)), AngleExpr(rat(1, 3)), gamma, f, true,
                     IntervalBound(Rational(0), Rational(1)));
    } catch (const std::exception&) {
      continue;  // the triple is not scalene-ordered at this f
    }
    for (const auto& v : enumerate_vertices(*triple, triple->bound, false)) {
      if (v.n[2] == 0) {
        if (std::find(always.begin(), always.end(), v) == always.end()) always.push_back(v);
      } else {
        classes[f].push_back(v);
      }
    }
  }
  std::sort(always.begin(), always.end(), vertex_less);
  std::ostringstream os;
  os << "f=all:";
  for (const auto& v : always) os << " " << vertex_str(v);
  os << "\n";
  for (auto& [f, vs] : classes) {
    std::sort(vs.begin(), vs.end(), vertex_less);
    os << "f=" << f << ":";
    for (const auto& v : vs) os << " " << vertex_str(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace spheretile

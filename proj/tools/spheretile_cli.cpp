#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spheretile/geometry.hpp"
#include "spheretile/tables.hpp"
#include "spheretile/tiling.hpp"

namespace st = spheretile;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("cannot open " + path);
    os << f.rdbuf();
  }
  return os.str();
}

// "t", "1-t", "2/3", "1/2-1/2t", "3/4" -> AngleExpr.
st::AngleExpr parse_angle_flex(const std::string& s) {
  st::AngleExpr e;
  std::string cur;
  int sign = 1;
  auto flush = [&] {
    if (cur.empty()) return;
    bool has_t = cur.find('t') != std::string::npos;
    std::string num = cur;
    if (has_t) {
      num = cur.substr(0, cur.find('t'));
      if (!num.empty() && num.back() == '*') num.pop_back();
      if (num.empty()) num = "1";
    }
    st::Rational r = st::parse_rational(num) * sign;
    if (has_t)
      e.r += r;
    else
      e.q += r;
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ' ') continue;
    if (ch == '+' || ch == '-') {
      flush();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur += ch;
    }
  }
  flush();
  return e;
}

std::array<st::AngleExpr, 3> parse_angles(const std::string& s) {
  std::array<st::AngleExpr, 3> out;
  std::istringstream is(s);
  std::string item;
  int i = 0;
  while (std::getline(is, item, ',')) {
    if (i >= 3) throw CLI::ValidationError("expected three angles");
    out[i++] = parse_angle_flex(item);
  }
  if (i != 3) throw CLI::ValidationError("expected three angles");
  return out;
}

// Concrete triangle for an angle triple at parameter t; degenerate 2-gons
// (alpha = pi) get the fixed representative c = 0.4 pi.
st::TriangleGeometry geometry_at(const std::array<st::AngleExpr, 3>& ang, double t) {
  double al = ang[0].eval(t) * kPi, be = ang[1].eval(t) * kPi, ga = ang[2].eval(t) * kPi;
  if (std::abs(al - kPi) < 1e-12) return st::lune_geometry(be, 0.4 * kPi);
  return st::make_geometry(al, be, ga);
}

// Exact relations from the small catalog of identities that hold numerically
// at the chosen parameter (margin 1e-9 for strict facts).
std::vector<st::LinCon> detect_relations(const st::TriangleGeometry& g) {
  std::vector<st::LinCon> rel;
  double v[3] = {g.a / kPi, g.b / kPi, g.c / kPi};
  const char* names = "abc";
  auto add = [&](const std::string& s) { rel.push_back(st::parse_relation(s)); };
  auto eq = [&](double x, double y) { return std::abs(x - y) < 1e-9; };
  std::string n0;
  for (int i = 0; i < 3; ++i) {
    std::string x(1, names[i]);
    if (eq(v[i], 1))
      add(x + "=1");
    else
      add(x + "<1");
    add(x + ">0");
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::string y(1, names[j]);
      if (eq(v[i] + v[j], 1) && i < j) add(x + "+" + y + "=1");
      if (eq(v[i], 2 * v[j])) add(x + "=2" + y);
      if (eq(v[i], v[j]) && i < j) add(x + "=" + y);
      if (v[i] > v[j] + 1e-9) add(x + ">" + y);
      int k = 3 - i - j;
      if (i < j && v[i] + v[j] > v[k] + 1e-9)
        add(x + "+" + y + ">" + std::string(1, names[k]));
    }
  }
  return rel;
}

int diff_exit(const std::string& label, const std::string& golden,
              const std::string& generated) {
  if (golden == generated) return 0;
  std::istringstream ga(golden), gb(generated);
  std::string la, lb;
  std::cout << "--- golden/" << label << "\n+++ generated\n";
  while (true) {
    bool ha = bool(std::getline(ga, la));
    bool hb = bool(std::getline(gb, lb));
    if (!ha && !hb) break;
    if (ha && hb && la == lb) continue;
    if (ha) std::cout << "-" << la << "\n";
    if (hb) std::cout << "+" << lb << "\n";
  }
  return 1;
}

// Same-shape comparison with numeric tolerance on every float field.
bool geom_close(const std::string& golden, const std::string& generated) {
  std::istringstream ga(golden), gb(generated);
  std::string la, lb;
  while (true) {
    bool ha = bool(std::getline(ga, la));
    bool hb = bool(std::getline(gb, lb));
    if (ha != hb) return false;
    if (!ha) return true;
    std::istringstream ta(la), tb(lb);
    std::string wa, wb;
    while (true) {
      bool fa = bool(ta >> wa), fb = bool(tb >> wb);
      if (fa != fb) return false;
      if (!fa) break;
      if (wa == wb) continue;
      try {
        size_t pa = wa.find('='), pb = wb.find('=');
        if (pa == std::string::npos || wa.substr(0, pa) != wb.substr(0, pb)) return false;
        if (std::abs(std::stod(wa.substr(pa + 1)) - std::stod(wb.substr(pb + 1))) > 1e-6)
          return false;
      } catch (...) {
        return false;
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for monohedral spherical triangle tilings"};
  app.require_subcommand(1);

  // tables ------------------------------------------------------------------
  std::string which;
  bool bless = false;
  auto* tables = app.add_subcommand("tables", "regenerate a table and diff the golden");
  tables->add_option("which", which, "t5|t7|t8|t9|t10|geom")->required();
  tables->add_flag("--bless", bless, "rewrite the golden file");

  // avc ---------------------------------------------------------------------
  std::string seed_str, f_str = "sym", format = "text";
  auto* avc = app.add_subcommand("avc", "derive the AVC for a seed vertex");
  avc->add_option("--seed", seed_str, "seed vertex, e.g. a3")->required();
  avc->add_option("--f", f_str, "tile count, or 'sym' for the symbolic row");
  avc->add_option("--format", format, "text|records");

  // counts ------------------------------------------------------------------
  std::string in_file;
  auto* counts = app.add_subcommand("counts", "counting identities of a tiling");
  counts->add_option("file", in_file, "tiling file (default stdin)");

  // edges -------------------------------------------------------------------
  int kmax = 2;
  auto* edges = app.add_subcommand("edges", "extended-edge pattern catalog");
  edges->add_option("--kmax", kmax, "largest repetition count");
  edges->add_option("--format", format, "text|records");

  // generate ----------------------------------------------------------------
  std::string family;
  int gk = 0, gn = 0, gfp = 0, variant = 1;
  bool rotation = false;
  auto* gen = app.add_subcommand("generate", "emit a tiling of a known family");
  gen->add_option("family", family,
                  "one-layer|two-layer|f8|f16|f36|subdivided-quad")->required();
  gen->add_option("--k", gk, "lune count (one-layer)");
  gen->add_option("--n", gn, "lune count (two-layer)");
  gen->add_option("--fprime", gfp, "quadrilateral count (subdivided-quad)");
  gen->add_option("--variant", variant, "subdivided-quad variant");
  gen->add_flag("--rotation", rotation, "hemisphere rotation modification");

  // verify ------------------------------------------------------------------
  std::string angles_str, t_str;
  std::vector<std::string> rel_strs;
  auto* ver = app.add_subcommand("verify", "verify a tiling against an angle triple");
  ver->add_option("file", in_file, "tiling file (default stdin)");
  ver->add_option("--angles", angles_str, "alpha,beta,gamma in units of pi")->required();
  ver->add_option("--t", t_str, "parameter value (default 0.3 for rational triples)");
  ver->add_option("--relation", rel_strs, "side-length relation, e.g. b=2c (repeatable)");

  // realize -----------------------------------------------------------------
  std::string obj_file;
  auto* rea = app.add_subcommand("realize", "numeric embedding on the unit sphere");
  rea->add_option("file", in_file, "tiling file (default stdin)");
  rea->add_option("--angles", angles_str, "alpha,beta,gamma in units of pi")->required();
  rea->add_option("--t", t_str, "parameter value (default 0.3 for rational triples)");
  rea->add_option("--obj", obj_file, "write an OBJ mesh here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tables) {
      const char* env = std::getenv("SPHERETILE_GOLDEN_DIR");
      std::string dir = env ? env : "golden";
      std::string out;
      if (which == "t5") out = st::table_low_degree();
      else if (which == "t7") out = st::table_degree3();
      else if (which == "t8") out = st::table_degree4();
      else if (which == "t9") out = st::table_degree5();
      else if (which == "t10") out = st::table_rational(300);
      else if (which == "geom") out = st::render_geom_table();
      else throw CLI::ValidationError("unknown table " + which);
      std::string path = dir + "/" + which + ".txt";
      if (bless) {
        std::ofstream f(path);
        f << out;
        std::cout << "blessed " << path << "\n";
        return 0;
      }
      std::ifstream f(path);
      if (!f) {
        std::cerr << "missing golden file " << path << "\n";
        return 1;
      }
      std::ostringstream gs;
      gs << f.rdbuf();
      if (which == "geom")
        return geom_close(gs.str(), out) ? 0 : diff_exit(which + ".txt", gs.str(), out);
      return diff_exit(which + ".txt", gs.str(), out);
    }

    if (*avc) {
      st::VertexVector seed = st::parse_vertex(seed_str);
      if (f_str == "sym") {
        std::cout << st::table_row(seed);
        return 0;
      }
      st::AVC a = st::derive_avc(seed, std::stol(f_str));
      if (format == "records") {
        for (const auto& e : a.entries) std::cout << st::avc_record(e) << "\n";
      } else {
        std::string full, half;
        for (const auto& e : a.entries)
          (e.vertex.half ? half : full) += " " + st::vertex_str(e.vertex);
        std::cout << "full:" << full << "\nhalf:" << (half.empty() ? " -" : half) << "\n";
      }
      return 0;
    }

    if (*counts) {
      st::TilingComplex t = st::parse_tiling(read_input(in_file));
      auto stats = st::stats_of(t);
      auto r1 = st::check_euler(stats);
      auto r2 = st::check_deficit(stats);
      std::cout << r1.render() << r2.render();
      return r1.pass() && r2.pass() ? 0 : 1;
    }

    if (*edges) {
      for (const auto& p : st::enumerate_patterns(kmax)) std::cout << p.str() << "\n";
      return 0;
    }

    if (*gen) {
      st::TilingComplex t;
      if (family == "one-layer") t = st::generate_one_layer(gk, rotation);
      else if (family == "two-layer")
        t = rotation ? st::generate_two_layer_rotation(gn) : st::generate_two_layer(gn);
      else if (family == "f8") t = st::generate_f8_sporadic();
      else if (family == "f16") t = st::generate_f16_sporadic();
      else if (family == "f36") t = st::generate_f36_rational();
      else if (family == "subdivided-quad") t = st::generate_subdivided_quad(gfp, variant);
      else throw CLI::ValidationError("unknown family " + family);
      std::cout << st::serialize(t);
      return 0;
    }

    if (*ver || *rea) {
      st::TilingComplex t = st::parse_tiling(read_input(in_file));
      auto ang = parse_angles(angles_str);
      bool rational = ang[0].is_rational() && ang[1].is_rational() && ang[2].is_rational();
      if (t_str.empty() && !rational)
        throw CLI::ValidationError("--t is required for irrational angle triples");
      double tv = t_str.empty() ? 0.3 : std::stod(t_str);
      st::TriangleGeometry g = geometry_at(ang, tv);
      if (*rea) {
        auto r = st::realize_tiling(t, g);
        if (!obj_file.empty()) {
          std::ofstream f(obj_file);
          f << st::export_obj(t, g);
        }
        std::cout << "tiles=" << t.tiles.size() << " closure_residual="
                  << r.closure_residual << "\n";
        return r.closure_residual < 1e-8 ? 0 : 1;
      }
      long f = long(t.tiles.size());
      if (f == 0 || ang[0] + ang[1] + ang[2] !=
                        st::AngleExpr(st::Rational(f + 4) / f)) {
        std::cerr << "angle sum is not 1 + 4/f for f=" << f << "\n";
        return 2;
      }
      st::AngleTriple triple(ang[0], ang[1], ang[2], f, false,
                             st::IntervalBound(st::Rational(0), st::Rational(1)));
      std::vector<st::LinCon> rel;
      if (!rel_strs.empty())
        for (const auto& s : rel_strs) rel.push_back(st::parse_relation(s));
      else
        rel = detect_relations(g);
      auto rep = st::verify(t, triple, rel);
      std::cout << rep.render();
      return rep.pass() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#pragma once

#include <map>
#include <string>
#include <vector>

#include "spheretile/vertex.hpp"

namespace spheretile {

struct VertexStats {
  std::map<int, long> v;  // full-vertex degree histogram
  std::map<int, long> h;  // half-vertex degree histogram
  long f = 0;

  long total_full() const;
  long total_half() const;
};

struct CheckItem {
  std::string identity;
  Rational lhs, rhs;
  bool pass() const { return lhs == rhs; }
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool pass() const;
  std::string render() const;
};

// Euler-type identities: e = (3f+h)/2 (with parity check), (v+h)-e+f = 2,
// f = 2v+h-4, and the corner double count 3f = sum k*v_k + sum l*h_l.
CheckReport check_euler(const VertexStats& stats);

// Deficit identities: both sides of the degree-weighted relations
// 4v2+3v3+2v4+v5+2h1+h2 = 12 + excess terms, and 3f+2v2+h1 = 12 + excess.
CheckReport check_deficit(const VertexStats& stats);

// Degree histogram of an AVC with numeric counts.
VertexStats stats_from_avc(const AVC& avc);

}  // namespace spheretile

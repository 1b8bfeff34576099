#pragma once

#include "tix/exact.hpp"
#include "tix/graph.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tix {

enum class IndexKind { M1, M2, F, PI1, PI2, HM, SDD };

inline constexpr std::array<IndexKind, 7> kAllIndexKinds = {
    IndexKind::M1, IndexKind::M2, IndexKind::F,  IndexKind::PI1,
    IndexKind::PI2, IndexKind::HM, IndexKind::SDD,
};

inline std::string_view index_name(IndexKind k) {
  switch (k) {
    case IndexKind::M1: return "M1";
    case IndexKind::M2: return "M2";
    case IndexKind::F: return "F";
    case IndexKind::PI1: return "PI1";
    case IndexKind::PI2: return "PI2";
    case IndexKind::HM: return "HM";
    case IndexKind::SDD: return "SDD";
  }
  throw std::logic_error("index_name: bad kind");
}

// Case-insensitive; "SSD" is accepted as an alias for SDD.
inline std::optional<IndexKind> parse_index_kind(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "M1") return IndexKind::M1;
  if (s == "M2") return IndexKind::M2;
  if (s == "F") return IndexKind::F;
  if (s == "PI1") return IndexKind::PI1;
  if (s == "PI2") return IndexKind::PI2;
  if (s == "HM") return IndexKind::HM;
  if (s == "SDD" || s == "SSD") return IndexKind::SDD;
  return std::nullopt;
}

struct IndexVector {
  int n = 0;
  int m = 0;
  ExactNumber m1, m2, f, pi1, pi2, hm, sdd;

  const ExactNumber& operator[](IndexKind k) const {
    switch (k) {
      case IndexKind::M1: return m1;
      case IndexKind::M2: return m2;
      case IndexKind::F: return f;
      case IndexKind::PI1: return pi1;
      case IndexKind::PI2: return pi2;
      case IndexKind::HM: return hm;
      case IndexKind::SDD: return sdd;
    }
    throw std::logic_error("IndexVector: bad kind");
  }
};

inline bool has_isolated_vertex(const Graph& g) {
  for (int d : degree_sequence(g))
    if (d == 0) return true;
  return false;
}

// Non-fatal diagnostics about degenerate values.
inline std::vector<std::string> index_warnings(const Graph& g) {
  std::vector<std::string> w;
  if (has_isolated_vertex(g))
    w.push_back("graph has isolated vertices: PI1 degenerates to 0");
  return w;
}

// All seven indices in one pass. Vertex products over a graph with an
// isolated vertex are genuinely 0 (PI1); edge products over an empty edge
// set are the empty product 1 (PI2).
inline IndexVector compute_all(const Graph& g) {
  auto deg = degree_sequence(g);
  IndexVector out;
  out.n = g.n;
  out.m = g.m();
  ExactNumber m1(0), m2(0), f(0), hm(0), sdd(0);
  ExactNumber pi1(1), pi2(1);
  for (int v = 0; v < g.n; ++v) {
    BigInt d(deg[static_cast<std::size_t>(v)]);
    m1 += ExactNumber(d * d);
    f += ExactNumber(d * d * d);
    pi1 *= ExactNumber(d * d);
  }
  for (auto [u, v] : g.edges) {
    BigInt du(deg[static_cast<std::size_t>(u)]);
    BigInt dv(deg[static_cast<std::size_t>(v)]);
    m2 += ExactNumber(du * dv);
    hm += ExactNumber((du + dv) * (du + dv));
    pi2 *= ExactNumber(du * dv);
    sdd += ExactNumber(du * du + dv * dv, du * dv);
  }
  out.m1 = m1;
  out.m2 = m2;
  out.f = f;
  out.pi1 = pi1;
  out.pi2 = pi2;
  out.hm = hm;
  out.sdd = sdd;
  return out;
}

inline ExactNumber compute_index(const Graph& g, IndexKind k) { return compute_all(g)[k]; }

}  // namespace tix

#pragma once

#include "tix/graph.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>

namespace tix {

enum class TransformKind { subdivision, semi_total };

struct DerivedSpec {
  TransformKind kind = TransformKind::subdivision;
  int k = 0;
};

// "S_k" / "R_k"
inline std::string transform_symbol(TransformKind t) {
  return t == TransformKind::subdivision ? "S_k" : "R_k";
}

inline std::optional<TransformKind> parse_transform(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "sk" || s == "s" || s == "subdivision") return TransformKind::subdivision;
  if (s == "rk" || s == "r" || s == "semi_total") return TransformKind::semi_total;
  return std::nullopt;
}

// S_k(G): each edge becomes a path through k new vertices. Originals keep
// their labels; the j-th canonical edge owns new labels n+jk .. n+jk+k-1,
// in path order from the smaller endpoint. k = 0 is the identity.
inline Graph subdivide_k(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("subdivide_k: k must be >= 0");
  if (k == 0) return g;
  std::vector<Edge> out;
  out.reserve(g.edges.size() * static_cast<std::size_t>(k + 1));
  const int n = g.n;
  for (int j = 0; j < g.m(); ++j) {
    auto [u, v] = g.edges[static_cast<std::size_t>(j)];
    int base = n + j * k;
    out.push_back({u, base});
    for (int t = 0; t + 1 < k; ++t) out.push_back({base + t, base + t + 1});
    out.push_back({base + k - 1, v});
  }
  return make_graph(n + g.m() * k, std::move(out));
}

// R_k(G): the original edge is kept and k new vertices are each joined to
// both endpoints. Same labeling scheme as subdivide_k. k = 0 is the identity.
inline Graph semi_total_k(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("semi_total_k: k must be >= 0");
  if (k == 0) return g;
  std::vector<Edge> out;
  out.reserve(g.edges.size() * static_cast<std::size_t>(2 * k + 1));
  const int n = g.n;
  for (int j = 0; j < g.m(); ++j) {
    auto [u, v] = g.edges[static_cast<std::size_t>(j)];
    out.push_back({u, v});
    for (int t = 0; t < k; ++t) {
      int w = n + j * k + t;
      out.push_back({u, w});
      out.push_back({v, w});
    }
  }
  return make_graph(n + g.m() * k, std::move(out));
}

inline Graph apply_transform(const Graph& g, DerivedSpec spec) {
  switch (spec.kind) {
    case TransformKind::subdivision: return subdivide_k(g, spec.k);
    case TransformKind::semi_total: return semi_total_k(g, spec.k);
  }
  throw std::logic_error("apply_transform: bad kind");
}

}  // namespace tix

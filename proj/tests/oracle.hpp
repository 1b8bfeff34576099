#pragma once

// Independent recomputation of all seven indices, used to cross-check the
// library. Kept deliberately separate from the library's code path: degrees
// come from an adjacency matrix, edges are enumerated from that matrix, and
// accumulation uses boost multiprecision types directly.

#include <tix/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct Values {
  cpp_int m1 = 0;
  cpp_int m2 = 0;
  cpp_int f = 0;
  cpp_int hm = 0;
  cpp_int pi1 = 1;
  cpp_int pi2 = 1;
  cpp_rational sdd = 0;
};

inline Values compute(const tix::Graph& g) {
  auto n = static_cast<std::size_t>(g.n);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  std::vector<cpp_int> deg(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    cpp_int d = 0;
    for (std::size_t v = 0; v < n; ++v) d += adj[u][v];
    deg[u] = d;
  }
  Values out;
  for (std::size_t u = 0; u < n; ++u) {
    out.m1 += deg[u] * deg[u];
    out.f += deg[u] * deg[u] * deg[u];
    out.pi1 *= deg[u] * deg[u];
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!adj[u][v]) continue;
      out.m2 += deg[u] * deg[v];
      out.hm += (deg[u] + deg[v]) * (deg[u] + deg[v]);
      out.pi2 *= deg[u] * deg[v];
      out.sdd += cpp_rational(deg[u] * deg[u] + deg[v] * deg[v], deg[u] * deg[v]);
    }
  }
  return out;
}

}  // namespace oracle

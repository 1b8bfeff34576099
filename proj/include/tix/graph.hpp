#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tix {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Edge list is canonical:
// every pair oriented u < v, sorted lexicographically, no duplicates.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool operator==(const Graph&) const = default;
};

// Canonicalizes and validates a raw edge list (throws on self-loops,
// duplicates, out-of-range labels).
inline Graph make_graph(int n, std::vector<Edge> raw) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be >= 0");
  for (auto& [u, v] : raw) {
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(raw.begin(), raw.end());
  auto dup = std::adjacent_find(raw.begin(), raw.end());
  if (dup != raw.end())
    throw std::invalid_argument("graph: duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  return Graph{n, std::move(raw)};
}

// Degrees indexed by vertex label.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  auto adj = adjacency_lists(g);
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n;
}

// r if every vertex has degree r, nullopt otherwise (n == 0 has no degree).
inline std::optional<int> regular_degree(const Graph& g) {
  if (g.n == 0) return std::nullopt;
  auto deg = degree_sequence(g);
  for (int d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

// ---------------------------------------------------------------------------
// Deterministic randomness. std::uniform_*_distribution sequences are
// implementation-defined, so sampling is done by hand on top of mt19937_64.

namespace detail {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t raw() { return eng(); }

  // unbiased integer in [0, bound) by rejection
  int below(int bound) {
    auto b = static_cast<std::uint64_t>(bound);
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % b;
    std::uint64_t x;
    do {
      x = raw();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

  // uniform double in [0, 1)
  double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(below(i + 1))]);
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph families

enum class FamilyKind {
  path,
  cycle,
  complete,
  star,
  complete_bipartite,
  random_regular,
  erdos_renyi,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int a = 0;              // n for most families, left part size for K_{a,b}
  int b = 0;              // right part size (complete_bipartite only)
  int r = 0;              // degree (random_regular only)
  double p = 0.0;         // edge probability (erdos_renyi only)
  std::uint64_t seed = 0; // random families only
};

inline std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::star: return "star";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::random_regular: return "random_regular";
    case FamilyKind::erdos_renyi: return "erdos_renyi";
  }
  throw std::logic_error("family_name: bad kind");
}

inline std::optional<FamilyKind> parse_family(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "path") return FamilyKind::path;
  if (s == "cycle") return FamilyKind::cycle;
  if (s == "complete") return FamilyKind::complete;
  if (s == "star") return FamilyKind::star;
  if (s == "complete_bipartite" || s == "biclique") return FamilyKind::complete_bipartite;
  if (s == "random_regular") return FamilyKind::random_regular;
  if (s == "erdos_renyi") return FamilyKind::erdos_renyi;
  return std::nullopt;
}

namespace detail {
inline std::string double_str(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}
}  // namespace detail

// Stable descriptor used in reports and test output.
inline std::string describe(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::path: return "path(n=" + std::to_string(s.a) + ")";
    case FamilyKind::cycle: return "cycle(n=" + std::to_string(s.a) + ")";
    case FamilyKind::complete: return "complete(n=" + std::to_string(s.a) + ")";
    case FamilyKind::star: return "star(leaves=" + std::to_string(s.a) + ")";
    case FamilyKind::complete_bipartite:
      return "complete_bipartite(a=" + std::to_string(s.a) + ",b=" + std::to_string(s.b) + ")";
    case FamilyKind::random_regular:
      return "random_regular(n=" + std::to_string(s.a) + ",r=" + std::to_string(s.r) +
             ",seed=" + std::to_string(s.seed) + ")";
    case FamilyKind::erdos_renyi:
      return "erdos_renyi(n=" + std::to_string(s.a) + ",p=" + detail::double_str(s.p) +
             ",seed=" + std::to_string(s.seed) + ")";
  }
  throw std::logic_error("describe: bad kind");
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return make_graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return make_graph(n, std::move(e));
}

// K_{1,leaves}: center 0, leaves 1..leaves
inline Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star: leaf count must be >= 1");
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return make_graph(leaves + 1, std::move(e));
}

// K_{a,b}: left part 0..a-1, right part a..a+b-1
inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return make_graph(a + b, std::move(e));
}

// Pairing model: shuffle nr stubs, pair consecutive; restart on self-loops
// or multi-edges. Bounded restarts keep it deterministic and terminating.
inline Graph random_regular_graph(int n, int r, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_regular: n must be >= 1");
  if (r < 0 || r >= n) throw std::invalid_argument("random_regular: need 0 <= r < n");
  if (n % 2 == 1 && r % 2 == 1)
    throw std::invalid_argument("random_regular: n*r must be even");
  if (r == 0) return Graph{n, {}};
  detail::Rng rng(seed);
  const int attempts = 200;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < r; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::vector<Edge> e;
    e.reserve(stubs.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      e.push_back({u, v});
    }
    if (!ok) continue;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    return Graph{n, std::move(e)};
  }
  throw std::runtime_error("random_regular: no simple pairing after " + std::to_string(attempts) +
                           " attempts");
}

// G(n, p): one coin flip per pair, lexicographic order
inline Graph erdos_renyi_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: need 0 <= p <= 1");
  detail::Rng rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) e.push_back({u, v});
  return Graph{n, std::move(e)};
}

// Pure function of the spec: same spec, same graph.
inline Graph generate(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::path: return path_graph(s.a);
    case FamilyKind::cycle: return cycle_graph(s.a);
    case FamilyKind::complete: return complete_graph(s.a);
    case FamilyKind::star: return star_graph(s.a);
    case FamilyKind::complete_bipartite: return complete_bipartite_graph(s.a, s.b);
    case FamilyKind::random_regular: return random_regular_graph(s.a, s.r, s.seed);
    case FamilyKind::erdos_renyi: return erdos_renyi_graph(s.a, s.p, s.seed);
  }
  throw std::logic_error("generate: bad kind");
}

// ---------------------------------------------------------------------------
// Edge-list text format. Lines: '# comment', optional leading header
// "n <count>", then one "u v" line per edge (any order, no duplicates).

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
  auto* first = tok.data();
  auto* last = tok.data() + tok.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace detail

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  std::optional<long long> declared;
  long long max_label = -1;
  bool saw_edge = false;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string t1;
    if (!(ls >> t1)) continue;  // blank
    if (t1[0] == '#') continue;
    std::string t2, extra;
    if (!(ls >> t2)) fail("expected two fields, got one");
    if (ls >> extra) fail("trailing content '" + extra + "'");
    if (t1 == "n") {
      if (saw_edge || declared) fail("header 'n <count>' must be the first entry");
      long long cnt;
      if (!detail::parse_int(t2, cnt) || cnt < 0) fail("bad vertex count '" + t2 + "'");
      declared = cnt;
      continue;
    }
    long long u, v;
    if (!detail::parse_int(t1, u) || !detail::parse_int(t2, v))
      fail("expected 'u v' with integer labels, got '" + t1 + " " + t2 + "'");
    if (u < 0 || v < 0) fail("negative vertex label");
    max_label = std::max({max_label, u, v});
    saw_edge = true;
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  long long n = declared ? *declared : max_label + 1;
  if (max_label >= n)
    throw std::invalid_argument("edge list: label " + std::to_string(max_label) +
                                " exceeds declared n " + std::to_string(n));
  if (n > 2'000'000) throw std::invalid_argument("edge list: vertex count too large");
  return make_graph(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.n) + "\n";
  for (auto [u, v] : g.edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

inline Graph load_edge_list_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace tix

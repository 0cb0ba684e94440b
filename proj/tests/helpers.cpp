#include "helpers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testutil {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

RotationGraph embed_points(const std::vector<std::pair<double, double>>& pts,
                           const std::vector<Edge>& edges) {
  const int n = static_cast<int>(pts.size());
  auto adj = adjacency(n, edges);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    rot[v] = adj[v];
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      const double aa = std::atan2(pts[a].second - pts[v].second, pts[a].first - pts[v].first);
      const double ab = std::atan2(pts[b].second - pts[v].second, pts[b].first - pts[v].first);
      return aa < ab;
    });
  }
  return RotationGraph::make_plain(rot);
}

RotationGraph plain_graph(int n, const std::vector<Edge>& edges) {
  auto adj = adjacency(n, edges);
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return RotationGraph::make_plain(adj);
}

RotationGraph subdivide(const RotationGraph& g) {
  const int n = g.vertex_count();
  std::map<Edge, int> mid;
  std::map<Edge, int> esign;
  for (auto [u, v] : g.edges()) mid[{u, v}] = n + static_cast<int>(mid.size());
  for (int v = 0; v < n; ++v)
    for (const auto& end : g.rotation(v))
      if (v < end.neighbor) esign[{v, end.neighbor}] = end.sign;
  // Edge u-v (u < v) splits into u-w and w-v; the u side keeps the original
  // signature, the v side gets +1, so any face walk flips sense across the
  // pair exactly as often as before.
  std::vector<std::vector<decomp::DartEnd>> rot(n + mid.size());
  for (int v = 0; v < n; ++v)
    for (const auto& end : g.rotation(v)) {
      const Edge e{std::min(v, end.neighbor), std::max(v, end.neighbor)};
      rot[v].push_back({mid.at(e), v == e.first ? esign.at(e) : 1});
    }
  for (auto [e, w] : mid) {
    rot[w].push_back({e.first, esign.at(e)});
    rot[w].push_back({e.second, 1});
  }
  return RotationGraph::make(rot);
}

RotationGraph delete_random_vertices(const RotationGraph& g, int count, std::mt19937& rng) {
  std::vector<int> ids(g.vertex_count());
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(count);
  return decomp::induce_removing(g, ids).graph;
}

bool is_connected(int n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  auto adj = adjacency(n, edges);
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

std::vector<Edge> random_connected_edges(int n, int extra, std::mt19937& rng) {
  std::set<Edge> chosen;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    chosen.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<Edge> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!chosen.count({u, v})) pool.push_back({u, v});
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int i = 0; i < extra && i < static_cast<int>(pool.size()); ++i)
    chosen.insert(pool[i]);
  return {chosen.begin(), chosen.end()};
}

std::vector<std::vector<Edge>> connected_graphs_upto_iso(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("connected_graphs_upto_iso: n in 2..6");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const int np = static_cast<int>(pairs.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perm_maps;  // pair index -> pair index
  do {
    std::vector<int> pm(np);
    for (int i = 0; i < np; ++i) {
      int a = perm[pairs[i].first], b = perm[pairs[i].second];
      if (a > b) std::swap(a, b);
      for (int j = 0; j < np; ++j)
        if (pairs[j] == Edge{a, b}) {
          pm[i] = j;
          break;
        }
    }
    perm_maps.push_back(std::move(pm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> canon_seen;
  std::vector<std::vector<Edge>> out;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < np; ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    if (static_cast<int>(edges.size()) < n - 1 || !is_connected(n, edges)) continue;
    std::uint32_t canon = mask;
    for (const auto& pm : perm_maps) {
      std::uint32_t m2 = 0;
      for (int i = 0; i < np; ++i)
        if (mask >> i & 1) m2 |= 1u << pm[i];
      canon = std::min(canon, m2);
    }
    if (canon_seen.insert(canon).second && canon == mask) out.push_back(edges);
  }
  return out;
}

bool subset_degenerate(int n, const std::vector<Edge>& edges, int d) {
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int best = n;
    for (int v = 0; v < n && best > d; ++v) {
      if (!(mask >> v & 1)) continue;
      int deg = 0;
      for (auto [a, b] : edges)
        if ((a == v && (mask >> b & 1)) || (b == v && (mask >> a & 1))) ++deg;
      best = std::min(best, deg);
    }
    if (best > d) return false;
  }
  return true;
}

namespace {

bool acyclic(int n, const std::vector<Edge>& edges, std::uint32_t dir) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (dir >> i & 1) std::swap(u, v);
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int done = 0;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    ++done;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return done == n;
}

bool orient_search(int n, const std::vector<Edge>& edges, int d, std::size_t i,
                   std::uint32_t dir, std::vector<int>& outdeg) {
  if (i == edges.size()) return acyclic(n, edges, dir);
  auto [u, v] = edges[i];
  if (outdeg[u] < d) {
    ++outdeg[u];
    if (orient_search(n, edges, d, i + 1, dir, outdeg)) return true;
    --outdeg[u];
  }
  if (outdeg[v] < d) {
    ++outdeg[v];
    if (orient_search(n, edges, d, i + 1, dir | (1u << i), outdeg)) return true;
    --outdeg[v];
  }
  return false;
}

}  // namespace

bool orientation_exists(int n, const std::vector<Edge>& edges, int d) {
  if (edges.size() > 24) throw std::invalid_argument("orientation_exists: too many edges");
  std::vector<int> outdeg(n, 0);
  return orient_search(n, edges, d, 0, 0, outdeg);
}

bool decomposable_bruteforce(int n, const std::vector<Edge>& edges, int d, int h) {
  const int m = static_cast<int>(edges.size());
  if (m > 16) throw std::invalid_argument("decomposable_bruteforce: too many edges");
  for (std::uint32_t hmask = 0; hmask < (1u << m); ++hmask) {
    std::vector<int> hdeg(n, 0);
    bool ok = true;
    std::vector<Edge> rest;
    for (int i = 0; i < m && ok; ++i) {
      if (hmask >> i & 1) {
        ok = ++hdeg[edges[i].first] <= h && ++hdeg[edges[i].second] <= h;
      } else {
        rest.push_back(edges[i]);
      }
    }
    if (ok && orientation_exists(n, rest, d)) return true;
  }
  return false;
}

namespace {

void cycle_search(const std::vector<std::vector<int>>& adj, int k, std::vector<int>& path,
                  std::vector<bool>& used, int& count) {
  const int len = static_cast<int>(path.size());
  if (len == k) {
    const auto& nb = adj[path.back()];
    if (std::find(nb.begin(), nb.end(), path[0]) != nb.end() && path[1] < path.back())
      ++count;
    return;
  }
  for (int w : adj[path.back()]) {
    if (used[w] || w <= path[0]) continue;
    used[w] = true;
    path.push_back(w);
    cycle_search(adj, k, path, used, count);
    path.pop_back();
    used[w] = false;
  }
}

}  // namespace

int count_cycles_bruteforce(int n, const std::vector<Edge>& edges, int k) {
  auto adj = adjacency(n, edges);
  int count = 0;
  std::vector<bool> used(n, false);
  for (int s = 0; s < n; ++s) {
    std::vector<int> path = {s};
    used[s] = true;
    cycle_search(adj, k, path, used, count);
    used[s] = false;
  }
  return count;
}

RotationGraph icosahedron() {
  auto A = [](int i) { return 1 + (i + 5) % 5; };
  auto B = [](int i) { return 6 + (i + 5) % 5; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 5; ++i) faces.push_back({0, A(i), A(i + 1)});
  for (int i = 0; i < 5; ++i) faces.push_back({A(i + 1), A(i), B(i)});
  for (int i = 0; i < 5; ++i) faces.push_back({B(i), B(i + 1), A(i + 1)});
  for (int i = 0; i < 5; ++i) faces.push_back({11, B(i + 1), B(i)});
  return RotationGraph::from_faces(12, faces);
}

namespace {

struct GadgetPlan {
  std::vector<Edge> core_edges;
  std::vector<int> pendants;  // per core vertex
};

Gadget from_plan(const GadgetPlan& plan) {
  int n = 0;
  for (auto [u, v] : plan.core_edges) n = std::max({n, u + 1, v + 1});
  n = std::max(n, static_cast<int>(plan.pendants.size()));
  const int core = n;
  auto edges = plan.core_edges;
  for (int v = 0; v < static_cast<int>(plan.pendants.size()); ++v)
    for (int k = 0; k < plan.pendants[v]; ++k) edges.push_back({v, n++});
  return {plain_graph(n, edges), core};
}

Gadget from_drawing(std::vector<std::pair<double, double>> pts, std::vector<Edge> edges,
                    int core) {
  return {embed_points(pts, edges), core};
}

// configuration tables transcribed from the matching/arc lists of the
// (2,1)-reduction proofs, 0-based
struct SubCfg {
  std::vector<Edge> m, d;
  int k;
};

SubCfg l7_table(int which) {
  switch (which) {
    case 1:
      return {{{0, 4}, {1, 2}, {5, 6}, {7, 8}, {9, 10}},
              {{0, 1}, {0, 6}, {1, 8}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {7, 9}, {10, 3}},
              11};
    case 2:
      return {{{0, 4}, {1, 2}, {5, 6}, {7, 8}, {3, 10}},
              {{0, 1}, {0, 6}, {1, 8}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {7, 9}, {9, 10}},
              11};
    case 3:
      return {{{0, 4}, {5, 6}, {1, 10}, {3, 7}, {8, 9}},
              {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {2, 8}, {3, 4}, {4, 5}, {8, 7}, {10, 9}},
              11};
    case 4:
      return {{{0, 4}, {5, 6}, {1, 10}, {3, 7}, {8, 9}},
              {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {2, 8}, {3, 4}, {4, 5}, {8, 7}, {9, 10}},
              11};
    case 5:
      return {{{0, 1}, {3, 4}, {5, 6}},
              {{0, 4}, {0, 6}, {1, 5}, {1, 7}, {2, 1}, {2, 3}, {6, 2}, {6, 7}},
              8};
    case 6:
      return {{{0, 4}, {2, 3}, {5, 6}, {7, 8}},
              {{0, 1}, {0, 6}, {1, 5}, {2, 1}, {2, 8}, {3, 7}, {4, 3}, {4, 8}, {5, 4}},
              9};
    default:
      return {{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}},
              {{0, 4}, {0, 6}, {1, 0}, {1, 5}, {2, 3}, {2, 8}, {3, 7}, {8, 9}, {10, 1}},
              11};
  }
}

Gadget l7_gadget(int which) {
  const SubCfg cfg = l7_table(which);
  GadgetPlan plan;
  std::vector<int> outdeg(cfg.k, 0);
  for (auto e : cfg.m) plan.core_edges.push_back(e);
  for (auto [a, b] : cfg.d) {
    plan.core_edges.push_back({a, b});
    ++outdeg[a];
  }
  for (int v = 0; v < cfg.k; ++v) plan.pendants.push_back(2 - outdeg[v]);
  return from_plan(plan);
}

}  // namespace

Gadget lemma_gadget(const std::string& id) {
  if (id == "L1a") return from_plan({{}, {3}});
  if (id == "L1b") return from_plan({{{0, 1}}, {3, 3}});
  if (id == "L5a") return from_plan({{}, {2}});
  if (id == "L5b") return from_plan({{{0, 1}}, {2, 2}});
  if (id == "L2a-case1-545")
    return from_drawing(
        {{0, 3}, {-4, 0}, {0, 0}, {4, 0}, {-1, 6}, {1, 6}, {-8, 1}, {-8, -2}, {-6, -5},
         {0, -5}, {8, 1}, {8, -2}, {6, -5}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {1, 8},
         {2, 9}, {3, 10}, {3, 11}, {3, 12}},
        4);
  if (id == "L2a-case1-454")
    return from_drawing(
        {{0, 3}, {-4, 0}, {0, 0}, {4, 0}, {-1, 6}, {1, 6}, {-8, 0}, {-6, -4}, {-1, -5},
         {1, -5}, {8, 0}, {6, -4}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8},
         {2, 9}, {3, 10}, {3, 11}},
        4);
  if (id == "L2a-case2")
    return from_drawing(
        {{0, 0}, {-4, 1}, {-2, 3}, {4, 1}, {2, 3}, {0, 4}, {-8, 2}, {-7, -1}, {-5, 6},
         {-3, 6}, {-1, 6}, {8, 2}, {7, -1}, {1, 6}, {3, 6}, {5, 6}},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8},
         {2, 9}, {2, 10}, {3, 11}, {3, 12}, {4, 13}, {4, 14}, {4, 15}},
        5);
  if (id == "L2b")
    return from_drawing(
        {{0, 0}, {-6, -3}, {-2, -4}, {2, -4}, {6, -3}, {0, 4}, {-10, -1}, {-10, -4},
         {-8, -6}, {-2, -8}, {0, -8}, {2, -8}, {4, -7}, {10, -1}, {9, -5}},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 6}, {1, 7},
         {1, 8}, {2, 9}, {3, 10}, {3, 11}, {3, 12}, {4, 13}, {4, 14}},
        5);
  if (id == "L6")
    return from_drawing(
        {{0, 2}, {2, 0}, {0, -2}, {-2, 0}, {0, 5}, {5, 1}, {5, -1}, {0, -5}, {-5, 1},
         {-5, -1}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {3, 9}},
        4);
  for (int i = 1; i <= 7; ++i)
    if (id == "L7-" + std::to_string(i)) return l7_gadget(i);
  throw std::invalid_argument("lemma_gadget: unknown id " + id);
}

const std::vector<std::string>& all_lemma_ids() {
  static const std::vector<std::string> ids = {
      "L1a",  "L1b",  "L2a-case1-545", "L2a-case1-454", "L2a-case2", "L2b",
      "L5a",  "L5b",  "L6",            "L7-1",          "L7-2",      "L7-3",
      "L7-4", "L7-5", "L7-6",          "L7-7"};
  return ids;
}

}  // namespace testutil

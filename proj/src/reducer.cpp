#include "decomp/reducer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "decomp/structure.hpp"

namespace decomp {

std::pair<int, int> params_for(Theorem t) {
  return t == Theorem::T0 ? std::pair{3, 1} : std::pair{2, 1};
}

namespace {

std::vector<std::string> label_names(const std::string& prefix, int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// ------------------------------------------------------------------
// degree detectors

std::vector<ConfigMatch> detect_low_degree(const RotationGraph& g, int max_deg,
                                           const std::string& id) {
  std::vector<ConfigMatch> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= max_deg) out.push_back({id, {"v"}, {v}, {}});
  return out;
}

std::vector<ConfigMatch> detect_adjacent_pair(const RotationGraph& g, int deg,
                                              const std::string& id) {
  std::vector<ConfigMatch> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != deg) continue;
    auto nb = g.neighbors(u);
    std::sort(nb.begin(), nb.end());
    for (int v : nb)
      if (v > u && g.degree(v) == deg)
        out.push_back({id, {"u", "v"}, {u, v}, {{{0, 1}}, {}}});
  }
  return out;
}

// ------------------------------------------------------------------
// corner-triangle detectors around a 5-vertex

// true when the face at corner c of v is a triangle on exactly {v, a, b}
bool triangle_corner(const FaceStructure& fs, int v, int c, int a, int b) {
  const int f = fs.face_at_corner(v, c);
  if (fs.degree(f) != 3) return false;
  std::set<int> bd(fs.boundary_vertices(f).begin(), fs.boundary_vertices(f).end());
  return bd == std::set<int>{v, a, b};
}

// neighbor slot walker: slots i, i+dir, i+2*dir, ... around v; sector_corner
// gives the corner index between consecutive slots of the walk
struct Fan {
  const RotationGraph& g;
  int v, start, dir;
  int deg() const { return g.degree(v); }
  int slot(int k) const { return ((start + k * dir) % deg() + deg()) % deg(); }
  int nbr(int k) const { return g.rotation(v)[slot(k)].neighbor; }
  int sector_corner(int k) const {  // corner between slots k and k+1 of the walk
    return dir > 0 ? slot(k) : slot(k + 1);
  }
};

std::vector<ConfigMatch> detect_double_triangle(const RotationGraph& g,
                                                const FaceStructure& fs, int d1, int d2,
                                                int d3, const std::string& id,
                                                const Recipe& recipe) {
  std::vector<ConfigMatch> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 5) continue;
    std::vector<std::vector<int>> tuples;
    for (int dir : {1, -1})
      for (int i = 0; i < 5; ++i) {
        Fan fan{g, v, i, dir};
        const int a = fan.nbr(0), b = fan.nbr(1), c = fan.nbr(2);
        if (g.degree(a) != d1 || g.degree(b) != d2 || g.degree(c) != d3) continue;
        if (!triangle_corner(fs, v, fan.sector_corner(0), a, b)) continue;
        if (!triangle_corner(fs, v, fan.sector_corner(1), b, c)) continue;
        if (g.adjacent(a, c)) continue;  // edges inside X are exactly the recipe's
        tuples.push_back({a, b, c});
      }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    for (const auto& t : tuples)
      out.push_back({id, {"v", "v1", "v2", "v3"}, {v, t[0], t[1], t[2]}, recipe});
  }
  return out;
}

std::vector<ConfigMatch> detect_opposite_triangles(const RotationGraph& g,
                                                   const FaceStructure& fs) {
  const Recipe recipe{{{1, 2}, {3, 4}}, {{0, 2}, {0, 4}, {1, 0}, {3, 0}}};
  std::vector<ConfigMatch> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 5) continue;
    // split each triangle's pair as (4-vertex, 5-vertex)
    auto split = [&](int c) -> std::optional<std::pair<int, int>> {
      const int a = g.rotation(v)[c].neighbor;
      const int b = g.rotation(v)[(c + 1) % 5].neighbor;
      if (!triangle_corner(fs, v, c, a, b)) return std::nullopt;
      if (g.degree(a) == 4 && g.degree(b) == 5) return std::pair{a, b};
      if (g.degree(b) == 4 && g.degree(a) == 5) return std::pair{b, a};
      return std::nullopt;
    };
    std::vector<std::vector<int>> tuples;
    for (int i = 0; i < 5; ++i)
      for (int off : {2, 3}) {  // the two corners not adjacent to corner i
        const int j = (i + off) % 5;
        auto p = split(i), q = split(j);
        if (!p || !q) continue;
        auto [x1, x2] = *p;
        auto [x3, x4] = *q;
        if (g.adjacent(x1, x3) || g.adjacent(x1, x4) || g.adjacent(x2, x3) ||
            g.adjacent(x2, x4))
          continue;
        tuples.push_back({x1, x2, x3, x4});
      }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    for (const auto& t : tuples)
      out.push_back({"L2a-case2", {"v", "v1", "v2", "v3", "v4"}, {v, t[0], t[1], t[2], t[3]},
                     recipe});
  }
  return out;
}

std::vector<ConfigMatch> detect_triple_triangle(const RotationGraph& g,
                                                const FaceStructure& fs) {
  const Recipe recipe{{{1, 2}, {3, 4}}, {{0, 1}, {0, 3}, {2, 0}, {2, 3}, {4, 0}}};
  const int want[4] = {5, 4, 6, 4};
  std::vector<ConfigMatch> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 5) continue;
    std::vector<std::vector<int>> tuples;
    for (int dir : {1, -1})
      for (int i = 0; i < 5; ++i) {
        Fan fan{g, v, i, dir};
        int w[4];
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
          w[k] = fan.nbr(k);
          ok = g.degree(w[k]) == want[k];
        }
        if (!ok) continue;
        for (int k = 0; k < 3 && ok; ++k)
          ok = triangle_corner(fs, v, fan.sector_corner(k), w[k], w[k + 1]);
        if (!ok) continue;
        if (g.adjacent(w[0], w[2]) || g.adjacent(w[0], w[3]) || g.adjacent(w[1], w[3]))
          continue;
        tuples.push_back({w[0], w[1], w[2], w[3]});
      }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    for (const auto& t : tuples)
      out.push_back({"L2b", {"v", "v1", "v2", "v3", "v4"}, {v, t[0], t[1], t[2], t[3]},
                     recipe});
  }
  return out;
}

// ------------------------------------------------------------------
// alternating quad face (T1)

std::vector<ConfigMatch> detect_alternating_quad(const RotationGraph& g,
                                                 const FaceStructure& fs) {
  const Recipe recipe{{{0, 1}, {2, 3}}, {{0, 3}, {2, 1}}};
  std::vector<std::vector<int>> tuples;
  for (int f = 0; f < fs.face_count(); ++f) {
    if (fs.degree(f) != 4) continue;
    const auto& w = fs.boundary_vertices(f);
    if (std::set<int>(w.begin(), w.end()).size() != 4) continue;
    for (int dir : {1, -1})
      for (int r = 0; r < 4; ++r) {
        int u[4];
        for (int k = 0; k < 4; ++k) u[k] = w[((r + k * dir) % 4 + 4) % 4];
        if (g.degree(u[0]) != 3 || g.degree(u[1]) != 4 || g.degree(u[2]) != 3 ||
            g.degree(u[3]) != 4)
          continue;
        if (g.adjacent(u[0], u[2]) || g.adjacent(u[1], u[3])) continue;
        tuples.push_back({u[0], u[1], u[2], u[3]});
      }
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  std::vector<ConfigMatch> out;
  for (const auto& t : tuples)
    out.push_back({"L6", label_names("v", 4), {t[0], t[1], t[2], t[3]}, recipe});
  return out;
}

// ------------------------------------------------------------------
// fixed subgraphs with exact degrees (T1)

struct SubgraphSpec {
  std::string id;
  std::vector<std::string> names;
  Recipe recipe;
  int k = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<int> want_deg;
  std::vector<int> anchor;  // for i > 0: an earlier label adjacent to i

  SubgraphSpec(std::string id_, std::vector<std::string> names_, Recipe r)
      : id(std::move(id_)), names(std::move(names_)), recipe(std::move(r)) {
    k = static_cast<int>(names.size());
    adj.assign(k, std::vector<bool>(k, false));
    std::vector<int> deg(k, 0), outdeg(k, 0);
    auto add = [&](int a, int b) {
      adj[a][b] = adj[b][a] = true;
      ++deg[a];
      ++deg[b];
    };
    for (auto [a, b] : recipe.m_edges) add(a, b);
    for (auto [a, b] : recipe.d_arcs) {
      add(a, b);
      ++outdeg[a];
    }
    for (int i = 0; i < k; ++i) want_deg.push_back(deg[i] + (2 - outdeg[i]));
    anchor.assign(k, -1);
    for (int i = 1; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (adj[i][j]) { anchor[i] = j; break; }
  }

  void search(const RotationGraph& g, std::vector<int>& host, std::vector<bool>& used,
              std::vector<ConfigMatch>& out) const {
    const int i = static_cast<int>(host.size());
    if (i == k) {
      out.push_back({id, names, host, recipe});
      return;
    }
    std::vector<int> cands;
    if (i == 0) {
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == want_deg[0]) cands.push_back(v);
    } else {
      cands = g.neighbors(host[anchor[i]]);
      std::sort(cands.begin(), cands.end());
    }
    for (int v : cands) {
      if (i > 0 && (used[v] || g.degree(v) != want_deg[i])) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.adjacent(v, host[j]) == adj[i][j];
      if (!ok) continue;
      used[v] = true;
      host.push_back(v);
      search(g, host, used, out);
      host.pop_back();
      used[v] = false;
    }
  }

  std::vector<ConfigMatch> detect(const RotationGraph& g) const {
    std::vector<int> host;
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<ConfigMatch> out;
    search(g, host, used, out);
    return out;
  }
};

std::vector<SubgraphSpec> make_subgraph_specs() {
  std::vector<SubgraphSpec> specs;
  auto v11 = label_names("v", 11);
  specs.emplace_back("L7-1", v11,
                     Recipe{{{0, 4}, {1, 2}, {5, 6}, {7, 8}, {9, 10}},
                            {{0, 1}, {0, 6}, {1, 8}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {7, 9},
                             {10, 3}}});
  specs.emplace_back("L7-2", v11,
                     Recipe{{{0, 4}, {1, 2}, {5, 6}, {7, 8}, {3, 10}},
                            {{0, 1}, {0, 6}, {1, 8}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {7, 9},
                             {9, 10}}});
  specs.emplace_back("L7-3", v11,
                     Recipe{{{0, 4}, {5, 6}, {1, 10}, {3, 7}, {8, 9}},
                            {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {2, 8}, {3, 4}, {4, 5}, {8, 7},
                             {10, 9}}});
  specs.emplace_back("L7-4", v11,
                     Recipe{{{0, 4}, {5, 6}, {1, 10}, {3, 7}, {8, 9}},
                            {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {2, 8}, {3, 4}, {4, 5}, {8, 7},
                             {9, 10}}});
  specs.emplace_back(
      "L7-5", std::vector<std::string>{"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v9"},
      Recipe{{{0, 1}, {3, 4}, {5, 6}},
             {{0, 4}, {0, 6}, {1, 5}, {1, 7}, {2, 1}, {2, 3}, {6, 2}, {6, 7}}});
  specs.emplace_back("L7-6", label_names("v", 9),
                     Recipe{{{0, 4}, {2, 3}, {5, 6}, {7, 8}},
                            {{0, 1}, {0, 6}, {1, 5}, {2, 1}, {2, 8}, {3, 7}, {4, 3}, {4, 8},
                             {5, 4}}});
  specs.emplace_back("L7-7", v11,
                     Recipe{{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}},
                            {{0, 4}, {0, 6}, {1, 0}, {1, 5}, {2, 3}, {2, 8}, {3, 7}, {8, 9},
                             {10, 1}}});
  return specs;
}

}  // namespace

const std::vector<LemmaEntry>& lemma_catalog() {
  static const std::vector<LemmaEntry> catalog = [] {
    std::vector<LemmaEntry> c;
    auto add = [&](std::string id, Theorem t, auto fn) {
      c.push_back({std::move(id), t, std::move(fn)});
    };
    add("L1a", Theorem::T0, [](const RotationGraph& g, const FaceStructure&) {
      return detect_low_degree(g, 3, "L1a");
    });
    add("L1b", Theorem::T0, [](const RotationGraph& g, const FaceStructure&) {
      return detect_adjacent_pair(g, 4, "L1b");
    });
    add("L2a-case1-545", Theorem::T0, [](const RotationGraph& g, const FaceStructure& fs) {
      return detect_double_triangle(g, fs, 5, 4, 5, "L2a-case1-545",
                                    {{{0, 1}, {2, 3}}, {{0, 3}, {2, 0}, {2, 1}}});
    });
    add("L2a-case1-454", Theorem::T0, [](const RotationGraph& g, const FaceStructure& fs) {
      return detect_double_triangle(g, fs, 4, 5, 4, "L2a-case1-454",
                                    {{{1, 2}, {0, 3}}, {{0, 2}, {1, 0}, {3, 2}}});
    });
    add("L2a-case2", Theorem::T0, [](const RotationGraph& g, const FaceStructure& fs) {
      return detect_opposite_triangles(g, fs);
    });
    add("L2b", Theorem::T0, [](const RotationGraph& g, const FaceStructure& fs) {
      return detect_triple_triangle(g, fs);
    });
    add("L5a", Theorem::T1, [](const RotationGraph& g, const FaceStructure&) {
      return detect_low_degree(g, 2, "L5a");
    });
    add("L5b", Theorem::T1, [](const RotationGraph& g, const FaceStructure&) {
      return detect_adjacent_pair(g, 3, "L5b");
    });
    add("L6", Theorem::T1, [](const RotationGraph& g, const FaceStructure& fs) {
      return detect_alternating_quad(g, fs);
    });
    for (const auto& spec : make_subgraph_specs())
      add(spec.id, Theorem::T1, [spec](const RotationGraph& g, const FaceStructure&) {
        return spec.detect(g);
      });
    return c;
  }();
  return catalog;
}

std::optional<ConfigMatch> find_config(const RotationGraph& g, Theorem t) {
  FaceStructure fs(g);
  for (const auto& entry : lemma_catalog()) {
    if (entry.theorem != t) continue;
    auto matches = entry.detect(g, fs);
    if (!matches.empty()) return matches.front();
  }
  return std::nullopt;
}

std::vector<ConfigMatch> detect_lemma(const RotationGraph& g, const std::string& lemma_id) {
  FaceStructure fs(g);
  for (const auto& entry : lemma_catalog())
    if (entry.id == lemma_id) return entry.detect(g, fs);
  throw GraphError("detect_lemma: unknown lemma id '" + lemma_id + "'");
}

std::optional<ConfigMatch> find_config_touching(const RotationGraph& g, Theorem t,
                                                const std::vector<int>& vertices) {
  const std::set<int> want(vertices.begin(), vertices.end());
  FaceStructure fs(g);
  for (const auto& entry : lemma_catalog()) {
    if (entry.theorem != t) continue;
    for (const auto& m : entry.detect(g, fs))
      for (int v : m.host)
        if (want.count(v)) return m;
  }
  return std::nullopt;
}

namespace {

Theorem theorem_of_lemma(const std::string& id) {
  for (const auto& entry : lemma_catalog())
    if (entry.id == id) return entry.theorem;
  throw GraphError("unknown lemma id '" + id + "'");
}

}  // namespace

OrientedDecomposition apply_reduction(const RotationGraph& g, const ConfigMatch& match,
                                      const OrientedDecomposition& sub) {
  const auto [d, h] = params_for(theorem_of_lemma(match.lemma));
  if (sub.d != d || sub.h != h)
    throw GraphError("apply_reduction: sub-decomposition has wrong parameters");
  const auto xs = match.removed();
  const auto ind = induce_removing(g, xs);
  if (ind.graph.vertex_count() != g.vertex_count() - static_cast<int>(xs.size()))
    throw GraphError("apply_reduction: matched vertices are not distinct");
  if (auto bad = verify(ind.graph, sub))
    throw GraphError("apply_reduction: sub-decomposition invalid: " + bad->describe());

  const std::set<int> inx(xs.begin(), xs.end());
  auto host_of = [&](int label) { return match.host[label]; };

  // recipe must cover the edges inside X exactly once
  std::map<std::pair<int, int>, int> covered;
  auto norm = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (auto [a, b] : match.recipe.m_edges) ++covered[norm(host_of(a), host_of(b))];
  for (auto [a, b] : match.recipe.d_arcs) ++covered[norm(host_of(a), host_of(b))];
  for (auto& [e, c] : covered) {
    if (c != 1 || !g.adjacent(e.first, e.second))
      throw GraphError("apply_reduction: recipe conflicts with the host edge set");
  }
  for (int x : xs)
    for (int w : g.neighbors(x))
      if (inx.count(w) && x < w && !covered.count({x, w}))
        throw GraphError("apply_reduction: recipe leaves an internal edge uncovered");

  OrientedDecomposition dec;
  dec.d = d;
  dec.h = h;
  for (auto [u, v] : sub.h_edges) {
    auto [a, b] = norm(ind.original[u], ind.original[v]);
    dec.h_edges.emplace_back(a, b);
  }
  for (auto [a, b] : match.recipe.m_edges) {
    auto [x, y] = norm(host_of(a), host_of(b));
    dec.h_edges.emplace_back(x, y);
  }
  for (auto [u, v] : sub.d_arcs) dec.d_arcs.emplace_back(ind.original[u], ind.original[v]);
  std::vector<int> extra_out(g.vertex_count(), 0);
  for (auto [a, b] : match.recipe.d_arcs) {
    dec.d_arcs.emplace_back(host_of(a), host_of(b));
    ++extra_out[host_of(a)];
  }
  for (int x : xs)
    for (int w : g.neighbors(x))
      if (!inx.count(w)) {
        dec.d_arcs.emplace_back(x, w);
        ++extra_out[x];
      }
  for (int x : xs)
    if (extra_out[x] > d)
      throw GraphError("apply_reduction: out-degree budget exceeded at vertex " +
                       std::to_string(x));
  return dec;
}

DecomposeResult decompose_by_reduction(const RotationGraph& g, Theorem t,
                                       const DecomposeOptions& opts) {
  DecomposeResult res;
  {
    StructureReport rep = classify(g);
    const bool member = (t == Theorem::T0) ? !rep.class_g.empty() : !rep.class_h.empty();
    if (!member)
      res.warnings.push_back("input is outside the theorem's graph class; proceeding anyway");
    if (rep.summary.characteristic < 0)
      res.warnings.push_back("embedding has negative characteristic; proceeding anyway");
  }
  const auto [d, h] = params_for(t);

  struct Frame {
    RotationGraph graph;
    ConfigMatch match;  // in this frame's ids
  };
  std::vector<Frame> frames;
  RotationGraph cur = g;
  std::vector<int> to_root(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) to_root[v] = v;

  std::optional<RotationGraph> base;
  while (true) {
    if (cur.vertex_count() <= opts.base_threshold) {
      base = cur;
      break;
    }
    auto match = find_config(cur, t);
    if (!match) {
      if (cur.edge_count() <= opts.oracle_edge_budget) {
        base = cur;
        break;
      }
      res.status = DecomposeStatus::Irreducible;
      res.diagnostic = "no reducible configuration in an instance with " +
                       std::to_string(cur.vertex_count()) + " vertices and " +
                       std::to_string(cur.edge_count()) +
                       " edges, beyond the oracle budget:\n" + serialize_rotation_graph(cur);
      return res;
    }
    ReductionStep step;
    step.lemma = match->lemma;
    step.labels = match->labels;
    for (int v : match->host) step.host.push_back(to_root[v]);
    step.remaining = cur.vertex_count() - static_cast<int>(match->host.size());
    res.trace.push_back(std::move(step));

    auto ind = induce_removing(cur, match->removed());
    frames.push_back({std::move(cur), std::move(*match)});
    std::vector<int> next_to_root(ind.graph.vertex_count());
    for (int v = 0; v < ind.graph.vertex_count(); ++v)
      next_to_root[v] = to_root[ind.original[v]];
    to_root = std::move(next_to_root);
    cur = std::move(ind.graph);
  }

  res.base_vertices = base->vertex_count();
  auto sub = oracle_decide(*base, d, h, {opts.oracle_edge_budget});
  if (!sub) {
    res.status = DecomposeStatus::Nonexistent;
    res.diagnostic = "the oracle proved the base instance with " +
                     std::to_string(base->vertex_count()) +
                     " vertices admits no such decomposition";
    return res;
  }
  OrientedDecomposition dec = std::move(*sub);
  for (auto it = frames.rbegin(); it != frames.rend(); ++it)
    dec = apply_reduction(it->graph, it->match, dec);
  if (auto bad = verify(g, dec))
    throw GraphError("decompose_by_reduction: produced an invalid decomposition: " +
                     bad->describe());
  res.decomposition = std::move(dec);
  return res;
}

}  // namespace decomp

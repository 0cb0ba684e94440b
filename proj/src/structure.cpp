#include "decomp/structure.hpp"

#include <algorithm>

namespace decomp {

namespace {

struct CycleSearch {
  const RotationGraph& g;
  int k;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used;

  CycleSearch(const RotationGraph& g_, int k_) : g(g_), k(k_), used(g_.vertex_count(), false) {}

  void dfs() {
    const int last = path.back();
    if (static_cast<int>(path.size()) == k) {
      // canonical direction: second vertex smaller than last
      if (g.adjacent(last, path[0]) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (int w : g.neighbors(last)) {
      if (w <= path[0] || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      dfs();
      path.pop_back();
      used[w] = false;
    }
  }

  std::vector<std::vector<int>> run() {
    for (int s = 0; s < g.vertex_count(); ++s) {
      path.assign(1, s);
      used.assign(g.vertex_count(), false);
      used[s] = true;
      dfs();
    }
    std::sort(out.begin(), out.end());
    return std::move(out);
  }
};

// neighbors returned by RotationGraph follow rotation order; cycle search
// wants ascending ids for canonical output order
std::vector<std::vector<int>> sorted_adjacency(const RotationGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    adj[v] = g.neighbors(v);
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

}  // namespace

std::vector<std::vector<int>> enumerate_cycles(const RotationGraph& g, int k) {
  if (k < 3 || k > 8) throw GraphError("enumerate_cycles: k must be in 3..8");
  // rebuild with ascending rotations so DFS emits sorted sequences directly
  RotationGraph sorted = RotationGraph::make_plain(sorted_adjacency(g));
  return CycleSearch(sorted, k).run();
}

std::optional<ChordedCycleWitness> find_chorded_cycle(const RotationGraph& g, int k) {
  if (k < 5 || k > 7) throw GraphError("find_chorded_cycle: k must be in 5..7");
  for (const auto& c : enumerate_cycles(g, k)) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (j == i + 1 || (i == 0 && j == k - 1)) continue;  // cycle edges
        if (g.adjacent(c[i], c[j]))
          return ChordedCycleWitness{c, {c[i], c[j]}};
      }
  }
  return std::nullopt;
}

bool has_chord_cycle(const RotationGraph& g, int k) {
  return find_chorded_cycle(g, k).has_value();
}

std::optional<AdjacentFourCyclesWitness> find_adjacent_4cycles(const RotationGraph& g) {
  const auto cycles = enumerate_cycles(g, 4);
  auto edge_set = [](const std::vector<int>& c) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 4; ++i) {
      int u = c[i], v = c[(i + 1) % 4];
      es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  for (size_t a = 0; a < cycles.size(); ++a) {
    const auto ea = edge_set(cycles[a]);
    for (size_t b = a + 1; b < cycles.size(); ++b) {
      const auto eb = edge_set(cycles[b]);
      std::vector<std::pair<int, int>> common;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(common));
      if (!common.empty())
        return AdjacentFourCyclesWitness{cycles[a], cycles[b], common.front()};
    }
  }
  return std::nullopt;
}

bool has_adjacent_4cycles(const RotationGraph& g) {
  return find_adjacent_4cycles(g).has_value();
}

ThreeVertexClass classify_3vertex(const RotationGraph& g, const FaceStructure& fs, int v,
                                  BadnessMode mode) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("classify_3vertex: bad vertex");
  if (g.degree(v) != 3) return ThreeVertexClass::NotThreeVertex;
  const int bad_degree = (mode == BadnessMode::FourFace) ? 4 : 3;
  for (int f : fs.incident_faces(v))
    if (fs.degree(f) == bad_degree) return ThreeVertexClass::Bad;
  return ThreeVertexClass::Good;
}

ThreeVertexClass classify_3vertex(const RotationGraph& g, int v, BadnessMode mode) {
  FaceStructure fs(g);
  return classify_3vertex(g, fs, v, mode);
}

StructureReport classify(const RotationGraph& g) {
  StructureReport r;
  r.summary = embedding_summary(g);
  for (int k = 3; k <= 7; ++k) r.has_cycle[k] = !enumerate_cycles(g, k).empty();
  for (int k = 5; k <= 7; ++k) {
    auto w = find_chorded_cycle(g, k);
    r.chorded_cycle[k] = w.has_value();
    if (w) r.chord_witness[k] = *w;
  }
  r.adjacent_4cycles_witness = find_adjacent_4cycles(g);
  r.adjacent_4cycles = r.adjacent_4cycles_witness.has_value();

  if (!r.chorded_cycle[5]) r.class_g.push_back("no-chord-5");
  if (!r.chorded_cycle[6]) r.class_g.push_back("no-chord-6");
  if (!r.chorded_cycle[7] && !r.adjacent_4cycles)
    r.class_g.push_back("no-chord-7-and-no-adjacent-4cycles");
  for (auto [i, j] : {std::pair{3, 4}, {3, 6}, {4, 6}})
    if (!r.has_cycle[i] && !r.has_cycle[j]) r.class_h.emplace_back(i, j);

  FaceStructure fs(g);
  r.vertices.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    r.vertices[v].degree = g.degree(v);
    r.vertices[v].corner_counts = fs.corner_degree_counts(v);
    r.vertices[v].max_three_face_run = fs.max_three_face_run(v);
  }
  return r;
}

}  // namespace decomp

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "decomp/rotation_graph.hpp"

namespace testutil {

using decomp::RotationGraph;
using Edge = std::pair<int, int>;

// Planar embedding from a straight-line drawing: the rotation at each vertex
// is its neighbors sorted by angle. Coordinates must give a crossing-free
// drawing with distinct angles at every vertex.
RotationGraph embed_points(const std::vector<std::pair<double, double>>& pts,
                           const std::vector<Edge>& edges);

// Arbitrary embedding (ascending rotations) for face-free tests.
RotationGraph plain_graph(int n, const std::vector<Edge>& edges);

// Subdivides every edge once, preserving the embedding (and characteristic).
RotationGraph subdivide(const RotationGraph& g);

// Deletes `count` vertices chosen by the rng.
RotationGraph delete_random_vertices(const RotationGraph& g, int count, std::mt19937& rng);

bool is_connected(int n, const std::vector<Edge>& edges);

// Uniform-ish random connected graph: a random spanning tree plus extra
// distinct random edges.
std::vector<Edge> random_connected_edges(int n, int extra, std::mt19937& rng);

// All connected graphs on exactly n vertices (2 <= n <= 6), one per
// isomorphism class, as edge lists.
std::vector<std::vector<Edge>> connected_graphs_upto_iso(int n);

// --- independent reference implementations -------------------------------

// Every nonempty vertex subset induces a subgraph with a vertex of degree
// <= d (the definition, checked subset by subset; n <= ~20).
bool subset_degenerate(int n, const std::vector<Edge>& edges, int d);

// Tries all 2^m orientations (with pruning) for an acyclic one with maximum
// out-degree <= d.
bool orientation_exists(int n, const std::vector<Edge>& edges, int d);

// Exhaustive (d,h)-decomposition decision built on the two checks above.
bool decomposable_bruteforce(int n, const std::vector<Edge>& edges, int d, int h);

// All simple cycles of length exactly k, found by a vertex-subset scan
// independent of the library's DFS.
int count_cycles_bruteforce(int n, const std::vector<Edge>& edges, int k);

// --- fixed instances -------------------------------------------------------

RotationGraph icosahedron();

// The reducible-configuration gadgets: the configuration's labeled vertices
// first (in label order), padded with pendant leaves so every labeled vertex
// has exactly the degree the detector wants. core_size reports how many
// labeled vertices lead the id range.
struct Gadget {
  RotationGraph graph;
  int core_size = 0;
};
Gadget lemma_gadget(const std::string& lemma_id);
const std::vector<std::string>& all_lemma_ids();

}  // namespace testutil

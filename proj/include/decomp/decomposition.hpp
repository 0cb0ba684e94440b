#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomp/rotation_graph.hpp"

namespace decomp {

// A candidate (d, h)-decomposition of a graph: a spanning subgraph H given by
// its edges, plus an orientation of the remaining edges. Valid when H and the
// arcs partition E(G), H has maximum degree <= h, and the arcs form an
// acyclic orientation with maximum out-degree <= d.
struct OrientedDecomposition {
  int d = 0;
  int h = 0;
  std::vector<std::pair<int, int>> h_edges;  // unordered, stored u < v
  std::vector<std::pair<int, int>> d_arcs;   // (from, to)
};

enum class ViolationKind {
  UnknownEdge,     // references an edge not in G (or a bad vertex id)
  UncoveredEdge,
  DoublyCoveredEdge,
  OverDegreeVertex,  // degree in H exceeds h
  DirectedCycle,
  OverOutDegree,
};

struct Violation {
  ViolationKind kind;
  std::vector<int> vertices;        // witness: endpoints, vertex, or cycle
  std::string describe() const;
};

// First failing check in the order: unknown edges, exact edge partition,
// H degree bound, acyclicity, out-degree bound. nullopt means valid.
std::optional<Violation> verify(const RotationGraph& g, const OrientedDecomposition& dec);

// Min-degree peel. order lists the vertices in reverse removal order, so
// every vertex has at most `value` neighbors earlier in the list; ties in
// the peel go to the smallest vertex id.
struct DegeneracyCertificate {
  std::vector<int> order;
  int value = 0;
};
DegeneracyCertificate degeneracy_order(const RotationGraph& g);

// Orients every edge from its later-listed endpoint to its earlier-listed
// one; acyclic by construction. On a degeneracy certificate order the
// maximum out-degree equals the certificate value.
std::vector<std::pair<int, int>> orientation_from_order(const RotationGraph& g,
                                                        const std::vector<int>& order);

struct OracleOptions {
  int edge_budget = 26;
};

// Exhaustive decision procedure for small graphs, h <= 2. Enumerates the
// candidate subgraphs H with max degree <= h over the sorted edge list in
// depth-first inclusion order (so the empty H is tried first) and takes the
// first one whose remainder is d-degenerate; the witness orientation comes
// from the degeneracy order. Returns nullopt when no decomposition exists.
// Throws BudgetError when |E| exceeds the edge budget and GraphError for
// h > 2 or d < 0.
std::optional<OrientedDecomposition> oracle_decide(const RotationGraph& g, int d, int h,
                                                   const OracleOptions& opts = {});

// (d+1)-coloring from a verified decomposition with h <= 1: colors in
// reverse topological order of the arcs, avoiding the colors of the at most
// d out-neighbors; each color class induces max degree <= 1 (a matching
// inside H), and is independent when h = 0.
struct DefectiveColoring {
  std::vector<int> color;
  int colors_used = 0;
};
DefectiveColoring defective_coloring(const RotationGraph& g, const OrientedDecomposition& dec);

// Text format:
//   DECOMP 1
//   <d> <h>
//   H: u-v u-v ...
//   D: u>v u>v ...
// '#' starts a comment; H and D lines may be empty after the tag.
OrientedDecomposition parse_decomposition(const std::string& text);
std::string serialize_decomposition(const OrientedDecomposition& dec);

}  // namespace decomp

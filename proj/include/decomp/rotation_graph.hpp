#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace decomp {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One entry of a vertex's rotation: the neighbor reached by that dart and the
// edge signature (-1 marks an orientation-reversing edge of the scheme).
struct DartEnd {
  int neighbor = -1;
  int sign = 1;
  bool operator==(const DartEnd&) const = default;
};

// A simple graph with a signed rotation system: for every vertex, a cyclic
// order of its incident edge ends. Vertex ids are dense 0..n-1. Darts are
// numbered per (vertex, rotation slot); the dart at (v, s) points from v to
// rotation(v)[s].neighbor. Both darts of an edge carry the same signature.
class RotationGraph {
 public:
  RotationGraph() = default;

  // Validates simplicity (no loops, no parallel edges), symmetric adjacency
  // and matching signatures; throws GraphError otherwise.
  static RotationGraph make(std::vector<std::vector<DartEnd>> rotations);
  static RotationGraph make_plain(std::vector<std::vector<int>> rotations);

  // Builds the rotation system whose face walks are exactly the given closed
  // walks. The walks must be consistently oriented: every directed edge u->v
  // appears exactly once across all walks. All signatures are +1.
  static RotationGraph from_faces(int vertex_count,
                                  const std::vector<std::vector<int>>& faces);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<DartEnd>& rotation(int v) const { return rot_[v]; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  int dart_count() const { return static_cast<int>(head_.size()); }
  int dart_at(int v, int slot) const { return offset_[v] + slot; }
  int tail(int dart) const { return tail_[dart]; }
  int head(int dart) const { return head_[dart]; }
  int sign(int dart) const { return sign_[dart]; }
  int reverse(int dart) const { return reverse_[dart]; }
  int slot(int dart) const { return dart - offset_[tail_[dart]]; }
  // Cyclic successor/predecessor within the rotation at tail(dart).
  int rotation_succ(int dart) const;
  int rotation_pred(int dart) const;

  bool operator==(const RotationGraph& o) const { return rot_ == o.rot_; }

 private:
  std::vector<std::vector<DartEnd>> rot_;
  std::vector<int> offset_;            // per vertex, first dart id
  std::vector<int> tail_, head_, sign_, reverse_;
  void index();
};

// Text format:
//   ROTSYS 1
//   <n> <m>
//   u: v1[-] v2[-] ...        (one line per vertex, rotation order; a
//                              trailing '-' marks signature -1)
// '#' starts a comment. Throws ParseError (with 1-based line) on malformed
// input, dangling neighbor references, or count mismatches, GraphError on
// invalid rotation systems.
RotationGraph parse_rotation_graph(const std::string& text);
std::string serialize_rotation_graph(const RotationGraph& g);

// Induced embedded subgraph on V(g) minus xs: surviving vertices are
// renumbered densely in increasing order of their old ids; rotations keep
// their cyclic order with deleted darts dropped. original[new_id] = old id.
struct InducedSubgraph {
  RotationGraph graph;
  std::vector<int> original;
};
InducedSubgraph induce_removing(const RotationGraph& g, const std::vector<int>& xs);
RotationGraph remove_vertices(const RotationGraph& g, const std::vector<int>& xs);

// Deletes the given edges (order within surviving rotations preserved).
RotationGraph remove_edges(const RotationGraph& g,
                           const std::vector<std::pair<int, int>>& es);

}  // namespace decomp

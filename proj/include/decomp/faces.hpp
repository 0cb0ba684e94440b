#pragma once

#include <map>
#include <vector>

#include "decomp/rotation_graph.hpp"

namespace decomp {

// A face boundary walk, as the sequence of darts traversed. The walk visits
// vertex tail(darts[i]) at step i; its degree is the walk length, so an edge
// met from both sides (a bridge) counts twice.
struct Face {
  std::vector<int> darts;
  int degree() const { return static_cast<int>(darts.size()); }
};

struct EmbeddingSummary {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int characteristic = 0;
};

// Face structure of a signed rotation system.
//
// Tracing convention: a traversal state is (dart t, sense s). Stepping from
// (t, s): let s' = s * sign(t); at head(t) the walk continues with the
// rotation successor of reverse(t) if s' = +1, the predecessor if s' = -1,
// giving state (t', s'). Orbits of this map come in mirror pairs under
// (t, s) -> (reverse(t), -s * sign(t)); each pair is one face, represented
// by the orbit containing the smallest state (darts ordered by id, sense +1
// before -1). Faces are numbered in that order, and every orbit step starts
// from its smallest state, so the whole structure is deterministic.
//
// Corner c of vertex v (between rotation slots c and c+1 mod degree) lies on
// the face of state (dart_at(v, (c+1) mod degree), +1). Isolated vertices
// have no corners and bound no face.
class FaceStructure {
 public:
  explicit FaceStructure(const RotationGraph& g);

  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  int degree(int f) const { return faces_[f].degree(); }
  // Boundary vertices in walk order (with repetitions where the walk
  // revisits a vertex).
  const std::vector<int>& boundary_vertices(int f) const { return face_vertices_[f]; }
  // Vertex degrees of the boundary, sorted ascending.
  std::vector<int> sorted_profile(int f) const;

  int face_at_corner(int v, int corner) const { return corner_face_[v][corner]; }
  // One face per corner of v, in rotation order (multiplicity preserved).
  const std::vector<int>& incident_faces(int v) const { return corner_face_[v]; }
  // Corner counts by incident face degree: key i -> number of corners of v
  // lying on an i-face.
  std::map<int, int> corner_degree_counts(int v) const;
  // Longest cyclic run of consecutive corners of v on 3-faces.
  int max_three_face_run(int v) const;

  // Face on the other side of the edge at boundary step pos of f. When both
  // sides of that edge belong to f, returns f itself.
  int other_side(int f, int pos) const;

 private:
  const RotationGraph* g_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> face_states_;  // traversal states per walk step
  std::vector<std::vector<int>> face_vertices_;
  std::vector<int> state_face_;                // state -> face id (mirror-collapsed)
  std::vector<std::vector<int>> corner_face_;  // [v][corner]
};

FaceStructure trace_faces(const RotationGraph& g);
EmbeddingSummary embedding_summary(const RotationGraph& g);
// V - E + F with F from tracing; isolated vertices contribute no face.
int euler_characteristic(const RotationGraph& g);

}  // namespace decomp

#include "decomp/faces.hpp"

#include <algorithm>

namespace decomp {

namespace {

// state id: 2 * dart + (0 for sense +1, 1 for sense -1)
inline int state_next(const RotationGraph& g, int state) {
  const int t = state >> 1;
  const int s = (state & 1) ? -1 : 1;
  const int s2 = s * g.sign(t);
  const int rd = g.reverse(t);
  const int u = (s2 > 0) ? g.rotation_succ(rd) : g.rotation_pred(rd);
  return (u << 1) | (s2 > 0 ? 0 : 1);
}

inline int state_mirror(const RotationGraph& g, int state) {
  const int t = state >> 1;
  const int s = (state & 1) ? -1 : 1;
  const int s2 = -s * g.sign(t);
  return (g.reverse(t) << 1) | (s2 > 0 ? 0 : 1);
}

}  // namespace

FaceStructure::FaceStructure(const RotationGraph& g) : g_(&g) {
  const int ns = 2 * g.dart_count();
  std::vector<int> orbit_of(ns, -1);
  std::vector<int> orbit_min;
  for (int s0 = 0; s0 < ns; ++s0) {
    if (orbit_of[s0] >= 0) continue;
    const int id = static_cast<int>(orbit_min.size());
    orbit_min.push_back(s0);
    int s = s0;
    do {
      orbit_of[s] = id;
      s = state_next(g, s);
    } while (s != s0);
  }

  // Pair each orbit with its mirror; the member containing the smaller
  // minimal state represents the face.
  const int no = static_cast<int>(orbit_min.size());
  std::vector<int> face_of_orbit(no, -1);
  for (int o = 0; o < no; ++o) {
    if (face_of_orbit[o] >= 0) continue;
    const int mo = orbit_of[state_mirror(g, orbit_min[o])];
    if (mo == o || face_of_orbit[mo] >= 0)
      throw GraphError("face tracing: inconsistent mirror pairing");
    const int f = static_cast<int>(faces_.size());
    face_of_orbit[o] = face_of_orbit[mo] = f;
    Face face;
    std::vector<int> states;
    int s = orbit_min[o];
    do {
      face.darts.push_back(s >> 1);
      states.push_back(s);
      s = state_next(g, s);
    } while (s != orbit_min[o]);
    faces_.push_back(std::move(face));
    face_states_.push_back(std::move(states));
  }

  state_face_.resize(ns);
  for (int s = 0; s < ns; ++s) state_face_[s] = face_of_orbit[orbit_of[s]];

  face_vertices_.resize(faces_.size());
  for (size_t f = 0; f < faces_.size(); ++f)
    for (int d : faces_[f].darts) face_vertices_[f].push_back(g.tail(d));

  corner_face_.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    corner_face_[v].resize(d);
    for (int c = 0; c < d; ++c)
      corner_face_[v][c] = state_face_[g.dart_at(v, (c + 1) % d) << 1];
  }
}

std::vector<int> FaceStructure::sorted_profile(int f) const {
  std::vector<int> p;
  p.reserve(face_vertices_[f].size());
  for (int v : face_vertices_[f]) p.push_back(g_->degree(v));
  std::sort(p.begin(), p.end());
  return p;
}

std::map<int, int> FaceStructure::corner_degree_counts(int v) const {
  std::map<int, int> counts;
  for (int f : corner_face_[v]) ++counts[degree(f)];
  return counts;
}

int FaceStructure::max_three_face_run(int v) const {
  const auto& cf = corner_face_[v];
  const int d = static_cast<int>(cf.size());
  if (d == 0) return 0;
  bool all = true;
  for (int f : cf)
    if (degree(f) != 3) { all = false; break; }
  if (all) return d;
  int best = 0, run = 0;
  for (int i = 0; i < 2 * d; ++i) {
    if (degree(cf[i % d]) == 3)
      best = std::max(best, ++run);
    else
      run = 0;
  }
  return best;
}

int FaceStructure::other_side(int f, int pos) const {
  // Of the four states over an edge, the pair {state, mirror(state)} covers
  // one side; flipping the sense lands in the pair covering the other side.
  return state_face_[face_states_[f][pos] ^ 1];
}

FaceStructure trace_faces(const RotationGraph& g) { return FaceStructure(g); }

EmbeddingSummary embedding_summary(const RotationGraph& g) {
  FaceStructure fs(g);
  EmbeddingSummary s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.faces = fs.face_count();
  s.characteristic = s.vertices - s.edges + s.faces;
  return s;
}

int euler_characteristic(const RotationGraph& g) {
  return embedding_summary(g).characteristic;
}

}  // namespace decomp

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomp/faces.hpp"
#include "decomp/rotation_graph.hpp"

namespace decomp {

// All simple cycles of length exactly k (3 <= k <= 8), each as its canonical
// vertex sequence: smallest vertex first, then the direction whose second
// vertex is smaller than the last. The list is sorted lexicographically.
std::vector<std::vector<int>> enumerate_cycles(const RotationGraph& g, int k);

struct ChordedCycleWitness {
  std::vector<int> cycle;
  std::pair<int, int> chord;
};
// A k-cycle (k in {5, 6, 7}) together with a chord, if any exists.
std::optional<ChordedCycleWitness> find_chorded_cycle(const RotationGraph& g, int k);
bool has_chord_cycle(const RotationGraph& g, int k);

struct AdjacentFourCyclesWitness {
  std::vector<int> first, second;
  std::pair<int, int> shared_edge;
};
// Two distinct 4-cycles sharing an edge, if present.
std::optional<AdjacentFourCyclesWitness> find_adjacent_4cycles(const RotationGraph& g);
bool has_adjacent_4cycles(const RotationGraph& g);

enum class BadnessMode { FourFace, ThreeFace };
enum class ThreeVertexClass { NotThreeVertex, Good, Bad };
// A degree-3 vertex is bad when some corner of it lies on a 4-face
// (FourFace mode) or on a 3-face (ThreeFace mode), good otherwise.
ThreeVertexClass classify_3vertex(const RotationGraph& g, const FaceStructure& fs, int v,
                                  BadnessMode mode);
ThreeVertexClass classify_3vertex(const RotationGraph& g, int v, BadnessMode mode);

struct VertexProfile {
  int degree = 0;
  std::map<int, int> corner_counts;  // incident face degree -> corner count
  int max_three_face_run = 0;
};

struct StructureReport {
  EmbeddingSummary summary;
  std::map<int, bool> has_cycle;        // k = 3..7
  std::map<int, bool> chorded_cycle;    // k = 5, 6, 7
  std::map<int, ChordedCycleWitness> chord_witness;
  bool adjacent_4cycles = false;
  std::optional<AdjacentFourCyclesWitness> adjacent_4cycles_witness;
  // Satisfied membership conditions for the two target families.
  std::vector<std::string> class_g;               // of: no-chord-5, no-chord-6,
                                                  // no-chord-7-and-no-adjacent-4cycles
  std::vector<std::pair<int, int>> class_h;       // of: (3,4), (3,6), (4,6)
  std::vector<VertexProfile> vertices;
};

StructureReport classify(const RotationGraph& g);

}  // namespace decomp

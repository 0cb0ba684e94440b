#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/faces.hpp"
#include "decomp/rotation_graph.hpp"

namespace decomp {

// T0 targets (3,1)-decompositions, T1 targets (2,1)-decompositions.
enum class Theorem { T0, T1 };
std::pair<int, int> params_for(Theorem t);  // (d, h)

// How a matched configuration extends a decomposition of G - X: edges/arcs
// given as label index pairs, plus (implicitly) one arc from every matched
// vertex to each of its neighbors outside X.
struct Recipe {
  std::vector<std::pair<int, int>> m_edges;
  std::vector<std::pair<int, int>> d_arcs;
};

struct ConfigMatch {
  std::string lemma;
  std::vector<std::string> labels;  // label names, fixed per lemma
  std::vector<int> host;            // host[i] = image of labels[i]; injective
  Recipe recipe;
  std::vector<int> removed() const {
    auto xs = host;
    std::sort(xs.begin(), xs.end());
    return xs;
  }
};

struct LemmaEntry {
  std::string id;
  Theorem theorem;
  // all matches, in a fixed deterministic order (host tuples ascending)
  std::function<std::vector<ConfigMatch>(const RotationGraph&, const FaceStructure&)> detect;
};

// T0: L1a, L1b, L2a-case1-545, L2a-case1-454, L2a-case2, L2b.
// T1: L5a, L5b, L6, L7-1 .. L7-7.
const std::vector<LemmaEntry>& lemma_catalog();

// First match: lemma ids in catalog order, candidates per lemma in the
// detector's order.
std::optional<ConfigMatch> find_config(const RotationGraph& g, Theorem t);
// All matches of one lemma (empty when the id is unknown: GraphError).
std::vector<ConfigMatch> detect_lemma(const RotationGraph& g, const std::string& lemma_id);
// First match (same scan order) whose removed set meets `vertices`.
std::optional<ConfigMatch> find_config_touching(const RotationGraph& g, Theorem t,
                                                const std::vector<int>& vertices);

// Extends a verified decomposition of G - X (in the dense ids produced by
// remove_vertices) to one of G: keeps the sub-decomposition (ids mapped
// back), adds the recipe's edges and arcs over the matched vertices, and
// orients every edge leaving X outward. Throws GraphError when the
// sub-decomposition does not verify, has the wrong parameters, the recipe
// does not exactly cover the edges inside X, or an out-degree budget would
// be exceeded (all of which indicate a detector bug).
OrientedDecomposition apply_reduction(const RotationGraph& g, const ConfigMatch& match,
                                      const OrientedDecomposition& sub);

struct ReductionStep {
  std::string lemma;
  std::vector<std::string> labels;
  std::vector<int> host;  // ids in the graph originally handed in
  int remaining = 0;      // vertex count after this removal
};

enum class DecomposeStatus {
  Decomposed,
  Nonexistent,   // the base instance provably has no such decomposition
  Irreducible,   // no configuration found and instance too large for the oracle
};

struct DecomposeOptions {
  int base_threshold = 10;  // hand instances this small straight to the oracle
  int oracle_edge_budget = 26;
};

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::Decomposed;
  std::optional<OrientedDecomposition> decomposition;
  std::vector<ReductionStep> trace;
  int base_vertices = -1;  // size of the instance the oracle decided
  std::string diagnostic;  // set for Irreducible / Nonexistent
  std::vector<std::string> warnings;
};

// Peels matched configurations until the instance is small enough for the
// oracle, then extends the base decomposition back up. Warns (in
// result.warnings) when the input is outside the theorem's graph class or
// has negative characteristic; the reductions themselves are sound on any
// host, so the result still verifies whenever one is produced.
DecomposeResult decompose_by_reduction(const RotationGraph& g, Theorem t,
                                       const DecomposeOptions& opts = {});

}  // namespace decomp

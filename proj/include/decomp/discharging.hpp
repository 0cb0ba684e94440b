#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decomp/faces.hpp"
#include "decomp/rational.hpp"
#include "decomp/reducer.hpp"
#include "decomp/rotation_graph.hpp"

namespace decomp {

enum class ElementKind { Vertex, Face };

struct Element {
  ElementKind kind = ElementKind::Vertex;
  int id = 0;
  bool operator==(const Element&) const = default;
  bool operator<(const Element& o) const {
    return kind != o.kind ? kind < o.kind : id < o.id;
  }
};
std::string to_string(Element e);  // "v3" / "f1"

struct Transfer {
  Element from, to;
  Rational amount;
  std::string rule;
};

// Charges over vertices and faces. final(x) = initial(x) - sent(x) + received(x);
// the total is invariant under transfers and equals -4 * characteristic.
struct ChargeLedger {
  std::vector<Rational> vertex_initial, face_initial;
  std::vector<Transfer> transfers;
  std::vector<Rational> vertex_final, face_final;

  const Rational& initial(Element e) const {
    return e.kind == ElementKind::Vertex ? vertex_initial[e.id] : face_initial[e.id];
  }
  const Rational& final_charge(Element e) const {
    return e.kind == ElementKind::Vertex ? vertex_final[e.id] : face_final[e.id];
  }
  Rational total_initial() const;
  Rational total_final() const;
};

// The five rule tables. T0_* serve the (3,1) theorem, T1_* the (2,1) one:
//   T0_13  5-vertices pay 3-faces by profile (1/3, 1/2, 5/12), 6+-vertices
//          pay 3-faces 7/12, 5+-faces pay every corner 11/60.
//   T0_2   the finer split: (4,5,6) vs (4,5,7+) faces (5/12 vs 61/150),
//          6-vertices 7/12, 7+-vertices 89/150, 5-faces 11/60, 6+-faces 49/150.
//   T1_1   5+-faces pay each 3-vertex corner 1/3.
//   T1_2   5+-faces pay good 3-vertices 1/3, bad ones 1/2 (bad: on a 4-face).
//   T1_3   5+-faces pay good 3-vertices 1/3, bad ones 1/2 (bad: on a 3-face),
//          and pay each 3-face 1/3 per shared edge.
enum class RulesetId { T0_13, T0_2, T1_1, T1_2, T1_3 };

std::string to_string(RulesetId id);
std::optional<RulesetId> ruleset_from_string(const std::string& s);
const std::vector<RulesetId>& all_rulesets();
Theorem theorem_of(RulesetId id);
// The distinct amounts appearing in a rule table, in the order the rules
// state them.
const std::vector<Rational>& rule_amounts(RulesetId id);

// mu(x) = d(x) - 4 for every vertex and face; no transfers.
ChargeLedger initial_charges(const RotationGraph& g);
ChargeLedger initial_charges(const RotationGraph& g, const FaceStructure& fs);

// Runs one rule table. Vertex-face incidence counts once per corner, and the
// face-to-face rule of T1_3 counts once per shared edge.
ChargeLedger apply_rules(const RotationGraph& g, RulesetId id);
ChargeLedger apply_rules(const RotationGraph& g, const FaceStructure& fs, RulesetId id);

struct NegativeElement {
  Element element;
  Rational final;
  std::vector<Transfer> transfers;  // every transfer touching the element
  std::optional<ConfigMatch> explained_by;
};

// What the discharging argument expects of a class member: conservation
// always; every element nonnegative (property1); and, since the total is
// -4 * characteristic <= 0, at least one positive element (property2) yields
// the contradiction. Negative elements are matched against the reducible
// configurations touching them; when every charge is exactly zero the
// whole-graph search stands in for the endgame case analysis.
struct AuditReport {
  RulesetId ruleset = RulesetId::T0_13;
  EmbeddingSummary summary;
  ChargeLedger ledger;
  Rational total_initial, total_final;
  bool conservation_ok = false;
  bool in_class = false;
  std::vector<NegativeElement> negatives;
  bool property1 = false;
  bool property2 = false;
  std::optional<ConfigMatch> endgame;
};

AuditReport audit(const RotationGraph& g, RulesetId id);

}  // namespace decomp

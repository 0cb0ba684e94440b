#include "decomp/discharging.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "decomp/structure.hpp"

namespace decomp {

std::string to_string(Element e) {
  return (e.kind == ElementKind::Vertex ? "v" : "f") + std::to_string(e.id);
}

Rational ChargeLedger::total_initial() const {
  Rational t;
  for (const auto& r : vertex_initial) t += r;
  for (const auto& r : face_initial) t += r;
  return t;
}

Rational ChargeLedger::total_final() const {
  Rational t;
  for (const auto& r : vertex_final) t += r;
  for (const auto& r : face_final) t += r;
  return t;
}

std::string to_string(RulesetId id) {
  switch (id) {
    case RulesetId::T0_13: return "T0_13";
    case RulesetId::T0_2: return "T0_2";
    case RulesetId::T1_1: return "T1_1";
    case RulesetId::T1_2: return "T1_2";
    default: return "T1_3";
  }
}

std::optional<RulesetId> ruleset_from_string(const std::string& s) {
  for (RulesetId id : all_rulesets())
    if (to_string(id) == s) return id;
  return std::nullopt;
}

const std::vector<RulesetId>& all_rulesets() {
  static const std::vector<RulesetId> ids = {RulesetId::T0_13, RulesetId::T0_2,
                                             RulesetId::T1_1, RulesetId::T1_2,
                                             RulesetId::T1_3};
  return ids;
}

Theorem theorem_of(RulesetId id) {
  return (id == RulesetId::T0_13 || id == RulesetId::T0_2) ? Theorem::T0 : Theorem::T1;
}

const std::vector<Rational>& rule_amounts(RulesetId id) {
  static const std::vector<Rational> t0_13 = {{1, 3}, {1, 2}, {5, 12}, {7, 12}, {11, 60}};
  static const std::vector<Rational> t0_2 = {{1, 3},   {1, 2},   {5, 12},  {61, 150},
                                             {7, 12},  {89, 150}, {11, 60}, {49, 150}};
  static const std::vector<Rational> t1_1 = {{1, 3}};
  static const std::vector<Rational> t1_23 = {{1, 3}, {1, 2}};
  switch (id) {
    case RulesetId::T0_13: return t0_13;
    case RulesetId::T0_2: return t0_2;
    case RulesetId::T1_1: return t1_1;
    default: return t1_23;
  }
}

ChargeLedger initial_charges(const RotationGraph& g) {
  return initial_charges(g, FaceStructure(g));
}

ChargeLedger initial_charges(const RotationGraph& g, const FaceStructure& fs) {
  ChargeLedger led;
  for (int v = 0; v < g.vertex_count(); ++v)
    led.vertex_initial.emplace_back(g.degree(v) - 4);
  for (int f = 0; f < fs.face_count(); ++f)
    led.face_initial.emplace_back(fs.degree(f) - 4);
  led.vertex_final = led.vertex_initial;
  led.face_final = led.face_initial;
  return led;
}

namespace {

struct Engine {
  const RotationGraph& g;
  const FaceStructure& fs;
  ChargeLedger led;

  Engine(const RotationGraph& g_, const FaceStructure& fs_)
      : g(g_), fs(fs_), led(initial_charges(g_, fs_)) {}

  void send(Element from, Element to, Rational amount, const std::string& rule) {
    if (from.kind == ElementKind::Vertex)
      led.vertex_final[from.id] -= amount;
    else
      led.face_final[from.id] -= amount;
    if (to.kind == ElementKind::Vertex)
      led.vertex_final[to.id] += amount;
    else
      led.face_final[to.id] += amount;
    led.transfers.push_back({from, to, amount, rule});
  }

  // triangle profile at a corner of v; empty when the face is not a 3-face
  std::vector<int> corner_triangle_profile(int v, int c) const {
    const int f = fs.face_at_corner(v, c);
    if (fs.degree(f) != 3) return {};
    return fs.sorted_profile(f);
  }

  // 5-vertex payments to incident 3-faces by profile; shared by T0_13/T0_2
  template <typename AmountFn>
  void five_vertex_rule(const AmountFn& amount_for) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 5) continue;
      for (int c = 0; c < 5; ++c) {
        auto prof = corner_triangle_profile(v, c);
        if (prof.empty()) continue;
        if (auto amt = amount_for(prof))
          send({ElementKind::Vertex, v}, {ElementKind::Face, fs.face_at_corner(v, c)},
               *amt, "R1");
      }
    }
  }

  void big_vertex_rule(int min_deg, bool exact, Rational amount, const std::string& rule) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      if (exact ? d != min_deg : d < min_deg) continue;
      for (int c = 0; c < d; ++c) {
        const int f = fs.face_at_corner(v, c);
        if (fs.degree(f) == 3)
          send({ElementKind::Vertex, v}, {ElementKind::Face, f}, amount, rule);
      }
    }
  }

  void face_to_all_corners(int min_deg, bool exact, Rational amount,
                           const std::string& rule) {
    for (int f = 0; f < fs.face_count(); ++f) {
      const int d = fs.degree(f);
      if (exact ? d != min_deg : d < min_deg) continue;
      for (int v : fs.boundary_vertices(f))
        send({ElementKind::Face, f}, {ElementKind::Vertex, v}, amount, rule);
    }
  }

  void face_to_3vertices(std::optional<BadnessMode> badness) {
    for (int f = 0; f < fs.face_count(); ++f) {
      if (fs.degree(f) < 5) continue;
      for (int v : fs.boundary_vertices(f)) {
        if (g.degree(v) != 3) continue;
        Rational amount{1, 3};
        if (badness && classify_3vertex(g, fs, v, *badness) == ThreeVertexClass::Bad)
          amount = {1, 2};
        send({ElementKind::Face, f}, {ElementKind::Vertex, v}, amount, "R1");
      }
    }
  }

  void face_to_3faces() {
    for (int f = 0; f < fs.face_count(); ++f) {
      if (fs.degree(f) < 5) continue;
      for (int pos = 0; pos < fs.degree(f); ++pos) {
        const int f2 = fs.other_side(f, pos);
        if (fs.degree(f2) == 3)
          send({ElementKind::Face, f}, {ElementKind::Face, f2}, {1, 3}, "R1");
      }
    }
  }
};

bool all_at_least(const std::vector<int>& prof, int d) {
  return std::all_of(prof.begin(), prof.end(), [d](int x) { return x >= d; });
}

}  // namespace

ChargeLedger apply_rules(const RotationGraph& g, RulesetId id) {
  return apply_rules(g, FaceStructure(g), id);
}

ChargeLedger apply_rules(const RotationGraph& g, const FaceStructure& fs, RulesetId id) {
  Engine e(g, fs);
  switch (id) {
    case RulesetId::T0_13:
      e.five_vertex_rule([](const std::vector<int>& p) -> std::optional<Rational> {
        if (all_at_least(p, 5)) return Rational{1, 3};
        if (p == std::vector<int>{4, 5, 5}) return Rational{1, 2};
        if (p[0] == 4 && p[1] == 5 && p[2] >= 6) return Rational{5, 12};
        return std::nullopt;
      });
      e.big_vertex_rule(6, false, {7, 12}, "R2");
      e.face_to_all_corners(5, false, {11, 60}, "R3");
      break;
    case RulesetId::T0_2:
      e.five_vertex_rule([](const std::vector<int>& p) -> std::optional<Rational> {
        if (all_at_least(p, 5)) return Rational{1, 3};
        if (p == std::vector<int>{4, 5, 5}) return Rational{1, 2};
        if (p == std::vector<int>{4, 5, 6}) return Rational{5, 12};
        if (p[0] == 4 && p[1] == 5 && p[2] >= 7) return Rational{61, 150};
        return std::nullopt;
      });
      e.big_vertex_rule(6, true, {7, 12}, "R2");
      e.big_vertex_rule(7, false, {89, 150}, "R3");
      e.face_to_all_corners(5, true, {11, 60}, "R4");
      e.face_to_all_corners(6, false, {49, 150}, "R5");
      break;
    case RulesetId::T1_1:
      e.face_to_3vertices(std::nullopt);
      break;
    case RulesetId::T1_2:
      e.face_to_3vertices(BadnessMode::FourFace);
      break;
    case RulesetId::T1_3:
      e.face_to_3vertices(BadnessMode::ThreeFace);
      e.face_to_3faces();
      break;
  }
  return e.led;
}

AuditReport audit(const RotationGraph& g, RulesetId id) {
  FaceStructure fs(g);
  AuditReport rep;
  rep.ruleset = id;
  rep.summary = embedding_summary(g);
  rep.ledger = apply_rules(g, fs, id);
  rep.total_initial = rep.ledger.total_initial();
  rep.total_final = rep.ledger.total_final();
  rep.conservation_ok = rep.total_initial == rep.total_final &&
                        rep.total_initial == Rational(-4 * rep.summary.characteristic);

  const Theorem t = theorem_of(id);
  {
    StructureReport sr = classify(g);
    bool cond = false;
    switch (id) {
      case RulesetId::T0_13:
        cond = std::count(sr.class_g.begin(), sr.class_g.end(), "no-chord-5") ||
               std::count(sr.class_g.begin(), sr.class_g.end(),
                          "no-chord-7-and-no-adjacent-4cycles");
        break;
      case RulesetId::T0_2:
        cond = std::count(sr.class_g.begin(), sr.class_g.end(), "no-chord-6");
        break;
      case RulesetId::T1_1:
        cond = std::count(sr.class_h.begin(), sr.class_h.end(), std::pair{3, 4});
        break;
      case RulesetId::T1_2:
        cond = std::count(sr.class_h.begin(), sr.class_h.end(), std::pair{3, 6});
        break;
      case RulesetId::T1_3:
        cond = std::count(sr.class_h.begin(), sr.class_h.end(), std::pair{4, 6});
        break;
    }
    rep.in_class = cond && rep.summary.characteristic >= 0;
  }

  std::vector<Element> all;
  for (int v = 0; v < g.vertex_count(); ++v) all.push_back({ElementKind::Vertex, v});
  for (int f = 0; f < fs.face_count(); ++f) all.push_back({ElementKind::Face, f});

  bool any_positive = false;
  for (Element e : all) {
    const Rational& fin = rep.ledger.final_charge(e);
    if (fin > Rational(0)) any_positive = true;
    if (fin >= Rational(0)) continue;
    NegativeElement neg;
    neg.element = e;
    neg.final = fin;
    for (const auto& tr : rep.ledger.transfers)
      if (tr.from == e || tr.to == e) neg.transfers.push_back(tr);
    std::vector<int> touch;
    if (e.kind == ElementKind::Vertex) {
      touch = {e.id};
    } else {
      auto bd = fs.boundary_vertices(e.id);
      std::set<int> uniq(bd.begin(), bd.end());
      touch.assign(uniq.begin(), uniq.end());
    }
    neg.explained_by = find_config_touching(g, t, touch);
    rep.negatives.push_back(std::move(neg));
  }
  rep.property1 = rep.negatives.empty();
  rep.property2 = any_positive;
  if (rep.property1 && !rep.property2) rep.endgame = find_config(g, t);
  return rep;
}

}  // namespace decomp

#include "decomp/report_json.hpp"

#include <cstdint>

namespace decomp {

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
  return out;
}

Json make_report(const std::string& command, const std::string& input_bytes, Json payload) {
  Json rep;
  rep["v"] = 1;
  rep["command"] = command;
  rep["input_digest"] = input_digest(input_bytes);
  rep["result"] = std::move(payload);
  return rep;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const EmbeddingSummary& s) {
  Json j;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["faces"] = s.faces;
  j["characteristic"] = s.characteristic;
  return j;
}

Json to_json(const StructureReport& r) {
  Json j;
  j["embedding"] = to_json(r.summary);
  Json cyc;
  for (const auto& [k, v] : r.has_cycle) cyc[std::to_string(k)] = v;
  j["has_cycle"] = std::move(cyc);
  Json chord;
  for (const auto& [k, v] : r.chorded_cycle) {
    Json entry;
    entry["present"] = v;
    if (v) {
      const auto& w = r.chord_witness.at(k);
      entry["cycle"] = w.cycle;
      entry["chord"] = Json::array({w.chord.first, w.chord.second});
    }
    chord[std::to_string(k)] = std::move(entry);
  }
  j["chorded_cycle"] = std::move(chord);
  j["adjacent_4cycles"] = r.adjacent_4cycles;
  if (r.adjacent_4cycles_witness) {
    const auto& w = *r.adjacent_4cycles_witness;
    Json entry;
    entry["first"] = w.first;
    entry["second"] = w.second;
    entry["shared_edge"] = Json::array({w.shared_edge.first, w.shared_edge.second});
    j["adjacent_4cycles_witness"] = std::move(entry);
  }
  j["class_g"] = r.class_g;
  Json ch = Json::array();
  for (auto [a, b] : r.class_h) ch.push_back(Json::array({a, b}));
  j["class_h"] = std::move(ch);
  Json verts = Json::array();
  for (const auto& p : r.vertices) {
    Json pv;
    pv["degree"] = p.degree;
    Json counts;
    for (const auto& [deg, cnt] : p.corner_counts) counts[std::to_string(deg)] = cnt;
    pv["corner_counts"] = std::move(counts);
    pv["max_three_face_run"] = p.max_three_face_run;
    verts.push_back(std::move(pv));
  }
  j["vertices"] = std::move(verts);
  return j;
}

Json to_json(const OrientedDecomposition& dec) {
  Json j;
  j["d"] = dec.d;
  j["h"] = dec.h;
  Json he = Json::array();
  for (auto [u, v] : dec.h_edges) he.push_back(Json::array({u, v}));
  j["h_edges"] = std::move(he);
  Json da = Json::array();
  for (auto [u, v] : dec.d_arcs) da.push_back(Json::array({u, v}));
  j["d_arcs"] = std::move(da);
  return j;
}

Json to_json(const Violation& v) {
  Json j;
  switch (v.kind) {
    case ViolationKind::UnknownEdge: j["kind"] = "unknown_edge"; break;
    case ViolationKind::UncoveredEdge: j["kind"] = "uncovered_edge"; break;
    case ViolationKind::DoublyCoveredEdge: j["kind"] = "doubly_covered_edge"; break;
    case ViolationKind::OverDegreeVertex: j["kind"] = "over_degree_vertex"; break;
    case ViolationKind::DirectedCycle: j["kind"] = "directed_cycle"; break;
    case ViolationKind::OverOutDegree: j["kind"] = "over_out_degree"; break;
  }
  j["vertices"] = v.vertices;
  j["detail"] = v.describe();
  return j;
}

Json to_json(const ConfigMatch& m) {
  Json j;
  j["lemma"] = m.lemma;
  Json map;
  for (std::size_t i = 0; i < m.labels.size(); ++i) map[m.labels[i]] = m.host[i];
  j["map"] = std::move(map);
  return j;
}

Json trace_json(const DecomposeResult& res) {
  Json j;
  switch (res.status) {
    case DecomposeStatus::Decomposed: j["status"] = "decomposed"; break;
    case DecomposeStatus::Nonexistent: j["status"] = "nonexistent"; break;
    case DecomposeStatus::Irreducible: j["status"] = "irreducible"; break;
  }
  Json steps = Json::array();
  for (const auto& s : res.trace) {
    Json step;
    step["lemma"] = s.lemma;
    Json map;
    for (std::size_t i = 0; i < s.labels.size(); ++i) map[s.labels[i]] = s.host[i];
    step["map"] = std::move(map);
    step["remaining"] = s.remaining;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["base_vertices"] = res.base_vertices;
  if (!res.diagnostic.empty()) j["diagnostic"] = res.diagnostic;
  if (!res.warnings.empty()) j["warnings"] = res.warnings;
  return j;
}

Json to_json(const AuditReport& rep) {
  Json j;
  j["ruleset"] = to_string(rep.ruleset);
  j["characteristic"] = rep.summary.characteristic;
  j["total_initial"] = to_json(rep.total_initial);
  j["total_final"] = to_json(rep.total_final);
  j["conservation_ok"] = rep.conservation_ok;
  j["in_class"] = rep.in_class;
  j["property1"] = rep.property1;
  j["property2"] = rep.property2;
  Json negs = Json::array();
  for (const auto& n : rep.negatives) {
    Json nj;
    nj["element"] = to_string(n.element);
    nj["final"] = to_json(n.final);
    Json trs = Json::array();
    for (const auto& t : n.transfers) {
      Json tj;
      tj["from"] = to_string(t.from);
      tj["to"] = to_string(t.to);
      tj["amount"] = to_json(t.amount);
      tj["rule"] = t.rule;
      trs.push_back(std::move(tj));
    }
    nj["transfers"] = std::move(trs);
    nj["explained_by"] = n.explained_by ? to_json(*n.explained_by) : Json(nullptr);
    negs.push_back(std::move(nj));
  }
  j["negatives"] = std::move(negs);
  if (rep.endgame) j["endgame"] = to_json(*rep.endgame);
  return j;
}

}  // namespace decomp

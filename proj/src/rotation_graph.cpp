#include "decomp/rotation_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace decomp {

void RotationGraph::index() {
  const int n = vertex_count();
  offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + degree(v);
  const int nd = offset_[n];
  tail_.resize(nd);
  head_.resize(nd);
  sign_.resize(nd);
  reverse_.assign(nd, -1);
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int s = 0; s < degree(v); ++s) {
      const DartEnd& e = rot_[v][s];
      if (e.neighbor < 0 || e.neighbor >= n)
        throw GraphError("vertex " + std::to_string(v) + " references nonexistent vertex " +
                         std::to_string(e.neighbor));
      if (e.neighbor == v)
        throw GraphError("loop at vertex " + std::to_string(v));
      if (!seen.insert(e.neighbor).second)
        throw GraphError("parallel edge " + std::to_string(v) + "-" + std::to_string(e.neighbor));
      if (e.sign != 1 && e.sign != -1)
        throw GraphError("bad signature at vertex " + std::to_string(v));
      const int d = offset_[v] + s;
      tail_[d] = v;
      head_[d] = e.neighbor;
      sign_[d] = e.sign;
    }
  }
  for (int d = 0; d < nd; ++d) {
    const int u = head_[d];
    int r = -1;
    for (int s = 0; s < degree(u); ++s)
      if (rot_[u][s].neighbor == tail_[d]) { r = offset_[u] + s; break; }
    if (r < 0)
      throw GraphError("asymmetric adjacency: " + std::to_string(tail_[d]) + " lists " +
                       std::to_string(u) + " but not conversely");
    if (sign_[d] != rot_[u][r - offset_[u]].sign)
      throw GraphError("signature mismatch on edge " + std::to_string(tail_[d]) + "-" +
                       std::to_string(u));
    reverse_[d] = r;
  }
}

RotationGraph RotationGraph::make(std::vector<std::vector<DartEnd>> rotations) {
  RotationGraph g;
  g.rot_ = std::move(rotations);
  g.index();
  return g;
}

RotationGraph RotationGraph::make_plain(std::vector<std::vector<int>> rotations) {
  std::vector<std::vector<DartEnd>> r(rotations.size());
  for (size_t v = 0; v < rotations.size(); ++v)
    for (int w : rotations[v]) r[v].push_back({w, 1});
  return make(std::move(r));
}

RotationGraph RotationGraph::from_faces(int vertex_count,
                                        const std::vector<std::vector<int>>& faces) {
  // At each vertex u, a face corner (w, u, x) dictates that x follows w in
  // u's rotation. Chaining these successor maps yields the rotation.
  std::vector<std::map<int, int>> succ(vertex_count);
  for (const auto& f : faces) {
    const int l = static_cast<int>(f.size());
    if (l < 2) throw GraphError("face walk too short");
    for (int j = 0; j < l; ++j) {
      const int w = f[(j - 1 + l) % l], u = f[j], x = f[(j + 1) % l];
      if (u < 0 || u >= vertex_count) throw GraphError("face walk references bad vertex");
      if (!succ[u].emplace(w, x).second)
        throw GraphError("directed edge " + std::to_string(w) + "->" + std::to_string(u) +
                         " used twice in face walks");
    }
  }
  std::vector<std::vector<DartEnd>> rot(vertex_count);
  for (int u = 0; u < vertex_count; ++u) {
    if (succ[u].empty()) continue;
    const int start = succ[u].begin()->first;
    int cur = start;
    do {
      rot[u].push_back({cur, 1});
      auto it = succ[u].find(cur);
      if (it == succ[u].end()) throw GraphError("face walks do not close around a vertex");
      cur = it->second;
    } while (cur != start && rot[u].size() <= succ[u].size());
    if (cur != start || rot[u].size() != succ[u].size())
      throw GraphError("face corners at vertex " + std::to_string(u) +
                       " do not form a single cycle");
  }
  return make(std::move(rot));
}

bool RotationGraph::adjacent(int u, int v) const {
  for (const DartEnd& e : rot_[u])
    if (e.neighbor == v) return true;
  return false;
}

std::vector<int> RotationGraph::neighbors(int v) const {
  std::vector<int> r;
  r.reserve(rot_[v].size());
  for (const DartEnd& e : rot_[v]) r.push_back(e.neighbor);
  return r;
}

std::vector<std::pair<int, int>> RotationGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(edge_count());
  for (int v = 0; v < vertex_count(); ++v)
    for (const DartEnd& e : rot_[v])
      if (v < e.neighbor) es.emplace_back(v, e.neighbor);
  std::sort(es.begin(), es.end());
  return es;
}

int RotationGraph::rotation_succ(int dart) const {
  const int v = tail_[dart], s = dart - offset_[v];
  return offset_[v] + (s + 1) % degree(v);
}

int RotationGraph::rotation_pred(int dart) const {
  const int v = tail_[dart], s = dart - offset_[v];
  return offset_[v] + (s - 1 + degree(v)) % degree(v);
}

namespace {

std::string strip_comment(const std::string& s) {
  const auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

RotationGraph parse_rotation_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string s = strip_comment(raw);
      std::istringstream probe(s);
      std::string tok;
      if (probe >> tok) { out = s; return true; }
    }
    return false;
  };

  std::string line;
  if (!next_content_line(line)) throw ParseError(lineno, "empty input");
  {
    std::istringstream hs(line);
    std::string magic;
    int ver = 0;
    if (!(hs >> magic >> ver) || magic != "ROTSYS" || ver != 1)
      throw ParseError(lineno, "expected header 'ROTSYS 1'");
    std::string extra;
    if (hs >> extra) throw ParseError(lineno, "trailing tokens after header");
  }

  int n = -1, m = -1;
  if (!next_content_line(line)) throw ParseError(lineno, "missing size line");
  {
    std::istringstream ss(line);
    if (!(ss >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "expected '<n> <m>'");
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing tokens after sizes");
  }

  std::vector<std::vector<DartEnd>> rot(n);
  std::vector<bool> listed(n, false);
  for (int i = 0; i < n; ++i) {
    if (!next_content_line(line)) throw ParseError(lineno, "missing rotation line");
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head.empty() || head.back() != ':')
      throw ParseError(lineno, "expected 'u:' at start of rotation line");
    int u = -1;
    try {
      size_t used = 0;
      u = std::stoi(head.substr(0, head.size() - 1), &used);
      if (used != head.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad vertex id '" + head + "'");
    }
    if (u < 0 || u >= n) throw ParseError(lineno, "vertex id " + std::to_string(u) + " out of range");
    if (listed[u]) throw ParseError(lineno, "duplicate rotation line for vertex " + std::to_string(u));
    listed[u] = true;
    std::string tok;
    while (ss >> tok) {
      int sign = 1;
      if (tok.size() > 1 && tok.back() == '-') {
        sign = -1;
        tok.pop_back();
      }
      int w = -1;
      try {
        size_t used = 0;
        w = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad neighbor token '" + tok + "'");
      }
      if (w < 0 || w >= n)
        throw ParseError(lineno, "neighbor " + std::to_string(w) + " out of range");
      rot[u].push_back({w, sign});
    }
  }
  {
    std::string extra;
    if (next_content_line(extra)) throw ParseError(lineno, "unexpected trailing line");
  }

  RotationGraph g = RotationGraph::make(std::move(rot));
  if (g.edge_count() != m)
    throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                 ", rotations give " + std::to_string(g.edge_count()));
  return g;
}

std::string serialize_rotation_graph(const RotationGraph& g) {
  std::ostringstream out;
  out << "ROTSYS 1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (const DartEnd& e : g.rotation(v)) {
      out << ' ' << e.neighbor;
      if (e.sign < 0) out << '-';
    }
    out << '\n';
  }
  return out.str();
}

InducedSubgraph induce_removing(const RotationGraph& g, const std::vector<int>& xs) {
  std::vector<bool> drop(g.vertex_count(), false);
  for (int x : xs) {
    if (x < 0 || x >= g.vertex_count())
      throw GraphError("remove_vertices: vertex " + std::to_string(x) + " out of range");
    drop[x] = true;
  }
  InducedSubgraph res;
  std::vector<int> newid(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) {
      newid[v] = static_cast<int>(res.original.size());
      res.original.push_back(v);
    }
  std::vector<std::vector<DartEnd>> rot(res.original.size());
  for (size_t i = 0; i < res.original.size(); ++i)
    for (const DartEnd& e : g.rotation(res.original[i]))
      if (!drop[e.neighbor]) rot[i].push_back({newid[e.neighbor], e.sign});
  res.graph = RotationGraph::make(std::move(rot));
  return res;
}

RotationGraph remove_vertices(const RotationGraph& g, const std::vector<int>& xs) {
  return induce_removing(g, xs).graph;
}

RotationGraph remove_edges(const RotationGraph& g,
                           const std::vector<std::pair<int, int>>& es) {
  std::set<std::pair<int, int>> del;
  for (auto [u, v] : es) {
    if (!g.adjacent(u, v)) throw GraphError("remove_edges: no such edge");
    del.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<std::vector<DartEnd>> rot(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const DartEnd& e : g.rotation(v))
      if (!del.count({std::min(v, e.neighbor), std::max(v, e.neighbor)}))
        rot[v].push_back(e);
  return RotationGraph::make(std::move(rot));
}

}  // namespace decomp

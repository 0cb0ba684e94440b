#include "decomp/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace decomp {

namespace {

std::string vertex_list(const std::vector<int>& vs, const char* sep) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::UnknownEdge:
      return "unknown edge " + vertex_list(vertices, "-");
    case ViolationKind::UncoveredEdge:
      return "uncovered edge " + vertex_list(vertices, "-");
    case ViolationKind::DoublyCoveredEdge:
      return "doubly covered edge " + vertex_list(vertices, "-");
    case ViolationKind::OverDegreeVertex:
      return "vertex " + vertex_list(vertices, ",") + " exceeds the subgraph degree bound";
    case ViolationKind::DirectedCycle:
      return "directed cycle " + vertex_list(vertices, ">");
    case ViolationKind::OverOutDegree:
      return "vertex " + vertex_list(vertices, ",") + " exceeds the out-degree bound";
  }
  return "unknown violation";
}

std::optional<Violation> verify(const RotationGraph& g, const OrientedDecomposition& dec) {
  const int n = g.vertex_count();
  auto norm = [](int u, int v) { return std::pair{std::min(u, v), std::max(u, v)}; };

  std::map<std::pair<int, int>, int> cover;
  auto touch = [&](int u, int v) -> std::optional<Violation> {
    if (u < 0 || u >= n || v < 0 || v >= n || !g.adjacent(u, v))
      return Violation{ViolationKind::UnknownEdge, {u, v}};
    ++cover[norm(u, v)];
    return std::nullopt;
  };
  for (auto [u, v] : dec.h_edges)
    if (auto bad = touch(u, v)) return bad;
  for (auto [u, v] : dec.d_arcs)
    if (auto bad = touch(u, v)) return bad;

  for (auto& [e, c] : cover)
    if (c > 1) return Violation{ViolationKind::DoublyCoveredEdge, {e.first, e.second}};
  for (auto [u, v] : g.edges())
    if (!cover.count({u, v})) return Violation{ViolationKind::UncoveredEdge, {u, v}};

  std::vector<int> hdeg(n, 0);
  for (auto [u, v] : dec.h_edges) {
    ++hdeg[u];
    ++hdeg[v];
  }
  for (int v = 0; v < n; ++v)
    if (hdeg[v] > dec.h) return Violation{ViolationKind::OverDegreeVertex, {v}};

  // acyclicity: peel sinks; any leftover arcs contain a directed cycle
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [u, v] : dec.d_arcs) {
    out[u].push_back(v);
    ++indeg[v];
  }
  {
    std::vector<int> outdeg(n, 0);
    for (auto [u, v] : dec.d_arcs) {
      (void)v;
      ++outdeg[u];
    }
    std::vector<int> order;
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    std::vector<int> rem = indeg;
    for (int v = 0; v < n; ++v)
      if (rem[v] == 0) q.push(v);
    std::vector<bool> done(n, false);
    while (!q.empty()) {
      int v = q.top();
      q.pop();
      done[v] = true;
      order.push_back(v);
      for (int w : out[v])
        if (--rem[w] == 0) q.push(w);
    }
    if (static_cast<int>(order.size()) != n) {
      // every unfinished vertex keeps an unfinished in-neighbor; walking
      // backwards must repeat, closing a directed cycle
      std::vector<std::vector<int>> in(n);
      for (auto [u, v] : dec.d_arcs)
        if (!done[u] && !done[v]) in[v].push_back(u);
      int v = 0;
      while (done[v] || in[v].empty()) ++v;
      std::vector<int> seen(n, -1);
      std::vector<int> walk;
      while (seen[v] < 0) {
        seen[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        v = in[v].front();
      }
      std::vector<int> cyc(walk.begin() + seen[v], walk.end());
      std::reverse(cyc.begin(), cyc.end());
      return Violation{ViolationKind::DirectedCycle, cyc};
    }
    for (int v = 0; v < n; ++v)
      if (outdeg[v] > dec.d) return Violation{ViolationKind::OverOutDegree, {v}};
  }
  return std::nullopt;
}

namespace {

// residual min-degree peel over an adjacency structure with deleted edges
DegeneracyCertificate peel(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  DegeneracyCertificate cert;
  std::vector<int> removal;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    cert.value = std::max(cert.value, deg[best]);
    gone[best] = true;
    removal.push_back(best);
    for (int w : adj[best])
      if (!gone[w]) --deg[w];
  }
  cert.order.assign(removal.rbegin(), removal.rend());
  return cert;
}

}  // namespace

DegeneracyCertificate degeneracy_order(const RotationGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  return peel(g.vertex_count(), adj);
}

std::vector<std::pair<int, int>> orientation_from_order(const RotationGraph& g,
                                                        const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw GraphError("orientation_from_order: order must list every vertex once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0)
      throw GraphError("orientation_from_order: order must list every vertex once");
    pos[v] = i;
  }
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    arcs.emplace_back(pos[u] > pos[v] ? std::pair{u, v} : std::pair{v, u});
  return arcs;
}

namespace {

struct OracleSearch {
  const RotationGraph& g;
  int d, h;
  std::vector<std::pair<int, int>> es;
  std::vector<int> hdeg;
  std::vector<std::pair<int, int>> chosen;
  std::vector<std::vector<int>> adj;  // mutable residual adjacency

  OracleSearch(const RotationGraph& g_, int d_, int h_) : g(g_), d(d_), h(h_) {
    es = g.edges();
    hdeg.assign(g.vertex_count(), 0);
    adj.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  }

  bool remainder_degenerate() const {
    std::set<std::pair<int, int>> removed(chosen.begin(), chosen.end());
    std::vector<std::vector<int>> res(g.vertex_count());
    for (auto [u, v] : es)
      if (!removed.count({u, v})) {
        res[u].push_back(v);
        res[v].push_back(u);
      }
    return peel(g.vertex_count(), res).value <= d;
  }

  // depth-first over sorted edges, testing each partial selection before
  // extending: visits candidate subgraphs in lexicographic order
  bool search(size_t from, OrientedDecomposition& out) {
    if (remainder_degenerate()) {
      out.h_edges = chosen;
      return true;
    }
    if (h == 0) return false;
    for (size_t i = from; i < es.size(); ++i) {
      auto [u, v] = es[i];
      if (hdeg[u] >= h || hdeg[v] >= h) continue;
      ++hdeg[u];
      ++hdeg[v];
      chosen.push_back(es[i]);
      if (search(i + 1, out)) return true;
      chosen.pop_back();
      --hdeg[u];
      --hdeg[v];
    }
    return false;
  }
};

}  // namespace

std::optional<OrientedDecomposition> oracle_decide(const RotationGraph& g, int d, int h,
                                                   const OracleOptions& opts) {
  if (d < 0 || h < 0) throw GraphError("oracle_decide: d and h must be nonnegative");
  if (h > 2) throw GraphError("oracle_decide: h > 2 is not supported");
  if (g.edge_count() > opts.edge_budget)
    throw BudgetError("oracle_decide: edge budget exceeded (" +
                      std::to_string(g.edge_count()) + " > " +
                      std::to_string(opts.edge_budget) + ")");
  OracleSearch s(g, d, h);
  OrientedDecomposition dec;
  dec.d = d;
  dec.h = h;
  if (!s.search(0, dec)) return std::nullopt;

  std::set<std::pair<int, int>> inh(dec.h_edges.begin(), dec.h_edges.end());
  std::vector<std::vector<int>> res(g.vertex_count());
  for (auto [u, v] : g.edges())
    if (!inh.count({u, v})) {
      res[u].push_back(v);
      res[v].push_back(u);
    }
  auto cert = peel(g.vertex_count(), res);
  std::vector<int> pos(g.vertex_count());
  for (size_t i = 0; i < cert.order.size(); ++i) pos[cert.order[i]] = static_cast<int>(i);
  for (auto [u, v] : g.edges())
    if (!inh.count({u, v}))
      dec.d_arcs.emplace_back(pos[u] > pos[v] ? std::pair{u, v} : std::pair{v, u});
  return dec;
}

DefectiveColoring defective_coloring(const RotationGraph& g,
                                     const OrientedDecomposition& dec) {
  if (dec.h > 1) throw GraphError("defective_coloring: needs h <= 1");
  if (verify(g, dec)) throw GraphError("defective_coloring: decomposition does not verify");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out(n), in(n);
  for (auto [u, v] : dec.d_arcs) {
    out[u].push_back(v);
    in[v].push_back(u);
  }
  // color sinks first so every out-neighborhood is already colored
  std::vector<int> pending(n);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(out[v].size());
    if (pending[v] == 0) ready.push(v);
  }
  DefectiveColoring col;
  col.color.assign(n, -1);
  int done = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    ++done;
    std::set<int> taken;
    for (int w : out[v]) taken.insert(col.color[w]);
    int c = 0;
    while (taken.count(c)) ++c;
    col.color[v] = c;
    col.colors_used = std::max(col.colors_used, c + 1);
    for (int w : in[v])
      if (--pending[w] == 0) ready.push(w);
  }
  if (done != n) throw GraphError("defective_coloring: orientation has a cycle");
  return col;
}

namespace {

int parse_int_token(const std::string& tok, int lineno) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad number '" + tok + "'");
  }
}

}  // namespace

OrientedDecomposition parse_decomposition(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, raw)) {
      ++lineno;
      const auto pos = raw.find('#');
      std::string s = pos == std::string::npos ? raw : raw.substr(0, pos);
      std::istringstream probe(s);
      std::string tok;
      if (probe >> tok) { out = s; return true; }
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw ParseError(lineno, "empty input");
  {
    std::istringstream hs(line);
    std::string magic;
    int ver = 0;
    if (!(hs >> magic >> ver) || magic != "DECOMP" || ver != 1)
      throw ParseError(lineno, "expected header 'DECOMP 1'");
  }
  OrientedDecomposition dec;
  if (!next_line(line)) throw ParseError(lineno, "missing parameter line");
  {
    std::istringstream ss(line);
    if (!(ss >> dec.d >> dec.h) || dec.d < 0 || dec.h < 0)
      throw ParseError(lineno, "expected '<d> <h>'");
  }
  for (const char* tag : {"H:", "D:"}) {
    if (!next_line(line)) throw ParseError(lineno, std::string("missing '") + tag + "' line");
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head != tag) throw ParseError(lineno, std::string("expected '") + tag + "' line");
    std::string tok;
    while (ss >> tok) {
      const char sep = (tag[0] == 'H') ? '-' : '>';
      const auto pos = tok.find(sep);
      if (pos == std::string::npos)
        throw ParseError(lineno, "expected pairs 'u" + std::string(1, sep) + "v'");
      int u = parse_int_token(tok.substr(0, pos), lineno);
      int v = parse_int_token(tok.substr(pos + 1), lineno);
      if (tag[0] == 'H')
        dec.h_edges.emplace_back(std::min(u, v), std::max(u, v));
      else
        dec.d_arcs.emplace_back(u, v);
    }
  }
  return dec;
}

std::string serialize_decomposition(const OrientedDecomposition& dec) {
  std::ostringstream out;
  out << "DECOMP 1\n" << dec.d << ' ' << dec.h << '\n';
  auto hs = dec.h_edges;
  std::sort(hs.begin(), hs.end());
  out << "H:";
  for (auto [u, v] : hs) out << ' ' << u << '-' << v;
  out << "\nD:";
  auto as = dec.d_arcs;
  std::sort(as.begin(), as.end());
  for (auto [u, v] : as) out << ' ' << u << '>' << v;
  out << '\n';
  return out.str();
}

}  // namespace decomp

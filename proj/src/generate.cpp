#include "decomp/generate.hpp"

#include <algorithm>

namespace decomp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

std::vector<int> path_walk(int n) {
  // single face: out along the path and back
  std::vector<int> w;
  for (int i = 0; i < n; ++i) w.push_back(i);
  for (int i = n - 2; i >= 1; --i) w.push_back(i);
  return w;
}

}  // namespace

RotationGraph gen_cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<int> fwd, bwd;
  for (int i = 0; i < n; ++i) fwd.push_back(i);
  for (int i = n - 1; i >= 0; --i) bwd.push_back(i);
  return RotationGraph::from_faces(n, {fwd, bwd});
}

RotationGraph gen_path(int n) {
  require(n >= 2, "path: n must be >= 2");
  return RotationGraph::from_faces(n, {path_walk(n)});
}

RotationGraph gen_wheel(int n) {
  require(n >= 3, "wheel: rim must be >= 3");
  std::vector<std::vector<int>> faces;
  for (int i = 1; i <= n; ++i) faces.push_back({0, i, i % n + 1});
  std::vector<int> rim;
  for (int i = n; i >= 1; --i) rim.push_back(i);
  faces.push_back(rim);
  return RotationGraph::from_faces(n + 1, faces);
}

RotationGraph gen_prism(int n) {
  require(n >= 3, "prism: n must be >= 3");
  auto outer = [&](int j) { return j % n; };
  auto inner = [&](int j) { return n + j % n; };
  std::vector<std::vector<int>> faces;
  for (int j = 0; j < n; ++j)
    faces.push_back({outer(j), outer(j + 1), inner(j + 1), inner(j)});
  std::vector<int> fin, fout;
  for (int j = 0; j < n; ++j) fin.push_back(inner(j));
  for (int j = n - 1; j >= 0; --j) fout.push_back(outer(j));
  faces.push_back(fin);
  faces.push_back(fout);
  return RotationGraph::from_faces(2 * n, faces);
}

RotationGraph gen_planar_grid(int m, int n) {
  require(m >= 1 && n >= 1 && m * n >= 2, "planar_grid: need at least two vertices");
  auto id = [&](int r, int c) { return r * n + c; };
  if (m == 1) return RotationGraph::from_faces(n, {path_walk(n)});
  if (n == 1) return gen_planar_grid(1, m);
  std::vector<std::vector<int>> faces;
  for (int r = 0; r + 1 < m; ++r)
    for (int c = 0; c + 1 < n; ++c)
      faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
  std::vector<int> outer;
  for (int c = n - 1; c >= 1; --c) outer.push_back(id(0, c));
  for (int r = 0; r + 1 < m; ++r) outer.push_back(id(r, 0));
  for (int c = 0; c + 1 < n; ++c) outer.push_back(id(m - 1, c));
  for (int r = m - 1; r >= 1; --r) outer.push_back(id(r, n - 1));
  faces.push_back(outer);
  return RotationGraph::from_faces(m * n, faces);
}

RotationGraph gen_toroidal_grid(int m, int n) {
  require(m >= 3 && n >= 3, "toroidal_grid: m, n must be >= 3");
  auto id = [&](int r, int c) { return ((r + m) % m) * n + (c + n) % n; };
  std::vector<std::vector<int>> faces;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
  return RotationGraph::from_faces(m * n, faces);
}

RotationGraph gen_hex_grid(int m, int n) {
  require(m >= 1 && n >= 1, "hex_grid: m, n must be >= 1");
  // Brick-wall drawing: quad grid with alternate verticals removed, then
  // degree-1 stubs trimmed.
  const int rows = m + 1, cols = 2 * n + 2;
  RotationGraph g = gen_planar_grid(rows, cols);
  auto id = [&](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> drop;
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if ((r + c) % 2 == 1) drop.push_back({id(r, c), id(r + 1, c)});
  g = remove_edges(g, drop);
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) <= 1) stubs.push_back(v);
    if (stubs.empty()) break;
    g = remove_vertices(g, stubs);
  }
  return g;
}

RotationGraph gen_complete(int n) {
  require(n >= 2 && n <= 6, "complete: n must be in 2..6");
  if (n == 2) return gen_path(2);
  if (n == 3) return gen_cycle(3);
  if (n == 4)
    return RotationGraph::from_faces(4, {{1, 2, 3}, {0, 2, 1}, {0, 3, 2}, {0, 1, 3}});
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (w != v) rot[v].push_back(w);
  return RotationGraph::make_plain(std::move(rot));
}

RotationGraph generate(const std::string& kind, const std::vector<int>& params) {
  auto arity = [&](size_t k) {
    require(params.size() == k, "generate: kind '" + kind + "' takes " + std::to_string(k) +
                                    " parameter(s)");
  };
  if (kind == "cycle") { arity(1); return gen_cycle(params[0]); }
  if (kind == "path") { arity(1); return gen_path(params[0]); }
  if (kind == "wheel") { arity(1); return gen_wheel(params[0]); }
  if (kind == "prism") { arity(1); return gen_prism(params[0]); }
  if (kind == "planar_grid") { arity(2); return gen_planar_grid(params[0], params[1]); }
  if (kind == "toroidal_grid") { arity(2); return gen_toroidal_grid(params[0], params[1]); }
  if (kind == "hex_grid") { arity(2); return gen_hex_grid(params[0], params[1]); }
  if (kind == "complete") { arity(1); return gen_complete(params[0]); }
  throw GraphError("generate: unknown kind '" + kind + "'");
}

}  // namespace decomp

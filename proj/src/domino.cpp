#include "ust/domino.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>

#include "ust/error.hpp"

namespace ust {

bool is_valid_tiling(const DominoTiling& tiling) {
  const int side = tiling.side();
  if (side < 1) return false;
  std::vector<int> cover(static_cast<std::size_t>(side) * side, 0);
  auto inside = [side](Cell c) { return c.x >= 0 && c.y >= 0 && c.x < side && c.y < side; };
  for (const Domino& d : tiling.dominoes) {
    if (!inside(d.a) || !inside(d.b)) return false;
    if (std::abs(d.a.x - d.b.x) + std::abs(d.a.y - d.b.y) != 1) return false;
    ++cover[static_cast<std::size_t>(d.a.x + side * d.a.y)];
    ++cover[static_cast<std::size_t>(d.b.x + side * d.b.y)];
  }
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const int expected = (x == 0 && y == 0) ? 0 : 1;
      if (cover[static_cast<std::size_t>(x + side * y)] != expected) return false;
    }
  }
  return true;
}

namespace {

Domino ordered(Cell a, Cell b) { return a < b ? Domino{a, b} : Domino{b, a}; }

// BFS over an edge-labelled graph; returns, per vertex, the label of the
// edge it was reached by (nullopt for the root and unreached vertices).
std::vector<std::optional<std::size_t>> bfs_parents(
    std::size_t vertices, const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
    std::size_t root, std::size_t& reached) {
  std::vector<std::optional<std::size_t>> parent(vertices);
  std::vector<char> seen(vertices, 0);
  std::deque<std::size_t> queue{root};
  seen[root] = 1;
  reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [w, label] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      parent[w] = label;
      queue.push_back(w);
    }
  }
  return parent;
}

}  // namespace

DominoTiling temperley_matching(int m, const EdgeSet& tree) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "domino window needs m >= 2");
  const Graph g = make_family(Family::grid, m);
  if (!is_spanning_tree(g, tree)) {
    throw Error(ErrorCode::not_spanning_tree, "edge set is not a spanning tree of grid(" + std::to_string(m) + ")");
  }

  const auto um = static_cast<std::size_t>(m);
  auto coords = [um](VertexId v) { return std::pair<int, int>(static_cast<int>(v % um), static_cast<int>(v / um)); };
  auto midpoint = [&](const Edge& e) {
    const auto [ux, uy] = coords(e.u);
    const auto [vx, vy] = coords(e.v);
    return Cell{ux + vx, uy + vy};
  };

  DominoTiling tiling;
  tiling.m = m;

  // primal tree, directed toward grid vertex 0 at the removed corner
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> primal(g.vertex_count());
  for (EdgeId id : tree) {
    const Edge& e = g.edge(id);
    primal[e.u].push_back({e.v, id});
    primal[e.v].push_back({e.u, id});
  }
  std::size_t reached = 0;
  const auto primal_parent = bfs_parents(g.vertex_count(), primal, 0, reached);
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    const auto [x, y] = coords(v);
    tiling.dominoes.push_back(ordered(Cell{2 * x, 2 * y}, midpoint(g.edge(*primal_parent[v]))));
  }

  // dual forest of the non-tree edges; face (a, b) has id a + (m-1) b and
  // the outer face is the last id
  const std::size_t faces = (um - 1) * (um - 1);
  const std::size_t outer = faces;
  auto face = [&](int a, int b) -> std::size_t {
    if (a < 0 || b < 0 || a > m - 2 || b > m - 2) return outer;
    return static_cast<std::size_t>(a) + (um - 1) * static_cast<std::size_t>(b);
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dual(faces + 1);
  for (const Edge& e : g.edges()) {
    if (tree.contains(e.id)) continue;
    const auto [ux, uy] = coords(e.u);
    const auto [vx, vy] = coords(e.v);
    std::size_t f1 = 0;
    std::size_t f2 = 0;
    if (uy == vy) {  // horizontal: faces below and above
      const int i = std::min(ux, vx);
      f1 = face(i, uy - 1);
      f2 = face(i, uy);
    } else {  // vertical: faces left and right
      const int j = std::min(uy, vy);
      f1 = face(ux - 1, j);
      f2 = face(ux, j);
    }
    dual[f1].push_back({f2, e.id});
    dual[f2].push_back({f1, e.id});
  }
  const auto dual_parent = bfs_parents(faces + 1, dual, outer, reached);
  if (reached != faces + 1) {
    throw Error(ErrorCode::not_spanning_tree, "dual of the complement is not connected");
  }
  for (std::size_t f = 0; f < faces; ++f) {
    const int a = static_cast<int>(f % (um - 1));
    const int b = static_cast<int>(f / (um - 1));
    tiling.dominoes.push_back(ordered(Cell{2 * a + 1, 2 * b + 1}, midpoint(g.edge(*dual_parent[f]))));
  }

  std::sort(tiling.dominoes.begin(), tiling.dominoes.end());
  if (!is_valid_tiling(tiling)) {
    throw Error(ErrorCode::numeric, "tree-to-tiling construction produced an invalid cover");
  }
  return tiling;
}

}  // namespace ust

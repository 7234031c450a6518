#pragma once

#include <utility>
#include <vector>

#include "ust/graph.hpp"

namespace ust {

/// Cell of the (2m-1) x (2m-1) board. Even/even cells are vertices of the
/// m x m grid (grid vertex (i, j) sits at (2i, 2j)), odd/odd cells are its
/// bounded faces, and mixed cells are edge midpoints.
struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Domino {
  Cell a;
  Cell b;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// Tiling of the board with the lower-left corner cell (0, 0) removed.
struct DominoTiling {
  int m = 0;
  std::vector<Domino> dominoes;  // sorted

  int side() const { return 2 * m - 1; }
};

/// True when every board cell except (0, 0) is covered exactly once by
/// dominoes of two orthogonally adjacent cells.
bool is_valid_tiling(const DominoTiling& tiling);

/// Tree-to-tiling map on the planar window. `tree` is a spanning tree of
/// make_family(grid, m). The tree is directed toward grid vertex (0, 0) and
/// every other grid vertex is paired with the midpoint of its outgoing edge;
/// the dual tree (duals of the non-tree edges, with the outer face as one
/// vertex) is directed toward the outer face and every bounded face is paired
/// with the midpoint of its outgoing dual edge.
///
/// Throws Error(not_spanning_tree) if `tree` is not a spanning tree.
DominoTiling temperley_matching(int m, const EdgeSet& tree);

}  // namespace ust

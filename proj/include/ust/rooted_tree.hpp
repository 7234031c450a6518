#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ust {

/// Finite rooted tree up to labelled embedding; the root is implicit and
/// children are ordered only for reproducibility.
///
/// Text form: the root is implicit and each "(" opens a child that is closed
/// by the matching ")". So "" is a single vertex, "()" one edge, "()()" the
/// 2-star and "(()())" a root with one child that has two children.
struct RootedTree {
  std::vector<RootedTree> children;

  /// Number of vertices.
  std::size_t size() const;
  /// Edges on the longest root-to-leaf path.
  std::size_t height() const;

  /// Copy cut off below depth `depth`.
  RootedTree truncated(std::size_t depth) const;

  std::string encode() const;
  static RootedTree parse(std::string_view text);

  static RootedTree single_vertex() { return {}; }
  static RootedTree star(std::size_t leaves);
  static RootedTree path(std::size_t edges);

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

}  // namespace ust

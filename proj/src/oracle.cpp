#include "ust/oracle.hpp"

#include <algorithm>
#include <optional>

#include "ust/detail/union_find.hpp"
#include "ust/error.hpp"
#include "ust/linalg.hpp"

namespace ust {

namespace {

void guard_size(const Graph& g) {
  if (g.edge_count() > kMaxEnumerationEdges) {
    throw Error(ErrorCode::too_large, "enumeration is limited to " +
                                          std::to_string(kMaxEnumerationEdges) + " edges; graph has " +
                                          std::to_string(g.edge_count()));
  }
}

// Enumerates edge sets that, together with the optional pre-merged vertex
// pair, form a spanning tree of the quotient. With no pair these are spanning
// trees; with (a, b) they are the a,b-bitrees.
class ForestEnumerator {
 public:
  ForestEnumerator(const Graph& g, std::optional<std::pair<VertexId, VertexId>> merged)
      : g_(g), initial_(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      if (!e.is_self_edge()) edges_.push_back(&e);
    }
    if (merged) initial_.unite(merged->first, merged->second);
  }

  std::vector<EdgeSet> run() {
    if (!spans(initial_, 0)) return {};
    std::vector<const Edge*> chosen;
    recurse(0, initial_, chosen);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Can the current partial forest still be completed using edges from
  // position `from` onwards?
  bool spans(detail::UnionFind uf, std::size_t from) const {
    for (std::size_t i = from; i < edges_.size() && uf.components() > 1; ++i) {
      uf.unite(edges_[i]->u, edges_[i]->v);
    }
    return uf.components() == 1;
  }

  void recurse(std::size_t i, const detail::UnionFind& uf, std::vector<const Edge*>& chosen) {
    if (uf.components() == 1) {
      EdgeSet tree;
      for (const Edge* e : chosen) tree.insert(e->id);
      found_.push_back(std::move(tree));
      return;
    }
    if (i == edges_.size()) return;
    const Edge& e = *edges_[i];

    detail::UnionFind with = uf;
    if (with.unite(e.u, e.v)) {
      chosen.push_back(&e);
      recurse(i + 1, with, chosen);
      chosen.pop_back();
    }
    if (spans(uf, i + 1)) recurse(i + 1, uf, chosen);
  }

  const Graph& g_;
  detail::UnionFind initial_;
  std::vector<const Edge*> edges_;
  std::vector<EdgeSet> found_;
};

Rational weight_of(const Graph& g, const EdgeSet& s) {
  Rational w = 1;
  for (EdgeId id : s) w *= g.edge(id).weight;
  return w;
}

}  // namespace

TreeEnumeration enumerate_spanning_trees(const Graph& g) {
  guard_size(g);
  TreeEnumeration out;
  if (g.vertex_count() == 0) return out;
  out.trees = ForestEnumerator(g, std::nullopt).run();
  for (const EdgeSet& t : out.trees) out.total_weight += weight_of(g, t);
  return out;
}

Rational matrix_tree_count(const Graph& g, VertexId deleted) {
  const std::size_t n = g.vertex_count();
  if (deleted >= n) throw Error(ErrorCode::out_of_range, "deleted vertex out of range");
  if (n == 1) return Rational(1);
  Matrix<Rational> minor(n - 1, n - 1);
  auto idx = [deleted](VertexId v) { return v - (v > deleted ? 1 : 0); };
  for (const Edge& e : g.edges()) {
    if (e.is_self_edge()) continue;
    if (e.u != deleted) minor(idx(e.u), idx(e.u)) += e.weight;
    if (e.v != deleted) minor(idx(e.v), idx(e.v)) += e.weight;
    if (e.u != deleted && e.v != deleted) {
      minor(idx(e.u), idx(e.v)) -= e.weight;
      minor(idx(e.v), idx(e.u)) -= e.weight;
    }
  }
  return determinant(minor);
}

Rational bitree_weight_sum(const Graph& g, VertexId a, VertexId b) {
  guard_size(g);
  if (a >= g.vertex_count() || b >= g.vertex_count()) {
    throw Error(ErrorCode::out_of_range, "vertex id out of range");
  }
  if (a == b) throw Error(ErrorCode::invalid_argument, "bitree endpoints must differ");
  Rational total = 0;
  for (const EdgeSet& s : ForestEnumerator(g, std::make_pair(a, b)).run()) total += weight_of(g, s);
  return total;
}

Rational brute_cylinder_prob(const Graph& g, const CylinderEvent& ev) {
  for (EdgeId id : ev.include) {
    g.edge(id);
    if (ev.exclude.contains(id)) {
      throw Error(ErrorCode::invalid_argument, "edge " + std::to_string(id) + " is both included and excluded");
    }
  }
  for (EdgeId id : ev.exclude) g.edge(id);
  const TreeEnumeration all = enumerate_spanning_trees(g);
  if (all.trees.empty()) throw Error(ErrorCode::disconnected, "graph has no spanning tree");
  Rational hit = 0;
  for (const EdgeSet& t : all.trees) {
    const bool ok =
        std::all_of(ev.include.begin(), ev.include.end(), [&](EdgeId id) { return t.contains(id); }) &&
        std::none_of(ev.exclude.begin(), ev.exclude.end(), [&](EdgeId id) { return t.contains(id); });
    if (ok) hit += weight_of(g, t);
  }
  Rational p = hit / all.total_weight;
  p.canonicalize();
  return p;
}

std::string canonical_tree_key(const EdgeSet& tree) {
  std::string key;
  for (EdgeId id : tree) {
    if (!key.empty()) key += ',';
    key += std::to_string(id);
  }
  return key;
}

}  // namespace ust

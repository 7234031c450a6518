#include "ust/sampler.hpp"

#include <algorithm>
#include <thread>

#include "ust/error.hpp"
#include "ust/oracle.hpp"

namespace ust {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngSeed derive_seed(RngSeed seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

EdgeSet DirectedSpanningTree::edges() const {
  EdgeSet out;
  for (const auto& e : parent_edge) {
    if (e) out.insert(e->edge);
  }
  return out;
}

namespace {

// First-entry bookkeeping shared by the sampler and the replay helpers.
class FirstEntryRecorder {
 public:
  FirstEntryRecorder(const Graph& g, VertexId start) : g_(g), current_(start) {
    tree_.root = start;
    tree_.parent_edge.assign(g.vertex_count(), std::nullopt);
    visited_.assign(g.vertex_count(), 0);
    visited_[start] = 1;
    remaining_ = g.vertex_count() - 1;
  }

  bool done() const { return remaining_ == 0; }
  VertexId current() const { return current_; }

  void step(EdgeId id) {
    const Edge& e = g_.edge(id);
    if (e.u != current_ && e.v != current_) {
      throw Error(ErrorCode::invalid_argument,
                  "walk step along edge " + std::to_string(id) + " does not leave vertex " +
                      std::to_string(current_));
    }
    const VertexId next = e.other(current_);
    if (!visited_[next]) {
      visited_[next] = 1;
      --remaining_;
      // arrow points from the new vertex back to the old one
      tree_.parent_edge[next] = OrientedEdge{id, e.u == next};
    }
    current_ = next;
  }

  DirectedSpanningTree finish() && {
    if (!done()) throw Error(ErrorCode::invalid_argument, "walk does not visit every vertex");
    return std::move(tree_);
  }

 private:
  const Graph& g_;
  VertexId current_;
  DirectedSpanningTree tree_;
  std::vector<char> visited_;
  std::size_t remaining_ = 0;
};

// Cumulative incident weights per vertex, in incidence (id) order.
struct WalkTable {
  std::vector<std::vector<double>> cumulative;
  std::vector<std::vector<EdgeId>> edge_ids;

  explicit WalkTable(const Graph& g) : cumulative(g.vertex_count()), edge_ids(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      double acc = 0.0;
      for (const Incidence& inc : g.incident(v)) {
        const Edge& e = g.edge(inc.edge);
        acc += (e.is_self_edge() ? 2.0 : 1.0) * e.weight.get_d();
        cumulative[v].push_back(acc);
        edge_ids[v].push_back(inc.edge);
      }
    }
  }

  EdgeId pick(VertexId v, Rng& rng) const {
    const auto& cum = cumulative[v];
    const double u = rng.uniform() * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return edge_ids[v][static_cast<std::size_t>(it - cum.begin())];
  }
};

void require_walkable(const Graph& g, VertexId start) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::invalid_argument, "graph has no vertices");
  if (start >= g.vertex_count()) throw Error(ErrorCode::out_of_range, "start vertex out of range");
  if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");
}

DirectedSpanningTree walk_once(const Graph& g, const WalkTable& table, VertexId start, RngSeed seed) {
  Rng rng(seed);
  FirstEntryRecorder rec(g, start);
  while (!rec.done()) rec.step(table.pick(rec.current(), rng));
  return std::move(rec).finish();
}

// Runs trials [0, trials) split into contiguous blocks, one per thread, and
// merges the per-block results in block order.
template <class Acc, class Body>
Acc run_batched(std::uint64_t trials, unsigned threads, Body body) {
  threads = std::max(1u, threads);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  std::vector<Acc> partial(threads);
  std::vector<std::thread> pool;
  const std::uint64_t block = (trials + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(trials, block * t);
    const std::uint64_t hi = std::min(trials, lo + block);
    if (threads == 1) {
      body(lo, hi, partial[t]);
    } else {
      pool.emplace_back([&, lo, hi, t] { body(lo, hi, partial[t]); });
    }
  }
  for (auto& th : pool) th.join();
  Acc total = std::move(partial[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (auto& [key, count] : partial[t]) total[key] += count;
  }
  return total;
}

}  // namespace

DirectedSpanningTree first_entry_tree(const Graph& g, VertexId start, std::span<const EdgeId> steps) {
  if (start >= g.vertex_count()) throw Error(ErrorCode::out_of_range, "start vertex out of range");
  FirstEntryRecorder rec(g, start);
  for (EdgeId id : steps) rec.step(id);
  return std::move(rec).finish();
}

DirectedSpanningTree first_entry_tree_from_vertices(const Graph& g, std::span<const VertexId> walk) {
  if (walk.empty()) throw Error(ErrorCode::invalid_argument, "walk is empty");
  std::vector<EdgeId> steps;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const VertexId from = walk[i - 1];
    const VertexId to = walk[i];
    if (from >= g.vertex_count() || to >= g.vertex_count()) {
      throw Error(ErrorCode::out_of_range, "walk vertex out of range");
    }
    std::optional<EdgeId> found;
    for (const Incidence& inc : g.incident(from)) {
      if (inc.other != to) continue;
      if (found) {
        throw Error(ErrorCode::invalid_argument, "walk step is ambiguous in a multigraph; give edge ids");
      }
      found = inc.edge;
    }
    if (!found) throw Error(ErrorCode::invalid_argument, "consecutive walk vertices are not adjacent");
    steps.push_back(*found);
  }
  return first_entry_tree(g, walk.front(), steps);
}

DirectedSpanningTree aldous_broder(const Graph& g, VertexId start, RngSeed seed) {
  require_walkable(g, start);
  return walk_once(g, WalkTable(g), start, seed);
}

std::map<EdgeId, double> sample_frequencies(const Graph& g, std::uint64_t trials, RngSeed seed,
                                            VertexId start, unsigned threads) {
  require_walkable(g, start);
  if (trials == 0) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  const WalkTable table(g);
  auto counts = run_batched<std::map<EdgeId, std::uint64_t>>(
      trials, threads, [&](std::uint64_t lo, std::uint64_t hi, std::map<EdgeId, std::uint64_t>& acc) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          for (EdgeId id : walk_once(g, table, start, derive_seed(seed, i)).edges()) ++acc[id];
        }
      });
  std::map<EdgeId, double> freq;
  for (const Edge& e : g.edges()) {
    freq[e.id] = static_cast<double>(counts[e.id]) / static_cast<double>(trials);
  }
  return freq;
}

std::map<std::string, std::uint64_t> sample_tree_census(const Graph& g, std::uint64_t trials, RngSeed seed,
                                                        VertexId start, unsigned threads) {
  require_walkable(g, start);
  if (trials == 0) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  std::vector<EdgeSpec> unit = g.edge_specs();
  for (EdgeSpec& s : unit) s.weight = 1;
  const Rational tree_count = matrix_tree_count(Graph::build(g.vertex_count(), unit));
  if (tree_count > kMaxCensusTrees) {
    throw Error(ErrorCode::too_large, "census needs at most " + std::to_string(kMaxCensusTrees) +
                                          " spanning trees; graph has " + format_rational(tree_count));
  }
  const WalkTable table(g);
  return run_batched<std::map<std::string, std::uint64_t>>(
      trials, threads, [&](std::uint64_t lo, std::uint64_t hi, std::map<std::string, std::uint64_t>& acc) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          ++acc[canonical_tree_key(walk_once(g, table, start, derive_seed(seed, i)).edges())];
        }
      });
}

}  // namespace ust

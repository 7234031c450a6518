#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ust/graph.hpp"

namespace ust {

using RngSeed = std::uint64_t;

/// SplitMix64 finaliser (Steele, Lea & Flood 2014). Used to derive
/// independent per-trial seeds: trial i of a batch seeded with s runs on
/// derive_seed(s, i).
std::uint64_t splitmix64(std::uint64_t x);
RngSeed derive_seed(RngSeed seed, std::uint64_t index);

/// Random source for every sampler in the library: std::mt19937_64 (fully
/// specified by the C++ standard) seeded with a single 64-bit value. Uniform
/// doubles are built from the top 53 bits, so streams are bit-identical on
/// every conforming platform.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Directed spanning tree: each non-root vertex points along the edge it was
/// first entered by, toward the vertex it came from.
struct DirectedSpanningTree {
  VertexId root = 0;
  std::vector<std::optional<OrientedEdge>> parent_edge;  // oriented child -> parent

  EdgeSet edges() const;
};

/// Applies the first-entry rule to a finite walk given as edge steps from
/// `start`. Throws Error(invalid_argument) if a step does not leave the
/// current vertex or the walk misses a vertex.
DirectedSpanningTree first_entry_tree(const Graph& g, VertexId start, std::span<const EdgeId> steps);

/// Same, for a walk given by its vertex sequence (first entry is the start).
/// Each consecutive pair must be joined by exactly one edge.
DirectedSpanningTree first_entry_tree_from_vertices(const Graph& g, std::span<const VertexId> walk);

/// Random walk from `start` picking incident edge e with probability
/// w(e)/d(v) (a self-edge has mass 2w and is a lazy step), stopping once
/// every vertex has been visited. Returns the first-entry tree rooted at
/// `start`.
DirectedSpanningTree aldous_broder(const Graph& g, VertexId start, RngSeed seed);

/// Per-edge inclusion frequencies over `trials` samples started at `start`.
/// Trial i uses derive_seed(seed, i); the result does not depend on
/// `threads`.
std::map<EdgeId, double> sample_frequencies(const Graph& g, std::uint64_t trials, RngSeed seed,
                                            VertexId start = 0, unsigned threads = 1);

/// Counts per distinct tree, keyed by canonical_tree_key. Requires at most
/// kMaxCensusTrees spanning trees.
inline constexpr std::uint64_t kMaxCensusTrees = 100;
std::map<std::string, std::uint64_t> sample_tree_census(const Graph& g, std::uint64_t trials,
                                                        RngSeed seed, VertexId start = 0,
                                                        unsigned threads = 1);

}  // namespace ust

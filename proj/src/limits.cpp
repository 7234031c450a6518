#include "ust/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "ust/error.hpp"
#include "ust/transfer.hpp"

namespace ust {

double poisson_plus_one_pmf(int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "k must be >= 0");
  if (k == 0) return 0.0;
  return std::exp(-1.0 - std::lgamma(static_cast<double>(k)));
}

std::map<int, Rational> kn_degree_pmf(int n) {
  if (n < 3 || n > 12) throw Error(ErrorCode::out_of_range, "kn_degree_pmf needs 3 <= n <= 12");
  const Graph g = make_family(Family::complete, n);
  const TransferKernel<Rational> kernel(g);

  // edges at vertex 0, in id order: 0-1, 0-2, ..., 0-(n-1)
  std::vector<EdgeId> star;
  for (const Incidence& inc : g.incident(0)) star.push_back(inc.edge);

  std::map<int, Rational> pmf;
  Integer choose = 1;  // C(n-1, k)
  for (int k = 0; k <= n - 1; ++k) {
    if (k > 0) choose = choose * (n - k) / k;
    CylinderEvent ev;
    for (int i = 0; i < n - 1; ++i) (i < k ? ev.include : ev.exclude).insert(star[i]);
    Rational p = Rational(choose) * kernel.prob_cylinder(ev);
    p.canonicalize();
    pmf[k] = p;
  }
  return pmf;
}

PoissonOneSampler::PoissonOneSampler() {
  double acc = 0.0;
  double term = std::exp(-1.0);
  for (int k = 0; k <= 40; ++k) {
    acc += term;
    cumulative_.push_back(acc);
    term /= (k + 1);
  }
}

int PoissonOneSampler::operator()(Rng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return it == cumulative_.end() ? static_cast<int>(cumulative_.size()) - 1
                                 : static_cast<int>(it - cumulative_.begin());
}

namespace {

// Grows a Poisson(1) family tree below `node` (at `depth`); offspring are
// still drawn at max_depth so truncation can be reported.
void grow(RootedTree& node, int depth, int max_depth, Rng& rng, const PoissonOneSampler& poisson,
          bool& truncated) {
  const int k = poisson(rng);
  if (depth >= max_depth) {
    if (k > 0) truncated = true;
    return;
  }
  node.children.resize(static_cast<std::size_t>(k));
  for (RootedTree& child : node.children) grow(child, depth + 1, max_depth, rng, poisson, truncated);
}

const PoissonOneSampler& poisson_one() {
  static const PoissonOneSampler sampler;
  return sampler;
}

}  // namespace

GaltonWatsonSample galton_watson_sample(RngSeed seed, int max_depth) {
  if (max_depth < 0) throw Error(ErrorCode::invalid_argument, "max_depth must be >= 0");
  Rng rng(seed);
  GaltonWatsonSample out;
  grow(out.tree, 0, max_depth, rng, poisson_one(), out.truncated);
  return out;
}

RootedTree incipient_cluster_sample(int r, RngSeed seed) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "r must be >= 0");
  Rng rng(seed);
  bool truncated = false;
  // build from the far end of the backbone toward the root
  RootedTree spine;
  for (int depth = r; depth >= 0; --depth) {
    RootedTree node;
    if (depth < r) node.children.push_back(std::move(spine));
    RootedTree extra;
    grow(extra, depth, r, rng, poisson_one(), truncated);
    for (RootedTree& c : extra.children) node.children.push_back(std::move(c));
    spine = std::move(node);
  }
  return spine;
}

Integer tree_map_count(const RootedTree& w, const RootedTree& t) {
  const std::size_t k = t.children.size();
  const std::size_t m = w.children.size();
  if (k == 0) return 1;
  if (k > m) return 0;
  if (k > 20) throw Error(ErrorCode::too_large, "tree node has more than 20 children");

  // ways[i][j]: maps of t's i-th child subtree into w's j-th child subtree
  std::vector<std::vector<Integer>> ways(k, std::vector<Integer>(m));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) ways[i][j] = tree_map_count(w.children[j], t.children[i]);
  }
  // sum over injections of t-children into w-children, by subset DP over the
  // t-children already placed
  std::vector<Integer> dp(std::size_t{1} << k, 0);
  dp[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t mask = dp.size(); mask-- > 0;) {
      if (dp[mask] == 0) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1u) continue;
        if (ways[i][j] == 0) continue;
        dp[mask | (std::size_t{1} << i)] += dp[mask] * ways[i][j];
      }
    }
  }
  return dp.back();
}

namespace {

template <class SampleTree>
MonteCarloEstimate estimate_moment(const RootedTree& t, std::uint64_t samples, RngSeed seed,
                                   SampleTree sample_tree) {
  if (samples < 2) throw Error(ErrorCode::invalid_argument, "need at least 2 samples");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = tree_map_count(sample_tree(derive_seed(seed, i)), t).get_d();
    sum += x;
    sum_sq += x * x;
  }
  const double n = static_cast<double>(samples);
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
  est.std_error = std::sqrt(var / n);
  return est;
}

}  // namespace

MonteCarloEstimate gw_tree_moment(const RootedTree& t, std::uint64_t samples, RngSeed seed) {
  const int depth = static_cast<int>(t.height()) + 1;
  return estimate_moment(t, samples, seed,
                         [depth](RngSeed s) { return galton_watson_sample(s, depth).tree; });
}

MonteCarloEstimate incipient_tree_moment(const RootedTree& t, int r, std::uint64_t samples, RngSeed seed) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "r must be >= 0");
  return estimate_moment(t, samples, seed, [r](RngSeed s) { return incipient_cluster_sample(r, s); });
}

namespace {

// Preorder listing of a rooted tree: parent[i] is the preorder index of the
// parent of vertex i (vertex 0 is the root).
void flatten(const RootedTree& t, std::ptrdiff_t parent, std::vector<std::ptrdiff_t>& parents) {
  const auto self = static_cast<std::ptrdiff_t>(parents.size());
  parents.push_back(parent);
  for (const RootedTree& c : t.children) flatten(c, self, parents);
}

class ImageEnumerator {
 public:
  ImageEnumerator(const Graph& g, const TransferKernel<Rational>& kernel, std::vector<std::ptrdiff_t> parents)
      : g_(g), kernel_(kernel), parents_(std::move(parents)), image_(parents_.size()),
        used_(g.vertex_count(), 0) {}

  Rational run(VertexId root) {
    image_[0] = root;
    used_[root] = 1;
    place(1);
    return total_;
  }

 private:
  void place(std::size_t i) {
    if (i == parents_.size()) {
      if (++images_ > kMaxTreeImages) {
        throw Error(ErrorCode::too_large, "tree has more than " + std::to_string(kMaxTreeImages) + " images");
      }
      total_ += kernel_.prob_edges_in(edges_);
      return;
    }
    const VertexId from = image_[static_cast<std::size_t>(parents_[i])];
    for (const Incidence& inc : g_.incident(from)) {
      if (inc.other == from || used_[inc.other]) continue;
      used_[inc.other] = 1;
      image_[i] = inc.other;
      edges_.push_back(inc.edge);
      place(i + 1);
      edges_.pop_back();
      used_[inc.other] = 0;
    }
  }

  const Graph& g_;
  const TransferKernel<Rational>& kernel_;
  std::vector<std::ptrdiff_t> parents_;
  std::vector<VertexId> image_;
  std::vector<char> used_;
  std::vector<EdgeId> edges_;
  std::uint64_t images_ = 0;
  Rational total_{0};
};

}  // namespace

Rational ust_tree_moment(const Graph& g, VertexId v, const RootedTree& t) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::out_of_range, "vertex id out of range");
  std::vector<std::ptrdiff_t> parents;
  flatten(t, -1, parents);
  if (parents.size() > g.vertex_count()) return Rational(0);
  const TransferKernel<Rational> kernel(g);
  Rational m = ImageEnumerator(g, kernel, std::move(parents)).run(v);
  m.canonicalize();
  return m;
}

namespace {

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace

double spanning_tree_entropy_finite(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "entropy needs n >= 3");
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n) * n);
  const double step = 2.0 * std::numbers::pi / n;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (k == 0 && l == 0) continue;
      logs.push_back(std::log(4.0 - 2.0 * std::cos(step * k) - 2.0 * std::cos(step * l)));
    }
  }
  const double n2 = static_cast<double>(n) * n;
  return (pairwise_sum(logs) - std::log(n2)) / n2;
}

double spanning_tree_entropy_integral(int grid) {
  if (grid < 64) throw Error(ErrorCode::invalid_argument, "quadrature grid must be >= 64");
  const double h = 1.0 / grid;
  std::vector<double> rows(static_cast<std::size_t>(grid));
  std::vector<double> row(static_cast<std::size_t>(grid));
  for (int a = 0; a < grid; ++a) {
    const double cx = std::cos(2.0 * std::numbers::pi * (a + 0.5) * h);
    for (int b = 0; b < grid; ++b) {
      const double cy = std::cos(2.0 * std::numbers::pi * (b + 0.5) * h);
      row[static_cast<std::size_t>(b)] = std::log(4.0 - 2.0 * cx - 2.0 * cy);
    }
    rows[static_cast<std::size_t>(a)] = pairwise_sum(row);
  }
  return pairwise_sum(rows) * h * h;
}

}  // namespace ust

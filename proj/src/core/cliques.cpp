#include "core/cliques.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "core/error.hpp"

namespace cg {

namespace {

struct BronKerbosch {
  const std::vector<Bitset>& adj;
  const std::function<void(const std::vector<std::int32_t>&)>& emit;
  std::vector<std::int32_t> current;

  void expand(const Bitset& p, const Bitset& x) {
    if (p.none() && x.none()) {
      emit(current);
      return;
    }
    // Pivot: vertex of P ∪ X with the most neighbors in P.
    std::size_t best = 0;
    std::ptrdiff_t pivot = -1;
    auto consider = [&](std::size_t u) {
      std::size_t deg = p.count_and(adj[u]);
      if (pivot < 0 || deg > best) {
        best = deg;
        pivot = static_cast<std::ptrdiff_t>(u);
      }
    };
    p.for_each_set(consider);
    x.for_each_set(consider);

    Bitset candidates = p;
    candidates.and_not(adj[static_cast<std::size_t>(pivot)]);

    Bitset live_p = p;
    Bitset live_x = x;
    candidates.for_each_set([&](std::size_t v) {
      Bitset next_p;
      next_p.assign_and(live_p, adj[v]);
      Bitset next_x;
      next_x.assign_and(live_x, adj[v]);
      current.push_back(static_cast<std::int32_t>(v));
      expand(next_p, next_x);
      current.pop_back();
      live_p.reset(v);
      live_x.set(v);
    });
  }
};

struct IdListHash {
  std::size_t operator()(const std::vector<std::int32_t>& ids) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t v : ids) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

void for_each_maximal_clique(const std::vector<Bitset>& adjacency,
                             const std::function<void(const std::vector<std::int32_t>&)>& emit) {
  const std::size_t n = adjacency.size();
  if (n == 0) return;
  Bitset p(n);
  p.set_all();
  Bitset x(n);
  BronKerbosch bk{adjacency, emit, {}};
  bk.expand(p, x);
}

std::vector<std::vector<std::int32_t>> enumerate_cliques(const std::vector<Bitset>& adjacency,
                                                         int k, std::uint64_t cap) {
  if (k < 1) fail_argument("enumerate_cliques: k must be >= 1, got " + std::to_string(k));
  std::unordered_set<std::vector<std::int32_t>, IdListHash> seen;

  std::vector<std::int32_t> sorted_clique;
  std::vector<std::int32_t> subset(static_cast<std::size_t>(k));
  for_each_maximal_clique(adjacency, [&](const std::vector<std::int32_t>& maximal) {
    if (maximal.size() < static_cast<std::size_t>(k)) return;
    sorted_clique = maximal;
    std::sort(sorted_clique.begin(), sorted_clique.end());

    // Walk k-subsets of the maximal clique in lexicographic index order.
    const int s = static_cast<int>(sorted_clique.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      for (int i = 0; i < k; ++i)
        subset[static_cast<std::size_t>(i)] =
            sorted_clique[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      if (seen.insert(subset).second && seen.size() > cap)
        fail_limit("more than " + std::to_string(cap) + " cliques of size " + std::to_string(k) +
                   " (stopped after " + std::to_string(cap) + ")");
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  });

  std::vector<std::vector<std::int32_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cg

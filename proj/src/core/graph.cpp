#include "core/graph.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace cg {

bool realizable(const ConceptClass& cls, const LabeledSequence& s) {
  for (const auto& [p, b] : s) {
    if (p < 0 || p >= cls.domain_size())
      fail_argument("sequence point " + std::to_string(p) + " is outside [0, " +
                    std::to_string(cls.domain_size()) + ")");
    if (b != 0 && b != 1) fail_argument("sequence bit must be 0 or 1, got " + std::to_string(b));
  }
  for (const auto& h : cls.concepts()) {
    bool ok = true;
    for (const auto& [p, b] : s) {
      if (static_cast<int>(h.test(static_cast<std::size_t>(p))) != b) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool contradicts(const LabeledSequence& s, const LabeledSequence& t) {
  for (const auto& [p, b] : s)
    for (const auto& [q, c] : t)
      if (p == q && b != c) return true;
  return false;
}

SignedMask signed_mask(const LabeledSequence& s, int domain_size) {
  SignedMask m{Bitset(static_cast<std::size_t>(domain_size)),
               Bitset(static_cast<std::size_t>(domain_size))};
  for (const auto& [p, b] : s) {
    if (p < 0 || p >= domain_size)
      fail_argument("sequence point " + std::to_string(p) + " is outside [0, " +
                    std::to_string(domain_size) + ")");
    if (b == 1)
      m.positives.set(static_cast<std::size_t>(p));
    else if (b == 0)
      m.negatives.set(static_cast<std::size_t>(p));
    else
      fail_argument("sequence bit must be 0 or 1, got " + std::to_string(b));
  }
  return m;
}

PointSet support(const LabeledSequence& s) {
  PointSet pts;
  pts.reserve(s.size());
  for (const auto& [p, b] : s) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
  return a * b;
}

std::uint64_t projected_vertex_count(int n, int m) {
  std::uint64_t proj = 1;
  for (int i = 0; i < m; ++i) proj = saturating_mul(proj, static_cast<std::uint64_t>(n));
  return saturating_mul(proj, std::uint64_t{1} << std::min(m, 63));
}

}  // namespace

std::vector<LabeledSequence> enumerate_vertices(const ConceptClass& cls, int m,
                                                std::uint64_t cap) {
  if (m < 1) fail_argument("sequence length m must be >= 1, got " + std::to_string(m));
  const int n = cls.domain_size();
  const std::uint64_t proj = projected_vertex_count(n, m);
  if (proj > cap)
    fail_limit("projected vertex count " + std::to_string(proj) + " (n^m * 2^m with n=" +
               std::to_string(n) + ", m=" + std::to_string(m) + ") exceeds cap " +
               std::to_string(cap));

  const auto count = static_cast<std::size_t>(cls.concept_count());
  // Column bitmaps over concepts: cols[b][p] = concepts assigning bit b to p.
  std::vector<Bitset> col1(static_cast<std::size_t>(n), Bitset(count));
  std::vector<Bitset> col0(static_cast<std::size_t>(n), Bitset(count));
  for (std::size_t c = 0; c < count; ++c) {
    const Bitset& h = cls.concepts()[c];
    for (int p = 0; p < n; ++p) {
      if (h.test(static_cast<std::size_t>(p)))
        col1[static_cast<std::size_t>(p)].set(c);
      else
        col0[static_cast<std::size_t>(p)].set(c);
    }
  }

  // Depth-first walk over entries in (point, bit) order; the candidate set of
  // consistent concepts prunes unrealizable prefixes, and the visit order is
  // exactly the canonical vertex order.
  std::vector<LabeledSequence> out;
  std::vector<Bitset> level(static_cast<std::size_t>(m) + 1, Bitset(count));
  level[0].set_all();
  LabeledSequence cur;
  cur.reserve(static_cast<std::size_t>(m));

  auto walk = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      out.push_back(cur);
      return;
    }
    for (int p = 0; p < n; ++p) {
      for (int b = 0; b <= 1; ++b) {
        Bitset& next = level[static_cast<std::size_t>(depth) + 1];
        next.assign_and(level[static_cast<std::size_t>(depth)],
                        (b ? col1 : col0)[static_cast<std::size_t>(p)]);
        if (next.any()) {
          cur.emplace_back(p, b);
          self(self, depth + 1);
          cur.pop_back();
        }
      }
    }
  };
  walk(walk, 0);
  return out;
}

std::int64_t AbstractGraph::edge_count() const {
  std::int64_t total = 0;
  for (const auto& row : rows) total += static_cast<std::int64_t>(row.count());
  return total / 2;
}

ContradictionGraph::ContradictionGraph(int m, std::shared_ptr<const ConceptClass> cls,
                                       std::vector<LabeledSequence> vertices,
                                       std::vector<Bitset> adjacency, int domain_size)
    : m_(m),
      domain_size_(domain_size),
      cls_(std::move(cls)),
      vertices_(std::move(vertices)),
      adjacency_(std::move(adjacency)) {
  masks_.reserve(vertices_.size());
  for (const auto& s : vertices_) masks_.push_back(signed_mask(s, domain_size_));
  for (const auto& row : adjacency_) edge_count_ += static_cast<std::int64_t>(row.count());
  edge_count_ /= 2;
}

std::optional<std::int32_t> ContradictionGraph::find_vertex(const LabeledSequence& s) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it != vertices_.end() && *it == s)
    return static_cast<std::int32_t>(it - vertices_.begin());
  return std::nullopt;
}

void ContradictionGraph::validate_vertex_id(std::int32_t id) const {
  if (id < 0 || id >= vertex_count())
    fail_argument("vertex id " + std::to_string(id) + " is outside [0, " +
                  std::to_string(vertex_count()) + ")");
}

std::vector<std::int32_t> ContradictionGraph::non_neighbor_trace(
    std::span<const std::int32_t> q, std::int32_t t) const {
  validate_vertex_id(t);
  std::vector<std::int32_t> trace;
  for (std::int32_t s : q) {
    validate_vertex_id(s);
    if (!adjacent(s, t)) trace.push_back(s);
  }
  std::sort(trace.begin(), trace.end());
  trace.erase(std::unique(trace.begin(), trace.end()), trace.end());
  return trace;
}

ContradictionGraph build_graph(std::shared_ptr<const ConceptClass> cls, int m,
                               std::uint64_t cap) {
  if (!cls) fail_argument("build_graph: null concept class");
  auto vertices = enumerate_vertices(*cls, m, cap);
  const std::size_t v = vertices.size();
  const int n = cls->domain_size();

  std::vector<SignedMask> masks;
  masks.reserve(v);
  for (const auto& s : vertices) masks.push_back(signed_mask(s, n));

  std::vector<Bitset> adjacency(v, Bitset(v));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (masks[a].positives.intersects(masks[b].negatives) ||
          masks[a].negatives.intersects(masks[b].positives)) {
        adjacency[a].set(b);
        adjacency[b].set(a);
      }
    }
  }
  return ContradictionGraph(m, std::move(cls), std::move(vertices), std::move(adjacency), n);
}

ContradictionGraph build_graph(const ConceptClass& cls, int m, std::uint64_t cap) {
  return build_graph(std::make_shared<const ConceptClass>(cls), m, cap);
}

bool graphs_equal(const ContradictionGraph& a, const ContradictionGraph& b) {
  return a.order() == b.order() && a.vertices() == b.vertices() &&
         a.adjacency() == b.adjacency();
}

AbstractGraph relabel(const ContradictionGraph& g, const std::vector<std::int32_t>& perm) {
  const std::size_t v = static_cast<std::size_t>(g.vertex_count());
  if (perm.size() != v) fail_argument("relabel: permutation size does not match vertex count");
  std::vector<bool> seen(v, false);
  for (std::int32_t p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= v || seen[static_cast<std::size_t>(p)])
      fail_argument("relabel: not a bijection on vertex ids");
    seen[static_cast<std::size_t>(p)] = true;
  }
  AbstractGraph out(v);
  for (std::size_t u = 0; u < v; ++u) {
    g.adjacency()[u].for_each_set([&](std::size_t w) {
      out.rows[static_cast<std::size_t>(perm[u])].set(
          static_cast<std::size_t>(perm[w]));
    });
  }
  return out;
}

std::vector<std::int32_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::int32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::int32_t>(i);
  Rng rng(seed);
  rng.shuffle(perm);
  return perm;
}

}  // namespace cg

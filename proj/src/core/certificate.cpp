#include "core/certificate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "core/cliques.hpp"
#include "core/error.hpp"

namespace cg {

namespace {

CubeWord full_mask(int m) { return static_cast<CubeWord>((std::uint64_t{1} << m) - 1); }

void validate_certificate_shape(std::size_t vertex_count, std::span<const std::int32_t> clique,
                                std::span<const CubeWord> phi, int m) {
  if (m < 1 || m > kMaxCubeDim)
    fail_argument("certificate order must be in [1, " + std::to_string(kMaxCubeDim) + "]");
  const std::size_t k = std::size_t{1} << m;
  if (clique.size() != k)
    fail_argument("clique has " + std::to_string(clique.size()) + " vertices, expected 2^" +
                  std::to_string(m) + " = " + std::to_string(k));
  if (phi.size() != k) fail_argument("phi must assign a cube word to every clique vertex");
  std::vector<bool> used(k, false);
  for (CubeWord w : phi) {
    if (w >= k) fail_argument("phi value " + std::to_string(w) + " is outside {0,1}^" + std::to_string(m));
    if (used[w]) fail_argument("phi is not a bijection: cube word " + std::to_string(w) + " repeats");
    used[w] = true;
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] < 0 || static_cast<std::size_t>(clique[i]) >= vertex_count)
      fail_argument("clique vertex id " + std::to_string(clique[i]) + " is out of range");
    if (i > 0 && clique[i] == clique[i - 1]) fail_argument("clique ids must be distinct");
  }
}

}  // namespace

std::optional<RejectWitness> verify_cube_trace(const std::vector<Bitset>& adjacency,
                                               std::span<const std::int32_t> clique,
                                               std::span<const CubeWord> phi, int m) {
  validate_certificate_shape(adjacency.size(), clique, phi, m);
  const std::size_t k = clique.size();

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!adjacency[static_cast<std::size_t>(clique[i])].test(
              static_cast<std::size_t>(clique[j])))
        return RejectWitness{RejectWitness::Kind::non_adjacent_pair, clique[i], clique[j]};

  std::vector<CubeWord> image;
  image.reserve(k);
  for (std::size_t t = 0; t < adjacency.size(); ++t) {
    image.clear();
    for (std::size_t j = 0; j < k; ++j)
      if (!adjacency[static_cast<std::size_t>(clique[j])].test(t)) image.push_back(phi[j]);
    if (image.empty() || !is_subcube(image, m))
      return RejectWitness{RejectWitness::Kind::bad_trace, static_cast<std::int32_t>(t), -1};
  }
  return std::nullopt;
}

std::optional<RejectWitness> verify_cube_trace(const ContradictionGraph& g,
                                               std::span<const std::int32_t> clique,
                                               std::span<const CubeWord> phi) {
  auto witness = verify_cube_trace(g.adjacency(), clique, phi, g.order());
  if (witness) return witness;

  // Free sanity check: a clique concentrated on one m-point support must be
  // exactly the set of all labelings of it.
  if (g.concept_class()) {
    if (auto r = common_support_shatters(g, clique)) {
      auto expected = forward_certificate(g, *r);
      std::vector<std::int32_t> got(clique.begin(), clique.end());
      std::sort(got.begin(), got.end());
      if (got != expected.clique)
        fail_internal("accepted clique shares support with a shattered set but is not its labeling clique");
    }
  }
  return std::nullopt;
}

CubeTraceCertificate forward_certificate(const ContradictionGraph& g, const PointSet& r) {
  if (!g.concept_class()) fail_argument("forward_certificate: graph carries no concept class");
  const ConceptClass& cls = *g.concept_class();
  const int m = g.order();
  if (static_cast<int>(r.size()) != m)
    fail_argument("forward_certificate: |R| = " + std::to_string(r.size()) +
                  " does not match the graph order m = " + std::to_string(m));
  if (!is_shattered(cls, r)) fail_argument("forward_certificate: the point set is not shattered");

  const std::size_t k = std::size_t{1} << m;
  CubeTraceCertificate cert;
  cert.m = m;
  std::vector<std::pair<std::int32_t, CubeWord>> labeled;
  labeled.reserve(k);
  for (CubeWord w = 0; w < k; ++w) {
    LabeledSequence s;
    s.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      s.emplace_back(r[static_cast<std::size_t>(i)], static_cast<std::int32_t>((w >> i) & 1));
    auto id = g.find_vertex(s);
    if (!id) fail_internal("forward_certificate: labeling vertex missing from the graph");
    labeled.emplace_back(*id, w);
  }
  std::sort(labeled.begin(), labeled.end());
  for (auto& [id, w] : labeled) {
    cert.clique.push_back(id);
    cert.phi.push_back(w);
  }

  // Audit payload: per-vertex trace decompositions (skipped on big graphs).
  if (g.vertex_count() <= 4096) {
    std::vector<CubeWord> image;
    for (std::int32_t t = 0; t < g.vertex_count(); ++t) {
      image.clear();
      for (std::size_t j = 0; j < k; ++j)
        if (!g.adjacent(cert.clique[j], t)) image.push_back(cert.phi[j]);
      auto sub = is_subcube(image, m);
      if (!sub) fail_internal("forward_certificate: a vertex trace is not a subcube");
      cert.traces.emplace_back(t, *sub);
    }
  }

  if (verify_cube_trace(g.adjacency(), cert.clique, cert.phi, m))
    fail_internal("forward_certificate: constructed certificate failed verification");
  return cert;
}

CubeTraceCertificate forward_certificate(const ConceptClass& cls, const PointSet& r, int m,
                                         std::uint64_t cap) {
  return forward_certificate(build_graph(cls, m, cap), r);
}

// ---------------------------------------------------------------------------
// Abstract detection
// ---------------------------------------------------------------------------

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// One representative per adjacency-row class. Vertices with equal rows are
// never adjacent to each other and have equal traces on every clique, so a
// cube-trace clique exists iff one exists among representatives.
struct TwinQuotient {
  std::vector<std::int32_t> reps;  // ascending original ids
  std::vector<Bitset> rows;        // adjacency among representatives
};

TwinQuotient build_twin_quotient(const std::vector<Bitset>& adjacency) {
  TwinQuotient q;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> buckets;
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    auto& bucket = buckets[adjacency[v].hash()];
    bool twin = false;
    for (std::int32_t rep : bucket) {
      if (adjacency[static_cast<std::size_t>(rep)] == adjacency[v]) {
        twin = true;
        break;
      }
    }
    if (!twin) {
      bucket.push_back(static_cast<std::int32_t>(v));
      q.reps.push_back(static_cast<std::int32_t>(v));
    }
  }
  std::sort(q.reps.begin(), q.reps.end());

  const std::size_t r = q.reps.size();
  q.rows.assign(r, Bitset(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Bitset& row = adjacency[static_cast<std::size_t>(q.reps[i])];
    for (std::size_t j = 0; j < r; ++j)
      if (row.test(static_cast<std::size_t>(q.reps[j]))) q.rows[i].set(j);
  }
  return q;
}

struct BudgetExceeded {};
struct Found {};

// Per-clique bijection search over the distinct trace masks. A mask is a
// subset of clique positions; its image under the bijection must come out a
// subcube, and a subcube of size 2^t leaves no room for disagreement on more
// than t coordinates among any of its members.
struct BijectionSearch {
  int m = 0;
  int k = 0;                             // 2^m
  std::vector<std::uint32_t> masks;      // distinct nonempty trace masks
  std::vector<int> log_size;             // log2 popcount(mask)
  std::vector<std::vector<int>> by_bit;  // mask indices containing position j
  std::vector<CubeWord> assigned;        // word per clique position
  std::vector<CubeWord> acc_and, acc_or;
  std::vector<int> acc_cnt;
  std::vector<std::pair<CubeWord, CubeWord>> undo;
  std::uint64_t* nodes = nullptr;
  std::uint64_t node_budget = 0;

  // Words are tried in increasing order at each position; positions are
  // filled left to right, so the first full assignment found is the
  // lexicographically least witness with position 0 pinned to 0^m.
  bool assign_rest(int pos, std::uint32_t used_words) {
    if (pos == k) return true;
    const auto& affected = by_bit[static_cast<std::size_t>(pos)];
    for (CubeWord w = 0; w < static_cast<CubeWord>(k); ++w) {
      if ((used_words >> w) & 1) continue;
      if (++*nodes > node_budget) throw BudgetExceeded{};

      const std::size_t undo_base = undo.size();
      bool pruned = false;
      for (int mi : affected) {
        auto i = static_cast<std::size_t>(mi);
        undo.emplace_back(acc_and[i], acc_or[i]);
        if (acc_cnt[i] == 0) {
          acc_and[i] = w;
          acc_or[i] = w;
        } else {
          acc_and[i] &= w;
          acc_or[i] |= w;
        }
        ++acc_cnt[i];
        if (std::popcount(acc_and[i] ^ acc_or[i]) > log_size[i]) {
          pruned = true;
          break;
        }
      }
      if (!pruned) {
        assigned[static_cast<std::size_t>(pos)] = w;
        if (assign_rest(pos + 1, used_words | (1u << w))) return true;
      }
      while (undo.size() > undo_base) {
        auto idx = static_cast<std::size_t>(affected[undo.size() - undo_base - 1]);
        acc_and[idx] = undo.back().first;
        acc_or[idx] = undo.back().second;
        --acc_cnt[idx];
        undo.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

DetectReport abstract_detect(const std::vector<Bitset>& adjacency, int m,
                             const DetectLimits& limits) {
  if (m < 1) fail_argument("abstract_detect: m must be >= 1");
  if (m > 4) fail_argument("abstract_detect: m > 4 is not supported (trace tables grow as 2^(2^m))");
  Timer timer;
  DetectReport report;

  const int k = 1 << m;
  TwinQuotient q = build_twin_quotient(adjacency);
  report.twin_classes = q.reps.size();
  const std::size_t r = q.reps.size();

  if (r < static_cast<std::size_t>(k)) {
    report.verdict = DetectVerdict::not_found;
    report.elapsed_ms = timer.ms();
    return report;
  }

  std::vector<std::int32_t> clique;  // representative indices, ascending
  std::vector<Bitset> common(static_cast<std::size_t>(k) + 1, Bitset(r));
  common[0].set_all();

  std::vector<bool> mask_seen(std::size_t{1} << k, false);
  BijectionSearch search;
  search.m = m;
  search.k = k;
  search.nodes = &report.bijection_nodes;
  search.node_budget = limits.max_bijection_nodes;
  search.assigned.assign(static_cast<std::size_t>(k), 0);
  search.by_bit.resize(static_cast<std::size_t>(k));

  auto examine = [&]() -> bool {  // true when a certificate was accepted
    if (++report.cliques_examined > limits.max_cliques) throw BudgetExceeded{};

    // Any vertex adjacent to the whole clique has an empty trace.
    if (common[static_cast<std::size_t>(k)].any()) return false;

    // Distinct trace masks over representatives; all are nonempty here.
    search.masks.clear();
    for (std::size_t t = 0; t < r; ++t) {
      std::uint32_t mask = 0;
      for (int j = 0; j < k; ++j)
        if (!q.rows[static_cast<std::size_t>(clique[static_cast<std::size_t>(j)])].test(t))
          mask |= 1u << j;
      if (!mask_seen[mask]) {
        mask_seen[mask] = true;
        search.masks.push_back(mask);
      }
    }
    for (std::uint32_t mask : search.masks) mask_seen[mask] = false;

    bool viable = true;
    for (std::uint32_t mask : search.masks) {
      const int size = std::popcount(mask);
      if ((size & (size - 1)) != 0) {  // subcube images have power-of-two sizes
        viable = false;
        break;
      }
    }
    if (!viable) return false;

    search.log_size.clear();
    for (auto& bucket : search.by_bit) bucket.clear();
    for (std::size_t i = 0; i < search.masks.size(); ++i) {
      search.log_size.push_back(
          std::countr_zero(static_cast<std::uint32_t>(std::popcount(search.masks[i]))));
      for (int j = 0; j < k; ++j)
        if ((search.masks[i] >> j) & 1)
          search.by_bit[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    }
    search.acc_and.assign(search.masks.size(), 0);
    search.acc_or.assign(search.masks.size(), 0);
    search.acc_cnt.assign(search.masks.size(), 0);
    search.undo.clear();

    // Position 0 is pinned to 0^m: XOR-translating any witness moves the
    // lowest clique vertex to the origin, so nothing is lost.
    search.assigned[0] = 0;
    for (int mi : search.by_bit[0]) {
      auto i = static_cast<std::size_t>(mi);
      search.acc_and[i] = 0;
      search.acc_or[i] = 0;
      search.acc_cnt[i] = 1;
    }
    if (!search.assign_rest(1, 1u)) return false;

    CubeTraceCertificate cert;
    cert.m = m;
    for (int j = 0; j < k; ++j) {
      cert.clique.push_back(
          q.reps[static_cast<std::size_t>(clique[static_cast<std::size_t>(j)])]);
      cert.phi.push_back(search.assigned[static_cast<std::size_t>(j)]);
    }
    if (adjacency.size() <= 4096) {
      std::vector<CubeWord> image;
      for (std::size_t t = 0; t < adjacency.size(); ++t) {
        image.clear();
        for (int j = 0; j < k; ++j)
          if (!adjacency[static_cast<std::size_t>(cert.clique[static_cast<std::size_t>(j)])].test(t))
            image.push_back(cert.phi[static_cast<std::size_t>(j)]);
        auto sub = is_subcube(image, m);
        if (!sub) fail_internal("abstract_detect: accepted trace is not a subcube");
        cert.traces.emplace_back(static_cast<std::int32_t>(t), *sub);
      }
    }
    if (verify_cube_trace(adjacency, cert.clique, cert.phi, m))
      fail_internal("abstract_detect: accepted certificate failed verification");
    report.certificate = std::move(cert);
    return true;
  };

  // Lazy k-clique walk in lexicographic order of ascending id lists.
  auto extend = [&](auto&& self, std::size_t depth, std::int32_t from) -> void {
    if (depth == static_cast<std::size_t>(k)) {
      if (examine()) throw Found{};
      return;
    }
    const Bitset& cands = common[depth];
    if (cands.count() + depth < static_cast<std::size_t>(k)) return;
    for (std::ptrdiff_t v = cands.find_next(static_cast<std::size_t>(from));
         v >= 0; v = cands.find_next(static_cast<std::size_t>(v))) {
      clique.push_back(static_cast<std::int32_t>(v));
      common[depth + 1].assign_and(common[depth], q.rows[static_cast<std::size_t>(v)]);
      self(self, depth + 1, static_cast<std::int32_t>(v));
      clique.pop_back();
    }
  };

  try {
    // find_next starts strictly after its argument, so seed with -1.
    const Bitset& all = common[0];
    for (std::ptrdiff_t v = all.find_first(); v >= 0; v = all.find_next(static_cast<std::size_t>(v))) {
      clique.push_back(static_cast<std::int32_t>(v));
      common[1].assign_and(common[0], q.rows[static_cast<std::size_t>(v)]);
      extend(extend, 1, static_cast<std::int32_t>(v));
      clique.pop_back();
    }
    report.verdict = DetectVerdict::not_found;
  } catch (const Found&) {
    report.verdict = DetectVerdict::found;
  } catch (const BudgetExceeded&) {
    report.verdict = DetectVerdict::resource_limit;
    report.certificate.reset();
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// ---------------------------------------------------------------------------
// VC thresholds
// ---------------------------------------------------------------------------

VcMethod vc_method_from_name(const std::string& name) {
  if (name == "oracle") return VcMethod::oracle;
  if (name == "forward") return VcMethod::forward;
  if (name == "abstract") return VcMethod::abstract;
  fail_argument("unknown method '" + name + "' (expected oracle, forward or abstract)");
}

const char* vc_method_name(VcMethod method) {
  switch (method) {
    case VcMethod::oracle: return "oracle";
    case VcMethod::forward: return "forward";
    case VcMethod::abstract: return "abstract";
  }
  return "?";
}

bool vc_at_least(const ConceptClass& cls, int m, VcMethod method, const DetectLimits& limits,
                 std::uint64_t cap) {
  if (m < 1) fail_argument("vc_at_least: m must be >= 1");
  switch (method) {
    case VcMethod::oracle:
      return shatters_some_set(cls, m);
    case VcMethod::forward: {
      auto sets = shattered_sets(cls, m);
      if (sets.empty()) return false;
      auto g = build_graph(cls, m, cap);
      auto cert = forward_certificate(g, sets.front());
      if (verify_cube_trace(g, cert.clique, cert.phi))
        fail_internal("vc_at_least: forward certificate rejected");
      return true;
    }
    case VcMethod::abstract: {
      if (m > limits.max_m)
        fail_limit("abstract method is limited to m <= " + std::to_string(limits.max_m) +
                   " (got m = " + std::to_string(m) + ")");
      auto g = build_graph(cls, m, cap);
      auto report = abstract_detect(g.adjacency(), m, limits);
      if (report.verdict == DetectVerdict::resource_limit)
        fail_limit("abstract detection exhausted its search budget (cliques=" +
                   std::to_string(report.cliques_examined) + ", bijection nodes=" +
                   std::to_string(report.bijection_nodes) + ")");
      return report.verdict == DetectVerdict::found;
    }
  }
  fail_internal("vc_at_least: unreachable");
}

VcEstimate vc_exact_via_graphs(const ConceptClass& cls, int m_max, VcMethod method,
                               const DetectLimits& limits, std::uint64_t cap) {
  if (m_max < 1) fail_argument("vc_exact_via_graphs: m_max must be >= 1");
  for (int m = 1; m <= m_max; ++m)
    if (!vc_at_least(cls, m, method, limits, cap)) return VcEstimate{m - 1, false};
  return VcEstimate{m_max, true};
}

// ---------------------------------------------------------------------------
// Clique diagnostics
// ---------------------------------------------------------------------------

InformativeAudit informative_points(const ContradictionGraph& g,
                                    std::span<const std::int32_t> clique) {
  for (std::int32_t id : clique) g.validate_vertex_id(id);
  const int n = g.domain_size();
  InformativeAudit audit;

  for (std::int32_t x = 0; x < n; ++x) {
    std::int64_t zeros = 0, ones = 0;
    for (std::int32_t id : clique) {
      if (g.mask(id).negatives.test(static_cast<std::size_t>(x))) ++zeros;
      if (g.mask(id).positives.test(static_cast<std::size_t>(x))) ++ones;
    }
    if (zeros > 0 && ones > 0) {
      audit.points.push_back(x);
      audit.counts.push_back({x, zeros, ones});
    }
  }

  audit.in_every_vertex = true;
  for (std::int32_t x : audit.points) {
    for (std::int32_t id : clique) {
      const auto& mask = g.mask(id);
      if (!mask.positives.test(static_cast<std::size_t>(x)) &&
          !mask.negatives.test(static_cast<std::size_t>(x))) {
        audit.in_every_vertex = false;
        break;
      }
    }
    if (!audit.in_every_vertex) break;
  }

  audit.count_equals_m = static_cast<int>(audit.points.size()) == g.order();

  // Labeling map Q -> {0,1}^points; bijective needs completeness, pairwise
  // distinct values, and the right cardinality.
  audit.labelings_bijective = false;
  if (audit.in_every_vertex && audit.points.size() < 63) {
    std::vector<std::uint64_t> labelings;
    for (std::int32_t id : clique) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < audit.points.size(); ++i)
        if (g.mask(id).positives.test(static_cast<std::size_t>(audit.points[i])))
          w |= std::uint64_t{1} << i;
      labelings.push_back(w);
    }
    std::sort(labelings.begin(), labelings.end());
    const bool distinct =
        std::adjacent_find(labelings.begin(), labelings.end()) == labelings.end();
    audit.labelings_bijective =
        distinct && labelings.size() == (std::uint64_t{1} << audit.points.size());
  }
  return audit;
}

SpreadReport support_spread_check(const ContradictionGraph& g, int m, std::uint64_t clique_cap) {
  if (!g.concept_class()) fail_argument("support_spread_check: graph carries no concept class");
  const int vc = vc_dimension(*g.concept_class());
  if (vc >= m)
    fail_argument("support_spread_check requires VC dimension < m, but vc = " +
                  std::to_string(vc) + " and m = " + std::to_string(m));

  SpreadReport report;
  auto cliques = enumerate_cliques(g.adjacency(), 1 << m, clique_cap);
  report.min_spread = 0;
  Bitset touched(static_cast<std::size_t>(g.domain_size()));
  for (const auto& q : cliques) {
    touched.clear();
    for (std::int32_t id : q) {
      touched |= g.mask(id).positives;
      touched |= g.mask(id).negatives;
    }
    const int spread = static_cast<int>(touched.count());
    if (report.cliques_checked == 0 || spread < report.min_spread) report.min_spread = spread;
    ++report.cliques_checked;
    if (spread < m + 1 && !report.violation) report.violation = q;
  }
  return report;
}

std::optional<PointSet> common_support_shatters(const ContradictionGraph& g,
                                                std::span<const std::int32_t> clique) {
  if (!g.concept_class()) fail_argument("common_support_shatters: graph carries no concept class");
  if (clique.size() != (std::size_t{1} << g.order()))
    fail_argument("common_support_shatters: clique must have 2^m vertices");
  for (std::size_t i = 0; i < clique.size(); ++i) {
    g.validate_vertex_id(clique[i]);
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g.adjacent(clique[i], clique[j]))
        fail_argument("common_support_shatters: the given vertex set is not a clique");
  }

  PointSet common = support(g.vertex(clique[0]));
  for (std::size_t i = 1; i < clique.size(); ++i)
    if (support(g.vertex(clique[i])) != common) return std::nullopt;
  if (static_cast<int>(common.size()) != g.order()) return std::nullopt;

  if (!is_shattered(*g.concept_class(), common))
    fail_internal("common_support_shatters: a 2^m-clique concentrated on " +
                  std::to_string(common.size()) + " points whose support is not shattered");
  return common;
}

std::vector<LabeledSequence> tree_clique_sequences(int m, int depth) {
  if (m < 1) fail_argument("tree_clique_sequences: m must be >= 1");
  if (depth < m)
    fail_argument("tree_clique_sequences: depth " + std::to_string(depth) +
                  " is smaller than m = " + std::to_string(m));
  std::vector<LabeledSequence> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << m); ++a) {
    LabeledSequence s;
    s.reserve(static_cast<std::size_t>(m));
    std::string prefix;
    for (int i = 0; i < m; ++i) {
      const int branch_bit = static_cast<int>((a >> i) & 1);
      s.emplace_back(prefix_tree_point_index(prefix), branch_bit == 0 ? 1 : 0);
      prefix.push_back(branch_bit ? '1' : '0');
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::int32_t> tree_clique(const ContradictionGraph& g, int depth) {
  auto sequences = tree_clique_sequences(g.order(), depth);
  std::vector<std::int32_t> ids;
  ids.reserve(sequences.size());
  for (const auto& s : sequences) {
    auto id = g.find_vertex(s);
    if (!id)
      fail_internal("tree_clique: expected vertex missing; is this the order-" +
                    std::to_string(g.order()) + " graph of the depth-" + std::to_string(depth) +
                    " prefix-tree class?");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace cg

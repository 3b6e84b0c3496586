#ifndef CONTRAGRAPH_CORE_CERTIFICATE_HPP
#define CONTRAGRAPH_CORE_CERTIFICATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/cube.hpp"
#include "core/graph.hpp"

namespace cg {

// A 2^m-clique together with a bijection onto {0,1}^m under which every
// vertex of the host graph sees the clique through a subcube-shaped
// non-neighbor set. traces is an optional audit payload: one subcube
// decomposition per host vertex.
struct CubeTraceCertificate {
  int m = 0;
  std::vector<std::int32_t> clique;  // ascending ids
  std::vector<CubeWord> phi;         // phi[i] labels clique[i]
  std::vector<std::pair<std::int32_t, Subcube>> traces;
};

struct RejectWitness {
  enum class Kind { non_adjacent_pair, bad_trace };
  Kind kind;
  std::int32_t u = -1;  // pair member / offending vertex
  std::int32_t v = -1;  // pair member (non_adjacent_pair only)
};

// Accepts (nullopt) iff clique is a 2^m-clique and phi maps every vertex's
// non-neighbor set within the clique onto a nonempty Boolean subcube.
std::optional<RejectWitness> verify_cube_trace(const std::vector<Bitset>& adjacency,
                                               std::span<const std::int32_t> clique,
                                               std::span<const CubeWord> phi, int m);

// Labeled-graph variant; on acceptance additionally cross-checks the
// concentrated-support characterization when the clique has one.
std::optional<RejectWitness> verify_cube_trace(const ContradictionGraph& g,
                                               std::span<const std::int32_t> clique,
                                               std::span<const CubeWord> phi);

// The certificate a shattered m-set r induces: vertices ((r_1,w_1),...,
// (r_m,w_m)) for every word w, labeled by w itself.
CubeTraceCertificate forward_certificate(const ContradictionGraph& g, const PointSet& r);
CubeTraceCertificate forward_certificate(const ConceptClass& cls, const PointSet& r, int m,
                                         std::uint64_t cap = kDefaultVertexCap);

enum class DetectVerdict { found, not_found, resource_limit };

struct DetectLimits {
  std::uint64_t max_cliques = 1000000;
  std::uint64_t max_bijection_nodes = 10000000;
  int max_m = 3;  // guard for the abstract method of vc_at_least
};

struct DetectReport {
  DetectVerdict verdict = DetectVerdict::not_found;
  std::optional<CubeTraceCertificate> certificate;
  std::uint64_t cliques_examined = 0;
  std::uint64_t bijection_nodes = 0;
  std::uint64_t twin_classes = 0;
  double elapsed_ms = 0.0;
};

// Adjacency-only search for a cube-trace clique of size 2^m. Vertices with
// identical adjacency rows are interchangeable for this predicate, so the
// search runs over one representative per row class; cliques are generated
// lazily in lexicographic id order and bijections are explored with the
// lowest clique vertex pinned to 0^m. Budgets turn into a resource_limit
// verdict, never into a wrong found/not_found.
DetectReport abstract_detect(const std::vector<Bitset>& adjacency, int m,
                             const DetectLimits& limits = {});

enum class VcMethod { oracle, forward, abstract };

VcMethod vc_method_from_name(const std::string& name);
const char* vc_method_name(VcMethod method);

// Whether the class shatters some m-set, decided by the chosen route.
// All routes agree; abstract refuses m beyond limits.max_m and reports
// budget exhaustion as a limit error instead of guessing.
bool vc_at_least(const ConceptClass& cls, int m, VcMethod method,
                 const DetectLimits& limits = {}, std::uint64_t cap = kDefaultVertexCap);

struct VcEstimate {
  int value = 0;
  bool saturated = false;  // true: every threshold up to m_max passed
};

VcEstimate vc_exact_via_graphs(const ConceptClass& cls, int m_max,
                               VcMethod method = VcMethod::oracle,
                               const DetectLimits& limits = {},
                               std::uint64_t cap = kDefaultVertexCap);

// Points receiving both bits somewhere in the clique, with per-point counts
// and the audit flags a verified certificate is expected to satisfy.
struct InformativeAudit {
  PointSet points;
  std::vector<std::array<std::int64_t, 3>> counts;  // point, |Q_x^0|, |Q_x^1|
  bool in_every_vertex = false;
  bool count_equals_m = false;
  bool labelings_bijective = false;
};

InformativeAudit informative_points(const ContradictionGraph& g,
                                    std::span<const std::int32_t> clique);

struct SpreadReport {
  std::uint64_t cliques_checked = 0;
  int min_spread = 0;  // 0 when no clique exists
  std::optional<std::vector<std::int32_t>> violation;
};

// For a class of VC dimension < m (re-checked against the oracle): every
// 2^m-clique must touch at least m+1 distinct points.
SpreadReport support_spread_check(const ContradictionGraph& g, int m,
                                  std::uint64_t clique_cap = 1000000);

// The common support of the clique when all vertices share one of size m,
// confirmed shattered by the oracle; nullopt when supports differ.
std::optional<PointSet> common_support_shatters(const ContradictionGraph& g,
                                                std::span<const std::int32_t> clique);

// The 2^m pairwise-contradicting sequences walked along tree branches:
// vertex for word w reads, at each proper prefix of the branch, whether the
// branch leaves it through the left child.
std::vector<LabeledSequence> tree_clique_sequences(int m, int depth);

// Resolves those sequences to vertex ids of g, which must be the order-m
// graph of the depth-`depth` prefix-tree class.
std::vector<std::int32_t> tree_clique(const ContradictionGraph& g, int depth);

}  // namespace cg

#endif

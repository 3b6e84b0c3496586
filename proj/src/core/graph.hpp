#ifndef CONTRAGRAPH_CORE_GRAPH_HPP
#define CONTRAGRAPH_CORE_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/bitset.hpp"
#include "core/concepts.hpp"

namespace cg {

// One (point, bit) observation. A labeled sequence is an ordered list of m
// of them; vertex identity is the ordered sequence, so ((a,1),(b,0)) and
// ((b,0),(a,1)) are distinct vertices.
using SequenceEntry = std::pair<std::int32_t, std::int32_t>;
using LabeledSequence = std::vector<SequenceEntry>;

// Which points a sequence pins to 1 (positives) and to 0 (negatives).
struct SignedMask {
  Bitset positives;
  Bitset negatives;
};

inline constexpr std::uint64_t kDefaultVertexCap = 200000;

bool realizable(const ConceptClass& cls, const LabeledSequence& s);
bool contradicts(const LabeledSequence& s, const LabeledSequence& t);
SignedMask signed_mask(const LabeledSequence& s, int domain_size);
PointSet support(const LabeledSequence& s);

// All realizable length-m sequences in canonical order (lexicographic on the
// entry list, entries compared as (point, bit) pairs). Fails fast when the
// n^m * 2^m projection exceeds the cap.
std::vector<LabeledSequence> enumerate_vertices(const ConceptClass& cls, int m,
                                                std::uint64_t cap = kDefaultVertexCap);

// Adjacency-only view of a graph: dense symmetric irreflexive rows.
struct AbstractGraph {
  AbstractGraph() = default;
  explicit AbstractGraph(std::size_t n) : rows(n, Bitset(n)) {}

  std::size_t vertex_count() const { return rows.size(); }
  std::int64_t edge_count() const;
  void add_edge(std::size_t u, std::size_t v) {
    rows[u].set(v);
    rows[v].set(u);
  }

  std::vector<Bitset> rows;
};

class ContradictionGraph {
 public:
  ContradictionGraph(int m, std::shared_ptr<const ConceptClass> cls,
                     std::vector<LabeledSequence> vertices, std::vector<Bitset> adjacency,
                     int domain_size);

  int order() const { return m_; }
  int domain_size() const { return domain_size_; }
  std::int64_t vertex_count() const { return static_cast<std::int64_t>(vertices_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<LabeledSequence>& vertices() const { return vertices_; }
  const LabeledSequence& vertex(std::int32_t id) const { return vertices_[static_cast<std::size_t>(id)]; }
  const SignedMask& mask(std::int32_t id) const { return masks_[static_cast<std::size_t>(id)]; }
  const std::vector<Bitset>& adjacency() const { return adjacency_; }
  bool adjacent(std::int32_t u, std::int32_t v) const {
    return adjacency_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }

  // Null for graphs imported without concept data.
  const std::shared_ptr<const ConceptClass>& concept_class() const { return cls_; }

  std::optional<std::int32_t> find_vertex(const LabeledSequence& s) const;
  void validate_vertex_id(std::int32_t id) const;

  // Members of q not adjacent to t, ascending.
  std::vector<std::int32_t> non_neighbor_trace(std::span<const std::int32_t> q,
                                               std::int32_t t) const;

 private:
  int m_;
  int domain_size_;
  std::shared_ptr<const ConceptClass> cls_;
  std::vector<LabeledSequence> vertices_;
  std::vector<SignedMask> masks_;
  std::vector<Bitset> adjacency_;
  std::int64_t edge_count_ = 0;
};

ContradictionGraph build_graph(std::shared_ptr<const ConceptClass> cls, int m,
                               std::uint64_t cap = kDefaultVertexCap);
ContradictionGraph build_graph(const ConceptClass& cls, int m,
                               std::uint64_t cap = kDefaultVertexCap);

// Labeled equality: same order, same vertex sequences, same adjacency.
bool graphs_equal(const ContradictionGraph& a, const ContradictionGraph& b);

// Adjacency-only copy with vertex ids renamed by perm (old id u becomes
// perm[u]); sequence labels are dropped on purpose.
AbstractGraph relabel(const ContradictionGraph& g, const std::vector<std::int32_t>& perm);

std::vector<std::int32_t> random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace cg

#endif

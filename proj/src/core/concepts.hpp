#ifndef CONTRAGRAPH_CORE_CONCEPTS_HPP
#define CONTRAGRAPH_CORE_CONCEPTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/bitset.hpp"

namespace cg {

// Sorted, duplicate-free list of domain point indices.
using PointSet = std::vector<std::int32_t>;

inline constexpr int kDefaultGeneratorCap = 20;

// A finite binary concept class: a domain of n points (dense indices 0..n-1)
// and a set of distinct labelings, each stored as an n-bit vector with bit p
// giving the label of point p. Concepts are kept in a canonical order
// (labelings compared as 0/1 strings starting at point 0) so that equal
// classes compare equal as vectors and exports are byte-stable.
class ConceptClass {
 public:
  ConceptClass(int domain_size, std::vector<Bitset> concepts,
               std::vector<std::string> point_names = {});

  int domain_size() const { return domain_size_; }
  std::int64_t concept_count() const { return static_cast<std::int64_t>(concepts_.size()); }
  const std::vector<Bitset>& concepts() const { return concepts_; }
  const std::vector<std::string>& point_names() const { return point_names_; }

  bool operator==(const ConceptClass& o) const {
    return domain_size_ == o.domain_size_ && concepts_ == o.concepts_;
  }

 private:
  int domain_size_;
  std::vector<Bitset> concepts_;
  std::vector<std::string> point_names_;
};

// Named families.
ConceptClass make_full(int n, int cap = kDefaultGeneratorCap);
ConceptClass make_parity(int n, int cap = kDefaultGeneratorCap);
ConceptClass make_prefix_tree(int depth, int cap = kDefaultGeneratorCap);
ConceptClass make_random(int n, std::int64_t count, std::uint64_t seed,
                         int cap = kDefaultGeneratorCap);

// Index of a binary string in the prefix-tree domain order (by length, then
// lexicographic; the empty string comes first).
std::int32_t prefix_tree_point_index(std::string_view node);

// Brute-force shattering oracle: true iff every labeling of r is realized.
bool is_shattered(const ConceptClass& cls, const PointSet& r);

// Largest k such that some k-point set is shattered; 0 if none.
int vc_dimension(const ConceptClass& cls);

// True iff some k-subset of the domain is shattered.
bool shatters_some_set(const ConceptClass& cls, int k);

// All shattered k-subsets in lexicographic order; empty when k > domain size.
std::vector<PointSet> shattered_sets(const ConceptClass& cls, int k);

// Throws unless r is sorted, duplicate-free and within [0, domain_size).
void validate_point_set(const PointSet& r, int domain_size);

}  // namespace cg

#endif

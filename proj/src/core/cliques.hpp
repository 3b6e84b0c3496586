#ifndef CONTRAGRAPH_CORE_CLIQUES_HPP
#define CONTRAGRAPH_CORE_CLIQUES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "core/bitset.hpp"

namespace cg {

// Bron-Kerbosch with pivoting over dense adjacency rows. The callback
// receives each maximal clique as an ascending id list.
void for_each_maximal_clique(const std::vector<Bitset>& adjacency,
                             const std::function<void(const std::vector<std::int32_t>&)>& emit);

// All k-cliques, each an ascending id list, globally deduplicated and sorted.
// Obtained by expanding k-subsets of the maximal cliques. Throws a limit
// error once more than cap distinct k-cliques have been collected.
std::vector<std::vector<std::int32_t>> enumerate_cliques(const std::vector<Bitset>& adjacency,
                                                         int k, std::uint64_t cap);

}  // namespace cg

#endif

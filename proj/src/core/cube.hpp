#ifndef CONTRAGRAPH_CORE_CUBE_HPP
#define CONTRAGRAPH_CORE_CUBE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/rng.hpp"

namespace cg {

// Bit convention, shared by every module that touches {0,1}^m:
//   - a cube word is an m-bit value in a uint32, coordinate i is bit i,
//     coordinate 0 is the least significant bit
//   - coordinate i corresponds to sequence position i+1
using CubeWord = std::uint32_t;

inline constexpr int kMaxCubeDim = 24;

// {w : w & fixed == pattern}; nonempty by construction, pattern ⊆ fixed.
struct Subcube {
  CubeWord fixed = 0;
  CubeWord pattern = 0;
  int dim = 0;

  std::uint64_t size() const;
  bool contains(CubeWord w) const { return (w & fixed) == pattern; }
  bool operator==(const Subcube&) const = default;
};

// Decomposes a set of cube words as a subcube, or returns nullopt when the
// set is empty or not a subcube. Duplicates in the input are ignored.
std::optional<Subcube> is_subcube(std::span<const CubeWord> words, int m);

// For two proper subcubes of {0,1}^m: if their union is the whole cube they
// must be the two halves fixing one coordinate; returns that (coordinate,
// bit-on-the-A-side) witness, or nullopt when the union is proper. Throws
// when either input is not a proper subcube.
std::optional<std::pair<int, int>> facet_cover_check(std::span<const CubeWord> a,
                                                     std::span<const CubeWord> b, int m);

// Hyperoctahedral element: permute coordinates, then XOR the flip mask.
// Output coordinate perm[i] takes the value of input coordinate i.
struct CubeAutomorphism {
  std::vector<int> perm;
  CubeWord flip = 0;
};

CubeAutomorphism identity_automorphism(int m);
CubeAutomorphism random_automorphism(int m, Rng& rng);
CubeWord apply_automorphism(const CubeAutomorphism& g, CubeWord w);

}  // namespace cg

#endif

#include "core/cube.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "core/error.hpp"

namespace cg {

namespace {

void check_dim(int m) {
  if (m < 1 || m > kMaxCubeDim)
    fail_argument("cube dimension must be in [1, " + std::to_string(kMaxCubeDim) + "], got " +
                  std::to_string(m));
}

CubeWord full_mask(int m) { return static_cast<CubeWord>((std::uint64_t{1} << m) - 1); }

std::vector<CubeWord> sorted_unique(std::span<const CubeWord> words, int m) {
  std::vector<CubeWord> ws(words.begin(), words.end());
  for (CubeWord w : ws)
    if (w > full_mask(m))
      fail_argument("cube word " + std::to_string(w) + " is outside {0,1}^" + std::to_string(m));
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

}  // namespace

std::uint64_t Subcube::size() const {
  return std::uint64_t{1} << (dim - std::popcount(fixed));
}

std::optional<Subcube> is_subcube(std::span<const CubeWord> words, int m) {
  check_dim(m);
  auto ws = sorted_unique(words, m);
  if (ws.empty()) return std::nullopt;

  CubeWord all_and = full_mask(m);
  CubeWord all_or = 0;
  for (CubeWord w : ws) {
    all_and &= w;
    all_or |= w;
  }
  // Coordinates where every member agrees; the set sits inside the cube they
  // fix, so it is that cube exactly when the cardinalities match.
  const CubeWord agree = static_cast<CubeWord>(~(all_and ^ all_or)) & full_mask(m);
  const int free_coords = m - std::popcount(agree);
  if (ws.size() != (std::uint64_t{1} << free_coords)) return std::nullopt;
  return Subcube{agree, static_cast<CubeWord>(all_and & agree), m};
}

std::optional<std::pair<int, int>> facet_cover_check(std::span<const CubeWord> a,
                                                     std::span<const CubeWord> b, int m) {
  check_dim(m);
  auto da = is_subcube(a, m);
  auto db = is_subcube(b, m);
  if (!da || da->fixed == 0) fail_argument("facet_cover_check: A is not a proper Boolean subcube");
  if (!db || db->fixed == 0) fail_argument("facet_cover_check: B is not a proper Boolean subcube");

  // Two proper subcubes cover the cube only as complementary facets: same
  // single fixed coordinate, opposite bits.
  if (std::popcount(da->fixed) == 1 && db->fixed == da->fixed &&
      (da->pattern ^ db->pattern) == da->fixed) {
    const int coord = std::countr_zero(da->fixed);
    return std::make_pair(coord, static_cast<int>((da->pattern >> coord) & 1));
  }
  return std::nullopt;
}

CubeAutomorphism identity_automorphism(int m) {
  check_dim(m);
  CubeAutomorphism g;
  g.perm.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) g.perm[static_cast<std::size_t>(i)] = i;
  return g;
}

CubeAutomorphism random_automorphism(int m, Rng& rng) {
  CubeAutomorphism g = identity_automorphism(m);
  rng.shuffle(g.perm);
  g.flip = static_cast<CubeWord>(rng.below(std::uint64_t{1} << m));
  return g;
}

CubeWord apply_automorphism(const CubeAutomorphism& g, CubeWord w) {
  const int m = static_cast<int>(g.perm.size());
  check_dim(m);
  CubeWord out = 0;
  for (int i = 0; i < m; ++i)
    if ((w >> i) & 1) out |= CubeWord{1} << g.perm[static_cast<std::size_t>(i)];
  return (out ^ g.flip) & full_mask(m);
}

}  // namespace cg

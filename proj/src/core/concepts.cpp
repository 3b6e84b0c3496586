#include "core/concepts.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace cg {

namespace {

Bitset bits_from_word(std::uint64_t w, int n) {
  Bitset b(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p)
    if ((w >> p) & 1) b.set(static_cast<std::size_t>(p));
  return b;
}

void check_generator_size(const char* family, int n, int cap) {
  if (n < 1) fail_argument(std::string(family) + ": domain parameter must be >= 1, got " +
                           std::to_string(n));
  if (n > cap)
    fail_limit(std::string(family) + ": parameter " + std::to_string(n) +
               " exceeds the size cap " + std::to_string(cap));
}

}  // namespace

ConceptClass::ConceptClass(int domain_size, std::vector<Bitset> concepts,
                           std::vector<std::string> point_names)
    : domain_size_(domain_size),
      concepts_(std::move(concepts)),
      point_names_(std::move(point_names)) {
  if (domain_size_ < 1) fail_argument("domain_size must be >= 1, got " + std::to_string(domain_size_));
  if (concepts_.empty()) fail_argument("a concept class must contain at least one concept");
  for (const auto& c : concepts_)
    if (c.size() != static_cast<std::size_t>(domain_size_))
      fail_argument("concept length " + std::to_string(c.size()) + " does not match domain_size " +
                    std::to_string(domain_size_));
  if (!point_names_.empty() && point_names_.size() != static_cast<std::size_t>(domain_size_))
    fail_argument("point_names must have one entry per domain point");
  std::sort(concepts_.begin(), concepts_.end(), bit_lex_less);
  concepts_.erase(std::unique(concepts_.begin(), concepts_.end()), concepts_.end());
}

ConceptClass make_full(int n, int cap) {
  check_generator_size("make_full", n, cap);
  std::vector<Bitset> cs;
  cs.reserve(std::size_t{1} << n);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) cs.push_back(bits_from_word(w, n));
  return ConceptClass(n, std::move(cs));
}

ConceptClass make_parity(int n, int cap) {
  check_generator_size("make_parity", n, cap);
  std::vector<Bitset> cs;
  cs.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
    if (std::popcount(w) % 2 == 0) cs.push_back(bits_from_word(w, n));
  return ConceptClass(n, std::move(cs));
}

std::int32_t prefix_tree_point_index(std::string_view node) {
  std::int32_t value = 0;
  for (char c : node) value = value * 2 + (c == '1' ? 1 : 0);
  return static_cast<std::int32_t>((std::int64_t{1} << node.size()) - 1 + value);
}

ConceptClass make_prefix_tree(int depth, int cap) {
  check_generator_size("make_prefix_tree", depth, cap);
  const int n = static_cast<int>((std::int64_t{1} << depth) - 1);

  // Domain: all binary strings of length < depth, by length then lexicographic.
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int len = 0; len < depth; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string s(static_cast<std::size_t>(len), '0');
      for (int j = 0; j < len; ++j)
        if ((v >> (len - 1 - j)) & 1) s[static_cast<std::size_t>(j)] = '1';
      names.push_back(s.empty() ? std::string("ε") : s);
    }
  }

  // One concept per branch: node s is labeled 1 iff s followed by '0' is a
  // prefix of the branch (equality included, which matches restricting the
  // infinite-branch rule to nodes of depth < depth).
  std::vector<Bitset> cs;
  cs.reserve(std::size_t{1} << depth);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << depth); ++a) {
    std::string branch(static_cast<std::size_t>(depth), '0');
    for (int j = 0; j < depth; ++j)
      if ((a >> (depth - 1 - j)) & 1) branch[static_cast<std::size_t>(j)] = '1';
    Bitset concept_bits(static_cast<std::size_t>(n));
    std::int32_t idx = 0;
    for (int len = 0; len < depth; ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v, ++idx) {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int j = 0; j < len; ++j)
          if ((v >> (len - 1 - j)) & 1) s[static_cast<std::size_t>(j)] = '1';
        if (branch.compare(0, s.size(), s) == 0 && branch[s.size()] == '0')
          concept_bits.set(static_cast<std::size_t>(idx));
      }
    }
    cs.push_back(std::move(concept_bits));
  }
  return ConceptClass(n, std::move(cs), std::move(names));
}

ConceptClass make_random(int n, std::int64_t count, std::uint64_t seed, int cap) {
  check_generator_size("make_random", n, cap);
  const std::int64_t universe = std::int64_t{1} << n;
  if (count < 1) fail_argument("make_random: count must be >= 1, got " + std::to_string(count));
  if (count > universe)
    fail_argument("make_random: count " + std::to_string(count) + " exceeds 2^" +
                  std::to_string(n) + " = " + std::to_string(universe) + " distinct labelings");

  std::vector<std::uint32_t> pool(static_cast<std::size_t>(universe));
  std::iota(pool.begin(), pool.end(), 0u);
  Rng rng(seed);
  std::vector<Bitset> cs;
  cs.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(universe - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    cs.push_back(bits_from_word(pool[static_cast<std::size_t>(i)], n));
  }
  return ConceptClass(n, std::move(cs));
}

void validate_point_set(const PointSet& r, int domain_size) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0 || r[i] >= domain_size)
      fail_argument("point index " + std::to_string(r[i]) + " is outside [0, " +
                    std::to_string(domain_size) + ")");
    if (i > 0 && r[i] <= r[i - 1]) fail_argument("point set must be sorted and duplicate-free");
  }
}

bool is_shattered(const ConceptClass& cls, const PointSet& r) {
  if (r.empty()) fail_argument("is_shattered: the point set must be nonempty");
  validate_point_set(r, cls.domain_size());
  const int k = static_cast<int>(r.size());
  if (k > 25) fail_limit("is_shattered: point sets larger than 25 are not supported");
  const std::uint64_t need = std::uint64_t{1} << k;
  if (static_cast<std::uint64_t>(cls.concept_count()) < need) return false;

  Bitset seen(static_cast<std::size_t>(need));
  std::uint64_t distinct = 0;
  for (const auto& h : cls.concepts()) {
    std::uint64_t trace = 0;
    for (int i = 0; i < k; ++i)
      if (h.test(static_cast<std::size_t>(r[static_cast<std::size_t>(i)]))) trace |= std::uint64_t{1} << i;
    if (!seen.test(trace)) {
      seen.set(trace);
      if (++distinct == need) return true;
    }
  }
  return false;
}

namespace {

// Visits k-subsets of [0,n) in lexicographic order until f returns false.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  PointSet c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!f(c)) return;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

int floor_log2(std::uint64_t v) { return 63 - std::countl_zero(v); }

}  // namespace

bool shatters_some_set(const ConceptClass& cls, int k) {
  if (k < 1) fail_argument("shatters_some_set: k must be >= 1");
  if (k > cls.domain_size()) return false;
  if (k > floor_log2(static_cast<std::uint64_t>(cls.concept_count()))) return false;
  bool found = false;
  for_each_combination(cls.domain_size(), k, [&](const PointSet& r) {
    if (is_shattered(cls, r)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

int vc_dimension(const ConceptClass& cls) {
  const int bound =
      std::min(cls.domain_size(), floor_log2(static_cast<std::uint64_t>(cls.concept_count())));
  for (int k = 1; k <= bound; ++k)
    if (!shatters_some_set(cls, k)) return k - 1;
  return bound;
}

std::vector<PointSet> shattered_sets(const ConceptClass& cls, int k) {
  if (k < 1) fail_argument("shattered_sets: k must be >= 1");
  std::vector<PointSet> out;
  if (k > cls.domain_size()) return out;
  for_each_combination(cls.domain_size(), k, [&](const PointSet& r) {
    if (is_shattered(cls, r)) out.push_back(r);
    return true;
  });
  return out;
}

}  // namespace cg

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "core/concepts.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

using namespace cg;

namespace {

std::string concept_string(const Bitset& c, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    if (c.test(static_cast<std::size_t>(p))) s[static_cast<std::size_t>(p)] = '1';
  return s;
}

std::set<std::string> concept_strings(const ConceptClass& cls) {
  std::set<std::string> out;
  for (const auto& c : cls.concepts()) out.insert(concept_string(c, cls.domain_size()));
  return out;
}

// Filter oracle: enumerate all labelings of [n] and keep the even ones.
std::set<std::string> even_parity_oracle(int n) {
  std::set<std::string> out;
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) {
    if (std::popcount(w) % 2 != 0) continue;
    std::string s(static_cast<std::size_t>(n), '0');
    for (int p = 0; p < n; ++p)
      if ((w >> p) & 1) s[static_cast<std::size_t>(p)] = '1';
    out.insert(s);
  }
  return out;
}

// Brute-force shattering check written independently of is_shattered.
bool shattered_oracle(const ConceptClass& cls, const PointSet& r) {
  for (std::uint32_t want = 0; want < (std::uint32_t{1} << r.size()); ++want) {
    bool realized = false;
    for (const auto& h : cls.concepts()) {
      bool match = true;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (h.test(static_cast<std::size_t>(r[i])) != (((want >> i) & 1) != 0)) {
          match = false;
          break;
        }
      if (match) {
        realized = true;
        break;
      }
    }
    if (!realized) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("full class sizes and bounds") {
  CHECK(make_full(1).concept_count() == 2);
  CHECK(make_full(3).concept_count() == 8);
  CHECK(make_full(3).domain_size() == 3);
  CHECK_THROWS_AS(make_full(0), Error);
  CHECK_THROWS_AS(make_full(-2), Error);

  try {
    make_full(21);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit);
    CHECK(std::string(e.what()).find("21") != std::string::npos);
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("parity class matches the filter oracle") {
  CHECK(concept_strings(make_parity(1)) == std::set<std::string>{"0"});
  CHECK(concept_strings(make_parity(2)) == std::set<std::string>{"00", "11"});
  CHECK(concept_strings(make_parity(3)) ==
        std::set<std::string>{"000", "011", "101", "110"});
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(concept_strings(make_parity(n, 20)) == even_parity_oracle(n));
    CHECK(make_parity(n).concept_count() == (std::int64_t{1} << (n - 1)));
  }
}

TEST_CASE("prefix tree domain order and concepts") {
  auto d1 = make_prefix_tree(1);
  CHECK(d1.domain_size() == 1);
  CHECK(d1.point_names() == std::vector<std::string>{"ε"});
  CHECK(concept_strings(d1) == std::set<std::string>{"0", "1"});

  auto d2 = make_prefix_tree(2);
  CHECK(d2.domain_size() == 3);
  CHECK(d2.point_names() == std::vector<std::string>{"ε", "0", "1"});
  // Branch rule applied by hand: 00 -> 110, 01 -> 100, 10 -> 001, 11 -> 000.
  CHECK(concept_strings(d2) == std::set<std::string>{"110", "100", "001", "000"});

  for (int depth = 1; depth <= 5; ++depth) {
    CAPTURE(depth);
    auto cls = make_prefix_tree(depth);
    CHECK(cls.domain_size() == (1 << depth) - 1);
    CHECK(cls.concept_count() == (std::int64_t{1} << depth));  // branches stay distinct
  }

  CHECK(prefix_tree_point_index("") == 0);
  CHECK(prefix_tree_point_index("0") == 1);
  CHECK(prefix_tree_point_index("1") == 2);
  CHECK(prefix_tree_point_index("00") == 3);
  CHECK(prefix_tree_point_index("11") == 6);
}

TEST_CASE("prefix tree concepts follow the branch rule on small depths") {
  for (int depth = 1; depth <= 3; ++depth) {
    auto cls = make_prefix_tree(depth);
    // Recompute every concept from strings, independently of the generator's
    // index arithmetic.
    std::set<std::string> expected;
    const int n = cls.domain_size();
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << depth); ++a) {
      std::string branch;
      for (int j = depth - 1; j >= 0; --j) branch.push_back(((a >> j) & 1) ? '1' : '0');
      std::string s(static_cast<std::size_t>(n), '0');
      int idx = 0;
      for (int len = 0; len < depth; ++len) {
        for (std::uint32_t v = 0; v < (std::uint32_t{1} << len); ++v, ++idx) {
          std::string node;
          for (int j = len - 1; j >= 0; --j) node.push_back(((v >> j) & 1) ? '1' : '0');
          const std::string probe = node + "0";
          if (branch.compare(0, probe.size(), probe) == 0)
            s[static_cast<std::size_t>(idx)] = '1';
        }
      }
      expected.insert(s);
    }
    CAPTURE(depth);
    CHECK(concept_strings(cls) == expected);
  }
}

TEST_CASE("random classes are deterministic and feasible") {
  auto a = make_random(4, 5, 1);
  auto b = make_random(4, 5, 1);
  CHECK(a == b);
  CHECK(a.concept_count() == 5);

  CHECK(make_random(3, 8, 99) == make_full(3));
  CHECK_THROWS_AS(make_random(2, 5, 1), Error);
  CHECK_THROWS_AS(make_random(3, 0, 1), Error);

  // Different seeds should disagree somewhere across a few draws.
  bool any_difference = false;
  for (std::uint64_t seed = 2; seed < 8 && !any_difference; ++seed)
    any_difference = !(make_random(4, 5, seed) == a);
  CHECK(any_difference);
}

TEST_CASE("class construction rejects bad input") {
  CHECK_THROWS_AS(ConceptClass(1, {}), Error);
  std::vector<Bitset> wrong;
  wrong.emplace_back(3);
  CHECK_THROWS_AS(ConceptClass(2, std::move(wrong)), Error);

  // duplicates collapse
  std::vector<Bitset> dup;
  dup.emplace_back(2);
  dup.emplace_back(2);
  dup[1].set(0);
  dup.push_back(dup[1]);
  ConceptClass cls(2, std::move(dup));
  CHECK(cls.concept_count() == 2);
}

TEST_CASE("shattering matches the parity facts") {
  CHECK(is_shattered(make_full(3), {0, 1, 2}));
  CHECK_FALSE(is_shattered(make_parity(3), {0, 1, 2}));
  CHECK(is_shattered(make_parity(3), {0, 1}));
  CHECK_THROWS_AS(is_shattered(make_full(3), {}), Error);
  CHECK_THROWS_AS(is_shattered(make_full(3), {0, 3}), Error);
  CHECK_THROWS_AS(is_shattered(make_full(3), {1, 0}), Error);
}

TEST_CASE("shattering agrees with the brute-force oracle on random classes") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const std::int64_t count =
        1 + static_cast<std::int64_t>(splitmix64(seed) % std::min<std::uint64_t>(12, 1u << n));
    auto cls = make_random(n, count, seed);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        PointSet r{a, b};
        CAPTURE(seed); CAPTURE(a); CAPTURE(b);
        CHECK(is_shattered(cls, r) == shattered_oracle(cls, r));
      }
    }
  }
}

TEST_CASE("vc dimension of the named families") {
  CHECK(vc_dimension(make_full(1)) == 1);
  CHECK(vc_dimension(make_full(4)) == 4);
  CHECK(vc_dimension(make_parity(4)) == 3);
  for (int n = 2; n <= 5; ++n) {
    CHECK(vc_dimension(make_full(n)) == n);
    CHECK(vc_dimension(make_parity(n)) == n - 1);
  }
  for (int depth = 1; depth <= 4; ++depth) CHECK(vc_dimension(make_prefix_tree(depth)) == 1);

  // single concept shatters nothing
  std::vector<Bitset> one;
  one.emplace_back(3);
  CHECK(vc_dimension(ConceptClass(3, std::move(one))) == 0);
}

TEST_CASE("shattered set listing") {
  auto sets2 = shattered_sets(make_full(2), 2);
  REQUIRE(sets2.size() == 1);
  CHECK(sets2[0] == PointSet{0, 1});

  CHECK(shattered_sets(make_parity(3), 3).empty());
  auto pairs = shattered_sets(make_parity(3), 2);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == PointSet{0, 1});
  CHECK(pairs[1] == PointSet{0, 2});
  CHECK(pairs[2] == PointSet{1, 2});

  CHECK(shattered_sets(make_full(2), 3).empty());  // k beyond the domain
  CHECK_THROWS_AS(shattered_sets(make_full(2), 0), Error);
}

TEST_CASE("shattering is monotone and bounded by the concept count") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const std::int64_t count =
        1 + static_cast<std::int64_t>(splitmix64(seed) % std::min<std::uint64_t>(12, 1u << n));
    auto cls = make_random(n, count, seed);
    const int vc = vc_dimension(cls);
    CAPTURE(seed); CAPTURE(n); CAPTURE(count); CAPTURE(vc);

    CHECK(vc <= 63 - std::countl_zero(static_cast<std::uint64_t>(cls.concept_count())));
    for (int k = 1; k <= vc; ++k) CHECK_FALSE(shattered_sets(cls, k).empty());
    CHECK(shattered_sets(cls, vc + 1).empty());

    // subsets of shattered sets stay shattered
    for (const auto& r : shattered_sets(cls, std::max(vc, 1))) {
      for (std::size_t drop = 0; drop < r.size() && r.size() > 1; ++drop) {
        PointSet sub;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (i != drop) sub.push_back(r[i]);
        CHECK(is_shattered(cls, sub));
      }
    }
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "spreadlab/exact.hpp"
#include "spreadlab/family.hpp"
#include "spreadlab/perm.hpp"
#include "spreadlab/prob.hpp"

using namespace spreadlab;

namespace {

// 1-indexed convenience constructor mirroring the file format
SetFamily fam(int n, std::vector<std::vector<int>> sets) {
  for (auto& s : sets)
    for (int& e : s) --e;
  return make_family(n, sets);
}

Bitset mask(int n, std::vector<int> elems) {
  Bitset b(n);
  for (int e : elems) b.set(e - 1);
  return b;
}

SetFamily fano() {
  return fam(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

// independent brute-force cover oracle: try all element subsets by size
int brute_cover(const SetFamily& F) {
  int n = F.n();
  for (int size = 0; size <= n; ++size) {
    bool found = false;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    enumerate_combinations(pool, size, [&](const std::vector<int>& sub) {
      if (found) return;
      Bitset c(n);
      for (int e : sub) c.set(e);
      for (const Bitset& m : F.members())
        if (!m.intersects(c)) return;
      found = true;
    });
    if (found) return size;
  }
  return n;
}

}  // namespace

TEST_CASE("family canonicalization and uniformity") {
  SetFamily F = fam(4, {{2, 3}, {1, 2}, {2, 3}});
  CHECK(F.size() == 2);
  CHECK(F.uniform_k() == 2);
  CHECK(F == fam(4, {{1, 2}, {2, 3}}));
  CHECK(!fam(4, {{1}, {1, 2}}).uniform_k().has_value());
}

TEST_CASE("link basics") {
  SetFamily F = fam(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(link(F, mask(3, {1})) == fam(3, {{2}, {3}}));
  CHECK(link(F, mask(3, {})) == F);
  CHECK(link(F, mask(3, {1, 2, 3})).empty());
}

TEST_CASE("link on the permutation family counts (n-|S|)!") {
  SetFamily sigma4 = to_grid_family(all_permutations(4));
  Bitset s(16);
  s.set(0);  // pair (1,1)
  CHECK(link(sigma4, s).size() == 6);
}

TEST_CASE("avoid") {
  SetFamily F = fam(4, {{1, 2}, {3, 4}});
  CHECK(avoid(F, mask(4, {1})) == fam(4, {{3, 4}}));
  CHECK(avoid(F, mask(4, {})) == F);
  CHECK(avoid(fam(4, {{1, 2}, {1, 3}, {2, 3}}), mask(4, {1, 2})).empty());
}

TEST_CASE("slice") {
  SetFamily F = fam(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(slice(F, mask(3, {1}), mask(3, {1, 2})) == fam(3, {{3}}));
  CHECK(slice(F, mask(3, {}), mask(3, {})) == F);
  SetFamily G = fam(4, {{1, 2}, {3, 4}});
  CHECK(slice(G, mask(4, {}), mask(4, {1})) == fam(4, {{3, 4}}));
  CHECK_THROWS_AS(slice(F, mask(3, {1}), mask(3, {2})), std::invalid_argument);
}

TEST_CASE("contains_some") {
  SetFamily A = full_ambient(3, 2);
  CHECK(contains_some(A, fam(3, {{1}})) == fam(3, {{1, 2}, {1, 3}}));
  CHECK(contains_some(A, SetFamily(GroundSet(3), {})).empty());

  // the two permutations of [3] fixing 1, derived by enumerating all six
  SetFamily sigma3 = to_grid_family(all_permutations(3));
  Bitset cell(9);
  cell.set(0);
  SetFamily hits = contains_some(sigma3, SetFamily(GroundSet(9), {cell}));
  size_t expect = 0;
  for (const auto& p : all_permutations(3).perms) expect += p[0] == 0;
  CHECK(expect == 2);
  CHECK(hits.size() == expect);
}

TEST_CASE("contains_some union identity and subadditivity") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + int(rng.next_u64() % 4);
    SetFamily A = full_ambient(n, 3);
    auto random_fam = [&](int count, int maxk) {
      std::vector<Bitset> mem;
      for (int i = 0; i < count; ++i) {
        Bitset b(n);
        int k = 1 + int(rng.next_u64() % maxk);
        while (b.count() < k) b.set(int(rng.next_u64() % n));
        mem.push_back(b);
      }
      return SetFamily(GroundSet(n), mem);
    };
    SetFamily S1 = random_fam(3, 3), S2 = random_fam(3, 3);
    std::vector<Bitset> both = S1.members();
    for (const Bitset& m : S2.members()) both.push_back(m);
    SetFamily SU(GroundSet(n), both);
    SetFamily lhs = contains_some(A, SU);
    SetFamily r1 = contains_some(A, S1), r2 = contains_some(A, S2);
    std::vector<Bitset> uni = r1.members();
    for (const Bitset& m : r2.members()) uni.push_back(m);
    CHECK(lhs == SetFamily(GroundSet(n), uni));
    CHECK(lhs.size() <= r1.size() + r2.size());
  }
}

TEST_CASE("lower shadow") {
  CHECK(lower_shadow(fam(3, {{1, 2}, {2, 3}}), 1) == fam(3, {{1}, {2}, {3}}));
  CHECK(lower_shadow(fam(3, {{1, 2}}), 0) == fam(3, {{}}));
  CHECK(lower_shadow(full_ambient(4, 3), 2) == full_ambient(4, 2));
}

TEST_CASE("upper shadow") {
  CHECK(upper_shadow(fam(3, {{1}}), 2) == fam(3, {{1, 2}, {1, 3}}));
  CHECK(upper_shadow(fam(3, {{1, 3}}), 3) == fam(3, {{1, 2, 3}}));
  CHECK(upper_shadow(fam(4, {{1, 2}, {3, 4}}), 3) == full_ambient(4, 3));
  CHECK_THROWS_AS(upper_shadow(fam(3, {{1}}), 4), std::invalid_argument);
}

TEST_CASE("shadow round trip covers the family") {
  SetFamily F = fam(6, {{1, 2}, {2, 5}, {3, 4}});
  SetFamily up = upper_shadow(F, 4);
  SetFamily back = lower_shadow(up, 2);
  for (const Bitset& m : F.members()) CHECK(back.contains(m));
}

TEST_CASE("t-intersection predicates") {
  CHECK(is_t_intersecting(fam(4, {{1, 2}, {1, 3}, {1, 4}}), 1));
  CHECK(!is_t_intersecting(fam(5, {{1, 2, 3}, {1, 4, 5}}), 2));
  CHECK(!is_t_intersecting(fam(2, {{1, 2}}), 3));  // diagonal |A cap A| = 2 < 3
  CHECK(is_t_intersecting(SetFamily(GroundSet(3), {}), 5));
}

TEST_CASE("avoids_intersection") {
  CHECK(avoids_intersection(fam(3, {{1, 2}, {1, 3}}), 0));
  CHECK(!avoids_intersection(fam(4, {{1, 2}, {3, 4}}), 0));
  // identity and the transposition (12) share only the fixed point 3
  SetFamily two = to_grid_family(make_perm_family(3, {{0, 1, 2}, {1, 0, 2}}));
  CHECK(perm_intersection({0, 1, 2}, {1, 0, 2}) == 1);
  CHECK(avoids_intersection(two, 0));
  CHECK(!avoids_intersection(two, 1));
}

TEST_CASE("t-cross-dependence") {
  std::vector<SetFamily> fs = {fam(4, {{1, 2}}), fam(4, {{1, 3}})};
  CHECK(is_t_cross_dependent(fs, 1));
  fs = {fam(4, {{1, 2}}), fam(4, {{3, 4}})};
  CHECK(!is_t_cross_dependent(fs, 1));
  fs = {fam(3, {{1, 2}, {1, 3}}), fam(3, {{1, 2}, {1, 3}})};
  CHECK(is_t_cross_dependent(fs, 1));
  // single family: the condition |A| <= |A| - t never holds for t >= 1
  fs = {fam(3, {{1, 2}})};
  CHECK(!is_t_cross_dependent(fs, 1));
}

TEST_CASE("cover number") {
  CHECK(cover_number(fam(3, {{1, 2}, {2, 3}})) == 1);
  CHECK(cover_number(fam(4, {{1, 2}, {3, 4}})) == 2);
  CHECK(cover_number(full_ambient(4, 2)) == 3);
  CHECK(cover_number(SetFamily(GroundSet(3), {})) == 0);
  CHECK_THROWS_AS(cover_number(fam(3, {{}})), std::invalid_argument);
}

TEST_CASE("cover number agrees with brute force on random families") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + int(rng.next_u64() % 5);
    std::vector<Bitset> mem;
    int count = 2 + int(rng.next_u64() % 6);
    for (int i = 0; i < count; ++i) {
      Bitset b(n);
      int k = 1 + int(rng.next_u64() % 3);
      while (b.count() < k) b.set(int(rng.next_u64() % n));
      mem.push_back(b);
    }
    SetFamily F(GroundSet(n), mem);
    CHECK(cover_number(F) == brute_cover(F));
  }
}

TEST_CASE("regularity of families") {
  CHECK(is_regular(full_ambient(4, 2)));
  CHECK(!is_regular(fam(3, {{1, 2}})));
  CHECK(is_regular(fano()));
  auto deg = element_degrees(fano());
  for (int d : deg) CHECK(d == 3);
  CHECK(is_t_intersecting(fano(), 1));
}

TEST_CASE("link composition invariant") {
  SetFamily F = full_ambient(6, 3);
  Bitset S = mask(6, {1}), T = mask(6, {3});
  CHECK(link(link(F, S), T) == link(F, S | T));
}

TEST_CASE("full ambient link counts match binomials") {
  for (int n : {5, 7}) {
    for (int k : {2, 3}) {
      SetFamily A = full_ambient(n, k);
      for (const auto& [X, c] : member_subset_counts(A, k)) {
        int a = X.count();
        CHECK(BigInt(c) == binomial(n - a, k - a));
      }
    }
  }
}

TEST_CASE("ground set validation") {
  CHECK_THROWS_AS(SetFamily(GroundSet(0), {}), std::invalid_argument);
  Bitset wrong(5);
  CHECK_THROWS_AS(SetFamily(GroundSet(4), {wrong}), std::invalid_argument);
  CHECK_THROWS_AS(link(fam(3, {{1}}), Bitset(4)), std::invalid_argument);
}

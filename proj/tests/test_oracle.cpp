#include <doctest.h>

#include <algorithm>

#include "spreadlab/family.hpp"
#include "spreadlab/oracle.hpp"
#include "spreadlab/perm.hpp"

using namespace spreadlab;

namespace {

SetFamily fam(int n, std::vector<std::vector<int>> sets) {
  for (auto& s : sets)
    for (int& e : s) --e;
  return make_family(n, sets);
}

// exhaustive subfamily oracle for tiny ambients
long long brute_max_subfamily(const SetFamily& A, const std::function<bool(const SetFamily&)>& ok) {
  REQUIRE(A.size() <= 16);
  long long best = 0;
  for (uint32_t pick = 0; pick < (1u << A.size()); ++pick) {
    std::vector<Bitset> mem;
    for (size_t i = 0; i < A.size(); ++i)
      if (pick >> i & 1) mem.push_back(A[i]);
    SetFamily F(A.ground(), mem);
    if (ok(F)) best = std::max<long long>(best, (long long)F.size());
  }
  return best;
}

}  // namespace

TEST_CASE("max intersecting pairs of [5] matches the star bound") {
  ExtremalResult r = max_t_intersecting(full_ambient(5, 2), 1);
  CHECK(r.optimum == 4);
  CHECK(r.proved_optimal);
  CHECK(is_t_intersecting(r.witness, 1));
  CHECK(r.witness.size() == 4);
}

TEST_CASE("max intersecting triples of [7]") {
  ExtremalResult r = max_t_intersecting(full_ambient(7, 3), 1);
  CHECK(r.optimum == 15);
  CHECK(r.proved_optimal);
  CHECK(is_t_intersecting(r.witness, 1));
}

TEST_CASE("max intersecting pairs of [6]") {
  ExtremalResult r = max_t_intersecting(full_ambient(6, 2), 1);
  CHECK(r.optimum == 5);
  CHECK(r.proved_optimal);
}

TEST_CASE("max intersecting permutations at n = 3, 4") {
  ExtremalResult r3 = max_t_intersecting(to_grid_family(all_permutations(3)), 1);
  CHECK(r3.optimum == 2);
  CHECK(r3.proved_optimal);
  ExtremalResult r4 = max_t_intersecting(to_grid_family(all_permutations(4)), 1);
  CHECK(r4.optimum == 6);
  CHECK(r4.proved_optimal);
  CHECK(is_t_intersecting(r4.witness, 1));
}

TEST_CASE("max intersecting agrees with brute force on Sigma_3") {
  SetFamily sigma3 = to_grid_family(all_permutations(3));
  long long expect =
      brute_max_subfamily(sigma3, [](const SetFamily& F) { return is_t_intersecting(F, 1); });
  CHECK(max_t_intersecting(sigma3, 1).optimum == expect);
}

TEST_CASE("budget exhaustion is honest") {
  ExtremalResult r = max_t_intersecting(full_ambient(7, 3), 1, 3);
  CHECK(!r.proved_optimal);
  CHECK(r.optimum <= 15);
  CHECK(is_t_intersecting(r.witness, 1));
}

TEST_CASE("max avoiding on Sigma_3") {
  SetFamily sigma3 = to_grid_family(all_permutations(3));
  ExtremalResult r = max_avoiding(sigma3, 1);
  CHECK(r.optimum == 2);
  CHECK(r.proved_optimal);
  CHECK(avoids_intersection(r.witness, 0));
  long long expect =
      brute_max_subfamily(sigma3, [](const SetFamily& F) { return avoids_intersection(F, 0); });
  CHECK(r.optimum == expect);
}

TEST_CASE("max avoiding on pairs of [4] at t = 2") {
  SetFamily A = full_ambient(4, 2);
  ExtremalResult r = max_avoiding(A, 2);
  long long expect =
      brute_max_subfamily(A, [](const SetFamily& F) { return avoids_intersection(F, 1); });
  CHECK(r.optimum == expect);
  CHECK(r.proved_optimal);
  CHECK(avoids_intersection(r.witness, 1));
}

TEST_CASE("max avoiding single member") {
  ExtremalResult r = max_avoiding(fam(4, {{1, 2}}), 1);
  CHECK(r.optimum == 1);
}

TEST_CASE("triviality of t-intersecting families") {
  auto w1 = is_trivial_t_intersecting(fam(4, {{1, 2}, {1, 3}}), 1);
  REQUIRE(w1.has_value());
  CHECK(w1->test(0));
  CHECK(w1->count() == 1);

  CHECK(!is_trivial_t_intersecting(fam(4, {{1, 2}, {1, 3}, {2, 3}}), 1).has_value());

  // star at the (1,1) cell inside Sigma_3
  SetFamily sigma3 = to_grid_family(all_permutations(3));
  std::vector<Bitset> star;
  for (const Bitset& m : sigma3.members())
    if (m.test(0)) star.push_back(m);
  auto w3 = is_trivial_t_intersecting(SetFamily(sigma3.ground(), star), 1);
  REQUIRE(w3.has_value());
  CHECK(w3->test(0));

  CHECK_THROWS_AS(is_trivial_t_intersecting(fam(4, {{1, 2}, {3, 4}}), 1), std::invalid_argument);
}

TEST_CASE("hilton-milner permutation family at n=4, t=2") {
  HiltonMilnerFamily hm = hilton_milner_perm_family(4, 2);
  CHECK(hm.sigma == std::vector<int>{1, 0, 2, 3});
  SetFamily grid = to_grid_family(hm.family);
  CHECK(avoids_intersection(grid, 1));
  CHECK(common_intersection(grid).count() < 2);  // non-trivial
  // not 2-intersecting: sigma meets the tail-swapped member in 0 points
  CHECK(!is_t_intersecting(grid, 2));
  CHECK_THROWS_AS(is_trivial_t_intersecting(grid, 2), std::invalid_argument);
}

TEST_CASE("hilton-milner degenerates at t=1 to a trivial star") {
  HiltonMilnerFamily hm = hilton_milner_perm_family(3, 1);
  SetFamily grid = to_grid_family(hm.family);
  CHECK(avoids_intersection(grid, 0));
  CHECK(common_intersection(grid).count() >= 1);  // trivial: everything fixes 1
  CHECK(hm.family.size() == 2);                   // permutations of [3] fixing 1
}

TEST_CASE("hilton-milner size grows monotonically across n") {
  for (int t : {2, 3}) {
    size_t prev = 0;
    for (int n = t + 2; n <= t + 5; ++n) {
      HiltonMilnerFamily hm = hilton_milner_perm_family(n, t);
      CHECK(hm.family.size() > prev);
      // |P| = (n-t)! - #(tails with exactly t-1 fixed points) + 1
      BigInt excluded =
          binomial(n - t, t - 1) * derangement_count(n - t - (t - 1));
      CHECK(BigInt(hm.family.size()) == factorial(n - t) - excluded + 1);
      prev = hm.family.size();
    }
  }
}

TEST_CASE("derangement counts") {
  CHECK(derangement_count(0) == 1);
  CHECK(derangement_count(1) == 0);
  CHECK(derangement_count(3) == 2);
  CHECK(derangement_count(4) == 9);
  CHECK(derangement_count(5) == 44);
}

TEST_CASE("derangements match the alternating-series oracle") {
  for (int m = 0; m <= 30; ++m) {
    // D(m) = m! sum_j (-1)^j / j!, exactly
    BigInt expect = 0;
    for (int j = 0; j <= m; ++j) {
      BigInt term = factorial(m) / factorial(j);
      expect += (j % 2 == 0) ? term : -term;
    }
    CHECK(derangement_count(m) == expect);
  }
}

TEST_CASE("intersection classes for n=4, t=1") {
  IntersectionClassCounts c = count_intersection_classes(4, 1, {1, 0, 2, 3});
  CHECK(c.counts.at(0) == 3);
  CHECK(c.total == 6);
  CHECK(c.class_t_minus_1 == 3);
  CHECK(c.bound_ok);  // 3 >= 1.5
  long long sum = 0;
  for (auto [i, v] : c.counts) sum += v;
  CHECK(BigInt(sum) == c.total);
}

TEST_CASE("intersection classes mass conservation at n=3") {
  IntersectionClassCounts c = count_intersection_classes(3, 1, {1, 2, 0});
  long long sum = 0;
  for (auto [i, v] : c.counts) sum += v;
  CHECK(BigInt(sum) == factorial(2));
}

TEST_CASE("intersection classes bound at n=5, t=2") {
  IntersectionClassCounts c = count_intersection_classes(5, 2, {1, 0, 2, 3, 4});
  CHECK(c.class_t_minus_1 >= 1);  // >= (1/4) 2^-2 3! = 0.375
  CHECK(c.bound_ok);
}

TEST_CASE("intersection classes reject pi containing the identity head") {
  CHECK_THROWS_AS(count_intersection_classes(4, 2, {0, 1, 3, 2}), std::invalid_argument);
}

TEST_CASE("regular feasibility threshold") {
  CHECK(regular_feasibility(10, 3) == RegularFeasibility::infeasible);
  CHECK(regular_feasibility(9, 3) == RegularFeasibility::unknown);
  CHECK(regular_feasibility(7, 3) == RegularFeasibility::unknown);
}

TEST_CASE("max regular intersecting finds the Fano optimum") {
  ExtremalResult r = max_regular_intersecting(7, 3);
  CHECK(r.optimum == 7);
  CHECK(r.proved_optimal);
  CHECK(is_regular(r.witness));
  CHECK(is_t_intersecting(r.witness, 1));
  CHECK(r.witness.size() == 7);
}

TEST_CASE("max regular intersecting short-circuits for n > k^2") {
  ExtremalResult r = max_regular_intersecting(10, 3);
  CHECK(r.optimum == 0);
  CHECK(r.proved_optimal);
}

TEST_CASE("max regular intersecting handles small degenerate shapes") {
  CHECK(max_regular_intersecting(3, 1).optimum == 0);
  CHECK(max_regular_intersecting(1, 1).optimum == 1);
  ExtremalResult r52 = max_regular_intersecting(5, 2);
  // C5 cycle: {1,2},{2,3},{3,4},{4,5},{5,1} is 2-regular and intersecting? no:
  // {1,2} and {3,4} are disjoint, so the truth comes from the search
  CHECK(r52.proved_optimal);
  if (r52.optimum > 0) {
    CHECK(is_regular(r52.witness));
    CHECK(is_t_intersecting(r52.witness, 1));
  }
}

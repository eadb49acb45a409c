#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spreadlab/exact.hpp"
#include "spreadlab/family.hpp"
#include "spreadlab/perm.hpp"

namespace spreadlab {

struct ExtremalResult {
  long long optimum = 0;
  SetFamily witness;
  unsigned long long nodes_explored = 0;
  bool proved_optimal = true;  // false only on budget exhaustion; optimum is then a lower bound
};

constexpr unsigned long long kDefaultSearchBudget = 20'000'000ull;

// Exact maximum t-intersecting subfamily via branch-and-bound max clique on
// the compatibility graph (greedy-coloring bounds, degeneracy order, no
// randomization).
ExtremalResult max_t_intersecting(const SetFamily& A, int t,
                                  unsigned long long budget = kDefaultSearchBudget);

// Exact maximum subfamily in which no two distinct members meet in exactly
// t-1 elements.
ExtremalResult max_avoiding(const SetFamily& A, int t,
                            unsigned long long budget = kDefaultSearchBudget);

// For a t-intersecting F: the lexicographically least t-subset of the common
// intersection when |common| >= t (the family is trivial), nullopt otherwise.
// Errors when F is not t-intersecting.
std::optional<Bitset> is_trivial_t_intersecting(const SetFamily& F, int t);

struct HiltonMilnerFamily {
  PermFamily family;
  std::vector<int> sigma;  // the adjoined cyclic-on-[t] permutation
};

// P' u {sigma}: permutations fixing [t] pointwise whose intersection with
// sigma is not t-1, plus sigma itself. Avoids intersection t-1 by
// construction; non-trivial for t >= 2 (degenerate at t = 1, where sigma is
// the identity).
HiltonMilnerFamily hilton_milner_perm_family(int n, int t);

// D(m) by the recurrence D(m) = (m-1)(D(m-1) + D(m-2))
BigInt derangement_count(int m);

struct IntersectionClassCounts {
  std::map<int, long long> counts;  // i -> |{sigma extends Id_[t], |sigma cap pi| = i}|
  BigInt total;                     // always (n-t)!
  long long class_t_minus_1 = 0;
  bool bound_ok = true;             // |G_{t-1}| >= (1/4) t^-t (n-t)!
};

// Exact class counts by enumerating all (n-t)! extensions of Id_[t].
// Errors when pi contains Id_[t].
IntersectionClassCounts count_intersection_classes(int n, int t, const std::vector<int>& pi);

enum class RegularFeasibility { infeasible, unknown };

// n > k^2 rules regular intersecting k-families out by the degree argument
RegularFeasibility regular_feasibility(int n, int k);

// Exact maximum regular intersecting subfamily of all k-subsets of [n],
// searched degree-by-degree (descending) with the first member fixed to
// {1..k} by symmetry.
ExtremalResult max_regular_intersecting(int n, int k,
                                        unsigned long long budget = kDefaultSearchBudget);

}  // namespace spreadlab

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadlab/bitset.hpp"

namespace spreadlab {

// Ground set {0,...,n-1}; file and CLI I/O is 1-indexed.
struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // optional display names, size n when present

  explicit GroundSet(int n_ = 0) : n(n_) {}
};

// A finite collection of distinct subsets of a ground set. Members are kept
// canonical (numeric-sorted, deduplicated), so equal families compare equal.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(GroundSet ground, std::vector<Bitset> members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  const std::vector<Bitset>& members() const { return members_; }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Bitset& operator[](size_t i) const { return members_[i]; }
  // present iff nonempty and all members share one cardinality
  std::optional<int> uniform_k() const { return uniform_k_; }
  int max_member_size() const;

  bool contains(const Bitset& m) const;
  bool operator==(const SetFamily& o) const {
    return ground_.n == o.ground_.n && members_ == o.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Bitset> members_;
  std::optional<int> uniform_k_;
};

SetFamily make_family(int n, const std::vector<std::vector<int>>& sets);  // 0-indexed elements

// F(S) = {A \ S : A in F, S subset of A}; ground set unchanged.
SetFamily link(const SetFamily& F, const Bitset& S);

// members of F disjoint from X
SetFamily avoid(const SetFamily& F, const Bitset& X);

// {A \ X : A in F, A cap Y = X}; requires X subset of Y.
SetFamily slice(const SetFamily& F, const Bitset& X, const Bitset& Y);

// A(S) = members of A containing at least one set from S
SetFamily contains_some(const SetFamily& A, const SetFamily& S);

// all l-subsets contained in some member
SetFamily lower_shadow(const SetFamily& F, int l);

// all l-subsets of the ground set containing some member; requires l <= n
SetFamily upper_shadow(const SetFamily& F, int l);

// |A cap B| >= t for all pairs, the diagonal A = B included
bool is_t_intersecting(const SetFamily& F, int t);

// no two distinct members intersect in exactly s elements
bool avoids_intersection(const SetFamily& F, int s);
// first violating pair in canonical order, if any
std::optional<std::pair<size_t, size_t>> find_intersection_pair(const SetFamily& F, int s);

// |A_1 cup ... cup A_s| <= sum |A_i| - t for every transversal choice
bool is_t_cross_dependent(std::span<const SetFamily> families, int t);

// minimum number of elements meeting every member (exact branch and bound);
// throws on an empty member (no finite cover). Empty family -> 0.
int cover_number(const SetFamily& F);

// all ground-set elements lie in the same number of members
bool is_regular(const SetFamily& F);

std::vector<int> element_degrees(const SetFamily& F);

// intersection of all members; full ground set for an empty family
Bitset common_intersection(const SetFamily& F);

// Distinct subsets of members with size <= cap (cap < 0: no cap), paired with
// containment counts |F(X)|. The enumeration backing spreadness scans.
std::vector<std::pair<Bitset, int>> member_subset_counts(const SetFamily& F, int cap);

// all k-subsets of an n-element ground set
SetFamily full_ambient(int n, int k);

void enumerate_combinations(const std::vector<int>& pool, int l,
                            const std::function<void(const std::vector<int>&)>& fn);

}  // namespace spreadlab

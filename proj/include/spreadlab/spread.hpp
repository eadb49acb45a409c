#pragma once

#include <map>
#include <optional>

#include "spreadlab/exact.hpp"
#include "spreadlab/family.hpp"

namespace spreadlab {

// Largest r such that |F(X)| <= r^(-|X|) |F| for every X. All comparisons are
// exact; the radius is kept in (num/den)^(1/root) form.
struct SpreadReport {
  RootedRatio radius;
  Bitset witness;                       // nonempty X attaining the radius
  std::map<int, RootedRatio> per_size_min;  // |X| -> min over X of that size
  bool complete = true;                 // false when the size cap truncated the scan
  int cap = 0;
};

// cap < 0 scans subsets of members up to the max member size (the exact radius)
SpreadReport spread_radius(const SetFamily& F, int cap = -1);

struct SpreadCheck {
  bool ok = true;
  std::optional<Bitset> witness;  // lexicographically least violating X
};

SpreadCheck is_r_spread(const SetFamily& F, double r);

struct HomogReport {
  bool ok = true;
  std::optional<Bitset> witness;
};

// |F(A)| <= tau^a * C(n-a,k-a)/C(n,k) * |F| for all A of size a <= k;
// requires F uniform and tau > 1.
HomogReport is_tau_homogeneous(const SetFamily& F, double tau);

// |F(S)|/|F| <= tau^|S| * |A(S)|/|A| for all S; requires F subset of A, tau >= 1.
HomogReport is_rel_homogeneous(const SetFamily& F, const SetFamily& A, double tau);

struct RqSpreadReport {
  bool ok = true;
  std::optional<Bitset> failing_S;
  std::optional<Bitset> failing_X;  // witness inside the failing link
};

// every link A(S), |S| <= q, is r-spread
RqSpreadReport is_rq_spread(const SetFamily& A, double r, int q);

enum class RegularityFailure { none, shadow_deficit, concentration };

struct RegularityReport {
  bool ok = true;
  RegularityFailure failing_condition = RegularityFailure::none;
  std::optional<Bitset> failing_S;
  int failing_l = -1;
  double measured_epsilon = 0.0;  // worst deficit / failure fraction seen
  double measured_theta = 1.0;    // worst concentration ratio |A(S u H)| / E seen
  double expected_set_size = 0.0; // mean member size of A
  bool complete = true;
  unsigned long long work_used = 0;
  unsigned long long budget = 0;
};

// Exact verification of the two regularity conditions for all l <= t and all
// S in the <=q shadow of A. Work is metered; exceeding the budget stops the
// scan and is reported, never silently truncated.
RegularityReport regularity_check(const SetFamily& A, int t, int q, double eps, double theta,
                                  unsigned long long budget = 200'000'000ull);

}  // namespace spreadlab

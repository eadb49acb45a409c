#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spreadlab/exact.hpp"
#include "spreadlab/family.hpp"

namespace spreadlab {

enum class ApproxStop {
  family_exhausted,   // F^i became empty
  oversize_selector,  // the selected set exceeded size q
  empty_selector,     // no nonempty set met the threshold; remainder kept whole
};

struct ApproxTraceStep {
  int step = 0;
  size_t family_size = 0;
  Bitset selected;
  BigInt threshold_num, threshold_den;  // tau^|S| * |A(S)|/|A| * |F^i|
  size_t link_count = 0;                // |F^i(S)|
};

// Output of the iterative peeling procedure. pieces[i] holds, pre-link, the
// subfamily removed at step i (the members of F^i containing selected[i]);
// the pieces partition F minus the remainder.
struct ApproxResult {
  std::vector<Bitset> selected;
  std::vector<SetFamily> pieces;
  SetFamily remainder;
  ApproxStop stop = ApproxStop::family_exhausted;
  std::optional<Bitset> stopping_selector;  // recorded when stop was oversize
  std::vector<ApproxTraceStep> trace;
};

// Peeling loop: repeatedly select the lexicographically least set S among
// those meeting |F^i(S)| >= tau^|S| (|A(S)|/|A|) |F^i| with no strict superset
// strictly above its own threshold, remove F^i(S), and stop once the selected
// set exceeds size q or nothing nonempty qualifies. Requires F subset of A,
// tau > 1.
ApproxResult spread_approximate(const SetFamily& A, const SetFamily& F, double tau, int q);

enum class VerdictStatus { pass, fail, not_applicable };

struct PropertyVerdict {
  VerdictStatus status = VerdictStatus::pass;
  std::string detail;
  std::optional<Bitset> witness;
};

struct ApproxVerifyReport {
  PropertyVerdict coverage;         // pieces partition F \ F' and each removed set extends its key
  PropertyVerdict homogeneity;      // each piece linked at its key is (A(key),tau)-homogeneous
  PropertyVerdict remainder_bound;  // |F'| <= tau^(-q-1) |A|, or not-applicable
  bool all_ok() const {
    return coverage.status != VerdictStatus::fail &&
           homogeneity.status != VerdictStatus::fail &&
           remainder_bound.status != VerdictStatus::fail;
  }
};

// Independent re-check of the three contractual properties; homogeneity goes
// through the spread-metrics route rather than trusting the procedure.
ApproxVerifyReport verify_approximation(const ApproxResult& res, const SetFamily& A,
                                        const SetFamily& F, double tau, int q);

struct PairCheck {
  bool ok = true;
  std::optional<std::pair<Bitset, Bitset>> violating_pair;
};

// pairwise t-intersection of the selected sets, diagonal included
PairCheck check_S_t_intersecting(const ApproxResult& res, int t);
PairCheck check_t_intersecting_list(const std::vector<Bitset>& sets, int t);

// Shrinks members to a t-intersecting family T with every proper subset of a
// member meeting some other member in < t elements; every output member is a
// subset of an input member. Errors when S is not t-intersecting.
SetFamily reduce_to_minimal(const SetFamily& S, int t);

// exhaustive check of the minimality property above
bool has_minimal_reduction_property(const SetFamily& T, int t);

struct ReductionChain {
  int t = 0;
  int q = 0;
  // levels[i] = (T_i, W_i) for i = 0..q-t; W_i = members of T_i of size q-i
  std::vector<std::pair<SetFamily, SetFamily>> levels;
  SetFamily final_t;  // T_{q-t+1}, empty in any valid run
};

ReductionChain build_chain(const SetFamily& S, const SetFamily& A, int t, int q);

struct ChainPropertyVerdict {
  bool ok = true;
  int failing_level = -1;
  std::string detail;
};

struct ChainReport {
  ChainPropertyVerdict sizes;            // (i)   |T| <= q-i per level
  ChainPropertyVerdict link_coverage;    // (ii)  A(T_{i-1}) in A(T_i) u A(W_{i-1})
  ChainPropertyVerdict sunflower_free;   // (iii) no (q-i-t+2)-petal sunflower in T_i
  ChainPropertyVerdict w_cardinality;    // (iv)  |W_i| <= (C0 q log2 q)^(q-i-t), C0 = 2^15
  ChainPropertyVerdict collapse_bound;   // (v)   |A(T_{i-1} \ W_{i-1})| <= (q/r)|A(X)|
  bool all_ok() const {
    return sizes.ok && link_coverage.ok && sunflower_free.ok && w_cardinality.ok &&
           collapse_bound.ok;
  }
};

// r feeds property (v); the chain itself does not constrain it.
ChainReport check_chain_properties(const ReductionChain& chain, const SetFamily& A, double r);

}  // namespace spreadlab

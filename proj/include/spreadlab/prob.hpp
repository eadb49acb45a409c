#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/exact.hpp"
#include "spreadlab/family.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

// Seed plus a fixed algorithm tag; identical specs produce identical streams
// on every platform.
struct RngSpec {
  uint64_t seed = 0;
  std::string algorithm = "splitmix64";
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  static Rng from_spec(const RngSpec& spec);

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }
  // uniform in [0,1), 53 random bits
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return next_double() < p; }

  // independent stream for a worker or trial index; aggregation over
  // substreams is schedule-independent
  Rng substream(uint64_t index) const { return Rng(mix(state_ ^ mix(index + 1))); }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }
  uint64_t state_;
};

// independent Bernoulli(p) per ground-set element
Bitset sample_p_random(int n, double p, Rng& rng);

struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  uint64_t successes = 0;
  uint64_t trials = 0;
};

// Monte-Carlo estimate of Pr[some member of F is contained in a p-random W].
// Each trial draws from its own substream, so results do not depend on the
// thread count.
McEstimate containment_probability(const SetFamily& F, double p, uint64_t trials,
                                   const RngSpec& rng, int threads = 1);

enum class AuditVerdict { pass, fail, vacuous };

struct SpreadLemmaAudit {
  double radius = 0.0;           // spread radius of F
  RootedRatio radius_exact;
  double mu = 0.0;               // mean member size
  double p = 0.0;                // m * delta
  double bound = 0.0;            // 1 - (5 / log2(r*delta))^m * mu
  bool bound_vacuous = false;    // r*delta <= 1 or bound <= 0
  McEstimate mc;
  AuditVerdict verdict = AuditVerdict::pass;
};

// Checks the containment lower bound at p = m*delta against an MC estimate
// with a one-sided 3-sigma tolerance.
SpreadLemmaAudit spread_lemma_audit(const SetFamily& F, int m, double delta, uint64_t trials,
                                    const RngSpec& rng, int threads = 1);

struct DisjointPair {
  size_t index1 = 0, index2 = 0;  // member indices into G1, G2
  Bitset set1, set2;
  uint64_t trial = 0;
};

// Random 2-coloring search for a disjoint pair across two families. A returned
// pair is certified disjoint; exhausting the trial budget proves nothing.
std::optional<DisjointPair> find_disjoint_pair_by_coloring(const SetFamily& G1,
                                                           const SetFamily& G2, uint64_t trials,
                                                           const RngSpec& rng);

struct Sunflower {
  std::vector<size_t> petals;  // member indices
  Bitset core;
};

enum class SunflowerStatus { found, none, budget_exceeded };

struct SunflowerSearch {
  SunflowerStatus status = SunflowerStatus::none;
  std::optional<Sunflower> sunflower;
  unsigned long long work_used = 0;
};

// Exact search over candidate cores (the pairwise member intersections plus
// the empty set — every core of an l-sunflower, l >= 2, arises that way),
// reducing each core to a disjoint-petal packing solved by backtracking.
SunflowerSearch find_sunflower(const SetFamily& F, int l,
                               unsigned long long budget = 50'000'000ull);

bool verify_sunflower(const SetFamily& F, const Sunflower& s);

struct SunflowerThresholds {
  BigInt erdos_rado;  // k! (l-1)^k
  double alwz;        // (C l log2(k l))^l with C = 2^10
};

SunflowerThresholds sunflower_thresholds(int k, int l);

}  // namespace spreadlab

#include "spreadlab/prob.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace spreadlab {

Rng Rng::from_spec(const RngSpec& spec) {
  if (spec.algorithm != "splitmix64")
    throw std::invalid_argument("RngSpec: unknown algorithm tag '" + spec.algorithm + "'");
  return Rng(spec.seed);
}

Bitset sample_p_random(int n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_p_random: p in [0,1]");
  Bitset w(n);
  for (int e = 0; e < n; ++e)
    if (rng.bernoulli(p)) w.set(e);
  return w;
}

namespace {

bool contains_member(const SetFamily& F, const Bitset& W) {
  for (const Bitset& m : F.members())
    if (m.subset_of(W)) return true;
  return false;
}

}  // namespace

McEstimate containment_probability(const SetFamily& F, double p, uint64_t trials,
                                   const RngSpec& rng, int threads) {
  if (trials < 1) throw std::invalid_argument("containment_probability: trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("containment_probability: p in [0,1]");
  Rng base = Rng::from_spec(rng);

  // trial i draws from substream(i), so the tally is thread-count invariant
  auto run_range = [&](uint64_t lo, uint64_t hi) {
    uint64_t hits = 0;
    for (uint64_t i = lo; i < hi; ++i) {
      Rng r = base.substream(i);
      Bitset W = sample_p_random(F.n(), p, r);
      if (contains_member(F, W)) ++hits;
    }
    return hits;
  };

  uint64_t successes = 0;
  if (threads <= 1) {
    successes = run_range(0, trials);
  } else {
    int nw = std::min<uint64_t>(threads, trials);
    std::vector<uint64_t> part(nw, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w)
      pool.emplace_back([&, w] {
        uint64_t lo = trials * uint64_t(w) / nw, hi = trials * uint64_t(w + 1) / nw;
        part[w] = run_range(lo, hi);
      });
    for (auto& th : pool) th.join();
    for (uint64_t h : part) successes += h;
  }

  McEstimate out;
  out.successes = successes;
  out.trials = trials;
  out.estimate = double(successes) / double(trials);
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) / double(trials));
  return out;
}

SpreadLemmaAudit spread_lemma_audit(const SetFamily& F, int m, double delta, uint64_t trials,
                                    const RngSpec& rng, int threads) {
  if (F.empty()) throw std::invalid_argument("spread_lemma_audit: empty family");
  if (m < 1) throw std::invalid_argument("spread_lemma_audit: m must be >= 1");
  double p = double(m) * delta;
  if (!(delta > 0.0) || p > 1.0)
    throw std::invalid_argument("spread_lemma_audit: need delta > 0 and m*delta <= 1");

  SpreadLemmaAudit out;
  SpreadReport sr = spread_radius(F);
  out.radius_exact = sr.radius;
  out.radius = sr.radius.value();
  long long total_size = 0;
  for (const Bitset& mem : F.members()) total_size += mem.count();
  out.mu = double(total_size) / double(F.size());
  out.p = p;

  double rdelta = out.radius * delta;
  if (rdelta <= 1.0) {
    out.bound_vacuous = true;
  } else {
    out.bound = 1.0 - std::pow(5.0 / std::log2(rdelta), double(m)) * out.mu;
    if (out.bound <= 0.0) out.bound_vacuous = true;
  }

  out.mc = containment_probability(F, p, trials, rng, threads);
  if (out.bound_vacuous)
    out.verdict = AuditVerdict::vacuous;
  else
    out.verdict = out.mc.estimate + 3.0 * out.mc.stderr_ >= out.bound ? AuditVerdict::pass
                                                                      : AuditVerdict::fail;
  return out;
}

std::optional<DisjointPair> find_disjoint_pair_by_coloring(const SetFamily& G1,
                                                           const SetFamily& G2, uint64_t trials,
                                                           const RngSpec& rng) {
  if (G1.n() != G2.n())
    throw std::invalid_argument("find_disjoint_pair_by_coloring: ground set mismatch");
  Rng base = Rng::from_spec(rng);
  int n = G1.n();
  for (uint64_t trial = 0; trial < trials; ++trial) {
    Rng r = base.substream(trial);
    Bitset u1 = sample_p_random(n, 0.5, r);
    Bitset u2 = u1.complement();
    std::optional<size_t> i1, i2;
    for (size_t i = 0; i < G1.size() && !i1; ++i)
      if (G1[i].subset_of(u1)) i1 = i;
    if (!i1) continue;
    for (size_t i = 0; i < G2.size() && !i2; ++i)
      if (G2[i].subset_of(u2)) i2 = i;
    if (!i2) continue;
    DisjointPair out;
    out.index1 = *i1;
    out.index2 = *i2;
    out.set1 = G1[*i1];
    out.set2 = G2[*i2];
    out.trial = trial;
    return out;
  }
  return std::nullopt;
}

namespace {

// backtracking packing: find l pairwise disjoint petals, indices ascending
bool pack_disjoint(const std::vector<std::pair<size_t, Bitset>>& petals, size_t pos,
                   const Bitset& used, std::vector<size_t>& chosen, int l,
                   unsigned long long& work, unsigned long long budget, bool& aborted) {
  if (int(chosen.size()) == l) return true;
  if (chosen.size() + (petals.size() - pos) < size_t(l)) return false;
  for (size_t i = pos; i < petals.size(); ++i) {
    if (++work > budget) {
      aborted = true;
      return false;
    }
    if (petals[i].second.intersects(used)) continue;
    chosen.push_back(petals[i].first);
    if (pack_disjoint(petals, i + 1, used | petals[i].second, chosen, l, work, budget, aborted))
      return true;
    if (aborted) return false;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

SunflowerSearch find_sunflower(const SetFamily& F, int l, unsigned long long budget) {
  if (l < 2) throw std::invalid_argument("find_sunflower: need l >= 2");
  SunflowerSearch out;
  if (F.size() < size_t(l)) return out;

  // candidate cores: the empty set plus all pairwise intersections
  std::unordered_set<Bitset, BitsetHash> cores;
  cores.insert(Bitset(F.n()));
  const auto& mem = F.members();
  for (size_t i = 0; i < mem.size(); ++i)
    for (size_t j = i + 1; j < mem.size(); ++j) {
      if (++out.work_used > budget) {
        out.status = SunflowerStatus::budget_exceeded;
        return out;
      }
      cores.insert(mem[i] & mem[j]);
    }
  std::vector<Bitset> ordered(cores.begin(), cores.end());
  std::sort(ordered.begin(), ordered.end(), [](const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return Bitset::lex_less(a, b);
  });

  for (const Bitset& core : ordered) {
    std::vector<std::pair<size_t, Bitset>> petals;
    for (size_t i = 0; i < mem.size(); ++i) {
      if (++out.work_used > budget) {
        out.status = SunflowerStatus::budget_exceeded;
        return out;
      }
      if (core.subset_of(mem[i])) petals.emplace_back(i, mem[i] - core);
    }
    if (petals.size() < size_t(l)) continue;
    std::vector<size_t> chosen;
    bool aborted = false;
    if (pack_disjoint(petals, 0, Bitset(F.n()), chosen, l, out.work_used, budget, aborted)) {
      out.status = SunflowerStatus::found;
      out.sunflower = Sunflower{std::move(chosen), core};
      return out;
    }
    if (aborted) {
      out.status = SunflowerStatus::budget_exceeded;
      return out;
    }
  }
  return out;
}

bool verify_sunflower(const SetFamily& F, const Sunflower& s) {
  if (s.petals.size() < 2) return false;
  for (size_t a = 0; a < s.petals.size(); ++a)
    for (size_t b = a + 1; b < s.petals.size(); ++b) {
      if (s.petals[a] >= F.size() || s.petals[b] >= F.size()) return false;
      if ((F[s.petals[a]] & F[s.petals[b]]) != s.core) return false;
    }
  return true;
}

SunflowerThresholds sunflower_thresholds(int k, int l) {
  if (k < 1 || l < 2) throw std::invalid_argument("sunflower_thresholds: need k >= 1, l >= 2");
  SunflowerThresholds out;
  out.erdos_rado = factorial(k) * ipow(BigInt(l - 1), unsigned(k));
  out.alwz = std::pow(1024.0 * double(l) * std::log2(double(k) * double(l)), double(l));
  return out;
}

}  // namespace spreadlab

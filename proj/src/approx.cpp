#include "spreadlab/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "spreadlab/prob.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

namespace {

void require_subfamily(const SetFamily& F, const SetFamily& A, const char* who) {
  if (F.n() != A.n()) throw std::invalid_argument(std::string(who) + ": ground set mismatch");
  for (const Bitset& m : F.members())
    if (!A.contains(m)) throw std::invalid_argument(std::string(who) + ": F is not a subfamily of A");
}

}  // namespace

ApproxResult spread_approximate(const SetFamily& A, const SetFamily& F, double tau, int q) {
  if (!(tau > 1.0)) throw std::invalid_argument("spread_approximate: tau must be > 1");
  if (q < 0) throw std::invalid_argument("spread_approximate: q must be >= 0");
  require_subfamily(F, A, "spread_approximate");
  if (A.empty()) throw std::invalid_argument("spread_approximate: empty ambient family");

  BigRat t = exact_rational(tau);
  BigInt asz = A.size();
  std::unordered_map<Bitset, int, BitsetHash> acount;
  for (const auto& [X, c] : member_subset_counts(A, F.max_member_size())) acount[X] = c;

  ApproxResult res;
  std::vector<Bitset> current = F.members();
  int step = 0;
  while (true) {
    ++step;
    if (current.empty()) {
      res.stop = ApproxStop::family_exhausted;
      res.remainder = SetFamily(F.ground(), {});
      return res;
    }
    SetFamily Fi(F.ground(), current);
    BigInt fsz = Fi.size();

    // qualification of a nonempty S: |F^i(S)| |A| tden^s  (>=|>)  tnum^s |A(S)| |F^i|
    auto counts = member_subset_counts(Fi, -1);
    std::vector<std::pair<Bitset, int>> weak;    // meets the threshold
    std::vector<Bitset> strict;                  // strictly above it
    for (const auto& [S, c] : counts) {
      int s = S.count();
      if (s == 0) continue;
      auto it = acount.find(S);
      BigInt aS = it == acount.end() ? 0 : it->second;
      BigInt lhs = BigInt(c) * asz * ipow(denominator(t), s);
      BigInt rhs = ipow(numerator(t), s) * aS * fsz;
      if (lhs >= rhs) weak.emplace_back(S, c);
      if (lhs > rhs) strict.push_back(S);
    }

    if (weak.empty()) {
      // only the empty set qualifies (always, with equality); keep the rest
      res.stop = ApproxStop::empty_selector;
      res.remainder = Fi;
      return res;
    }

    // maximal = qualifying with no strict superset strictly above threshold
    std::optional<Bitset> pick;
    size_t pick_count = 0;
    for (const auto& [S, c] : weak) {
      bool dominated = false;
      for (const Bitset& T : strict)
        if (S != T && S.subset_of(T)) {
          dominated = true;
          break;
        }
      if (!dominated && (!pick || Bitset::lex_less(S, *pick))) {
        pick = S;
        pick_count = size_t(c);
      }
    }
    // a maximal element of the strict set always survives, so pick is set
    const Bitset& Si = *pick;

    ApproxTraceStep tr;
    tr.step = step;
    tr.family_size = current.size();
    tr.selected = Si;
    tr.link_count = pick_count;
    {
      int s = Si.count();
      BigInt aS = acount.count(Si) ? acount[Si] : 0;
      tr.threshold_num = ipow(numerator(t), s) * aS * fsz;
      tr.threshold_den = ipow(denominator(t), s) * asz;
    }
    res.trace.push_back(tr);

    if (Si.count() > q) {
      res.stop = ApproxStop::oversize_selector;
      res.stopping_selector = Si;
      res.remainder = Fi;
      return res;
    }

    std::vector<Bitset> removed, kept;
    for (const Bitset& m : current)
      (Si.subset_of(m) ? removed : kept).push_back(m);
    res.selected.push_back(Si);
    res.pieces.emplace_back(F.ground(), std::move(removed));
    current = std::move(kept);
  }
}

ApproxVerifyReport verify_approximation(const ApproxResult& res, const SetFamily& A,
                                        const SetFamily& F, double tau, int q) {
  require_subfamily(F, A, "verify_approximation");
  ApproxVerifyReport rep;

  // (i) pieces partition F \ F' and each piece member extends its key
  {
    std::unordered_map<Bitset, int, BitsetHash> seen;  // member -> occurrences
    bool ok = true;
    std::optional<Bitset> witness;
    std::string detail;
    if (res.selected.size() != res.pieces.size()) {
      ok = false;
      detail = "selected/pieces length mismatch";
    }
    for (size_t i = 0; ok && i < res.pieces.size(); ++i) {
      for (const Bitset& m : res.pieces[i].members()) {
        if (!res.selected[i].subset_of(m)) {
          ok = false;
          witness = m;
          detail = "piece member does not contain its key";
          break;
        }
        ++seen[m];
      }
    }
    for (const Bitset& m : res.remainder.members()) ++seen[m];
    if (ok) {
      size_t total = 0;
      for (const auto& [m, c] : seen) {
        total += size_t(c);
        if (c > 1 || !F.contains(m)) {
          ok = false;
          witness = m;
          detail = c > 1 ? "member covered more than once" : "member outside F";
          break;
        }
      }
      if (ok && total != F.size()) {
        ok = false;
        detail = "pieces and remainder do not exhaust F";
        for (const Bitset& m : F.members())
          if (!seen.count(m)) {
            witness = m;
            break;
          }
      }
    }
    rep.coverage.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    rep.coverage.detail = detail;
    rep.coverage.witness = witness;
  }

  // (ii) each piece linked at its key is (A(key), tau)-homogeneous
  {
    bool ok = true;
    for (size_t i = 0; ok && i < res.pieces.size(); ++i) {
      SetFamily piece_link = link(res.pieces[i], res.selected[i]);
      SetFamily ambient_link = link(A, res.selected[i]);
      HomogReport h = is_rel_homogeneous(piece_link, ambient_link, tau);
      if (!h.ok) {
        ok = false;
        rep.homogeneity.witness = h.witness;
        rep.homogeneity.detail = "piece " + std::to_string(i) + " fails relative homogeneity";
      }
    }
    rep.homogeneity.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
  }

  // (iii) |F'| <= tau^(-q-1) |A|
  if (res.stop == ApproxStop::empty_selector) {
    rep.remainder_bound.status = VerdictStatus::not_applicable;
    rep.remainder_bound.detail = "empty-selector stop: remainder kept whole by convention";
  } else {
    BigRat t = exact_rational(tau);
    BigInt lhs = BigInt(res.remainder.size()) * ipow(numerator(t), unsigned(q + 1));
    BigInt rhs = BigInt(A.size()) * ipow(denominator(t), unsigned(q + 1));
    rep.remainder_bound.status = lhs <= rhs ? VerdictStatus::pass : VerdictStatus::fail;
    if (lhs > rhs) rep.remainder_bound.detail = "remainder exceeds tau^(-q-1)|A|";
  }
  return rep;
}

PairCheck check_t_intersecting_list(const std::vector<Bitset>& sets, int t) {
  PairCheck out;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i; j < sets.size(); ++j)
      if (sets[i].intersect_count(sets[j]) < t) {
        out.ok = false;
        out.violating_pair = std::make_pair(sets[i], sets[j]);
        return out;
      }
  return out;
}

PairCheck check_S_t_intersecting(const ApproxResult& res, int t) {
  return check_t_intersecting_list(res.selected, t);
}

SetFamily reduce_to_minimal(const SetFamily& S, int t) {
  if (!is_t_intersecting(S, t))
    throw std::invalid_argument("reduce_to_minimal: input is not t-intersecting");
  std::vector<Bitset> mem = S.members();

  auto shrink_ok = [&](size_t skip, const Bitset& candidate) {
    if (candidate.count() < t) return false;
    for (size_t j = 0; j < mem.size(); ++j)
      if (j != skip && candidate.intersect_count(mem[j]) < t) return false;
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<size_t> order(mem.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      int ca = mem[a].count(), cb = mem[b].count();
      if (ca != cb) return ca > cb;
      return Bitset::lex_less(mem[a], mem[b]);
    });
    for (size_t oi : order) {
      for (int e : mem[oi].elements()) {
        Bitset candidate = mem[oi].without_bit(e);
        if (shrink_ok(oi, candidate)) {
          mem[oi] = candidate;
          // merge duplicates
          std::sort(mem.begin(), mem.end(), Bitset::value_less);
          mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }

  // at a shrink fixpoint no member strictly contains another; sweep anyway
  std::vector<Bitset> out;
  for (size_t i = 0; i < mem.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < mem.size(); ++j)
      if (i != j && mem[j].subset_of(mem[i]) && mem[j] != mem[i]) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(mem[i]);
  }
  return SetFamily(S.ground(), std::move(out));
}

bool has_minimal_reduction_property(const SetFamily& T, int t) {
  for (const Bitset& member : T.members()) {
    auto elems = member.elements();
    // every proper subset X must meet some member in < t elements
    for (int l = 0; l < int(elems.size()); ++l) {
      bool bad_subset = false;
      enumerate_combinations(elems, l, [&](const std::vector<int>& sub) {
        if (bad_subset) return;
        Bitset X(T.n());
        for (int e : sub) X.set(e);
        for (const Bitset& other : T.members())
          if (X.intersect_count(other) < t) return;
        bad_subset = true;
      });
      if (bad_subset) return false;
    }
  }
  return true;
}

ReductionChain build_chain(const SetFamily& S, const SetFamily& A, int t, int q) {
  if (S.n() != A.n()) throw std::invalid_argument("build_chain: ground set mismatch");
  if (S.max_member_size() > q)
    throw std::invalid_argument("build_chain: member sizes must be at most q");
  ReductionChain chain;
  chain.t = t;
  chain.q = q;

  SetFamily Ti = reduce_to_minimal(S, t);
  for (int i = 0; i <= q - t; ++i) {
    std::vector<Bitset> w, rest;
    for (const Bitset& m : Ti.members())
      (m.count() == q - i ? w : rest).push_back(m);
    SetFamily Wi(S.ground(), std::move(w));
    chain.levels.emplace_back(Ti, Wi);
    Ti = reduce_to_minimal(SetFamily(S.ground(), std::move(rest)), t);
  }
  chain.final_t = Ti;
  return chain;
}

ChainReport check_chain_properties(const ReductionChain& chain, const SetFamily& A, double r) {
  ChainReport rep;
  const int q = chain.q, t = chain.t;

  for (size_t i = 0; i < chain.levels.size(); ++i) {
    const SetFamily& Ti = chain.levels[i].first;
    const SetFamily& Wi = chain.levels[i].second;

    if (Ti.max_member_size() > q - int(i)) {
      rep.sizes = {false, int(i), "member larger than q-i"};
      break;
    }

    int petals = q - int(i) - t + 2;
    if (petals >= 2 && rep.sunflower_free.ok) {
      SunflowerSearch sf = find_sunflower(Ti, petals);
      if (sf.status == SunflowerStatus::found)
        rep.sunflower_free = {false, int(i),
                              "sunflower with " + std::to_string(petals) + " petals"};
      else if (sf.status == SunflowerStatus::budget_exceeded)
        rep.sunflower_free = {false, int(i), "sunflower search budget exceeded"};
    }

    if (rep.w_cardinality.ok) {
      int e = q - int(i) - t;
      long double rhs = e == 0 ? 1.0L
                               : powl(32768.0L * q * log2l((long double)q), (long double)e);
      if ((long double)Wi.size() > rhs)
        rep.w_cardinality = {false, int(i), "|W_i| above (C0 q log2 q)^(q-i-t)"};
    }
  }

  for (size_t i = 1; i < chain.levels.size() && rep.link_coverage.ok; ++i) {
    SetFamily lhs = contains_some(A, chain.levels[i - 1].first);
    SetFamily byT = contains_some(A, chain.levels[i].first);
    SetFamily byW = contains_some(A, chain.levels[i - 1].second);
    for (const Bitset& m : lhs.members())
      if (!byT.contains(m) && !byW.contains(m)) {
        rep.link_coverage = {false, int(i), "A(T_{i-1}) not covered by A(T_i) u A(W_{i-1})"};
        break;
      }
  }

  auto single_t_set = [&](const SetFamily& fam) {
    return fam.size() == 1 && fam.members().front().count() == t;
  };
  for (size_t i = 1; i < chain.levels.size() && rep.collapse_bound.ok; ++i) {
    const SetFamily& Ti = chain.levels[i].first;
    const SetFamily& Tprev = chain.levels[i - 1].first;
    const SetFamily& Wprev = chain.levels[i - 1].second;
    if (!single_t_set(Ti) || single_t_set(Tprev)) continue;
    const Bitset& X = Ti.members().front();
    std::vector<Bitset> rest;
    for (const Bitset& m : Tprev.members())
      if (!Wprev.contains(m)) rest.push_back(m);
    BigInt lhs = contains_some(A, SetFamily(A.ground(), std::move(rest))).size();
    BigInt ax = link(A, X).size();
    // |A(T')| <= (q/r) |A(X)|  with r = rn/rd
    BigRat rr = exact_rational(r);
    if (lhs * numerator(rr) > BigInt(q) * denominator(rr) * ax)
      rep.collapse_bound = {false, int(i), "collapse bound exceeded"};
  }

  return rep;
}

}  // namespace spreadlab

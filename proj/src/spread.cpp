#include "spreadlab/spread.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace spreadlab {

namespace {

// canonical scan order for witnesses: size ascending, then tuple-lex
bool size_lex_less(const Bitset& a, const Bitset& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return Bitset::lex_less(a, b);
}

}  // namespace

SpreadReport spread_radius(const SetFamily& F, int cap) {
  if (F.empty()) throw std::invalid_argument("spread_radius: empty family");
  int kmax = F.max_member_size();
  if (cap < 0) cap = kmax;
  SpreadReport rep;
  rep.cap = cap;
  rep.complete = cap >= kmax;

  auto counts = member_subset_counts(F, cap);
  // per size: the max containment count and the lex-least X attaining it
  std::map<int, std::pair<int, Bitset>> best_by_size;
  for (const auto& [X, c] : counts) {
    int a = X.count();
    if (a == 0) continue;
    auto it = best_by_size.find(a);
    if (it == best_by_size.end() || c > it->second.first ||
        (c == it->second.first && Bitset::lex_less(X, it->second.second)))
      best_by_size.insert_or_assign(a, std::make_pair(c, X));
  }
  if (best_by_size.empty()) {
    // only the empty set occurs as a member; the defining inequality is vacuous
    rep.radius = RootedRatio{BigInt(F.size()), 1, 1};
    rep.witness = Bitset(F.n());
    return rep;
  }

  bool first = true;
  for (const auto& [a, bc] : best_by_size) {
    RootedRatio v{BigInt(F.size()), BigInt(bc.first), unsigned(a)};
    rep.per_size_min[a] = v;
    if (first || compare(v, rep.radius) < 0) {
      rep.radius = v;
      rep.witness = bc.second;
      first = false;
    }
  }
  return rep;
}

SpreadCheck is_r_spread(const SetFamily& F, double r) {
  if (F.empty()) throw std::invalid_argument("is_r_spread: empty family");
  BigRat rr = exact_rational(r);
  SpreadCheck out;
  auto counts = member_subset_counts(F, -1);
  BigInt total = F.size();
  for (const auto& [X, c] : counts) {
    int a = X.count();
    if (a == 0) continue;
    // violation: |F(X)| * r^a > |F|
    if (BigInt(c) * ipow(numerator(rr), a) > total * ipow(denominator(rr), a)) {
      if (!out.witness || Bitset::lex_less(X, *out.witness)) out.witness = X;
      out.ok = false;
    }
  }
  return out;
}

HomogReport is_tau_homogeneous(const SetFamily& F, double tau) {
  if (!F.uniform_k()) throw std::invalid_argument("is_tau_homogeneous: family must be uniform");
  if (!(tau > 1.0)) throw std::invalid_argument("is_tau_homogeneous: tau must be > 1");
  int n = F.n(), k = *F.uniform_k();
  BigRat t = exact_rational(tau);
  BigInt cnk = binomial(n, k), fsz = F.size();

  HomogReport out;
  auto counts = member_subset_counts(F, -1);
  for (const auto& [A, c] : counts) {
    int a = A.count();
    if (a == 0) continue;
    // violation: |F(A)| * C(n,k) > tau^a * C(n-a,k-a) * |F|
    BigInt lhs = BigInt(c) * cnk * ipow(denominator(t), a);
    BigInt rhs = ipow(numerator(t), a) * binomial(n - a, k - a) * fsz;
    if (lhs > rhs) {
      if (!out.witness || Bitset::lex_less(A, *out.witness)) out.witness = A;
      out.ok = false;
    }
  }
  return out;
}

HomogReport is_rel_homogeneous(const SetFamily& F, const SetFamily& A, double tau) {
  if (F.n() != A.n()) throw std::invalid_argument("is_rel_homogeneous: ground set mismatch");
  if (!(tau >= 1.0)) throw std::invalid_argument("is_rel_homogeneous: tau must be >= 1");
  for (const Bitset& m : F.members())
    if (!A.contains(m)) throw std::invalid_argument("is_rel_homogeneous: F is not a subfamily of A");
  if (A.empty()) throw std::invalid_argument("is_rel_homogeneous: empty ambient family");

  BigRat t = exact_rational(tau);
  BigInt asz = A.size(), fsz = F.size();
  std::unordered_map<Bitset, int, BitsetHash> acount;
  for (const auto& [X, c] : member_subset_counts(A, F.max_member_size())) acount[X] = c;

  HomogReport out;
  for (const auto& [S, c] : member_subset_counts(F, -1)) {
    int s = S.count();
    if (s == 0) continue;
    auto it = acount.find(S);
    BigInt aS = it == acount.end() ? 0 : it->second;
    // violation: |F(S)| * |A| > tau^s * |A(S)| * |F|
    BigInt lhs = BigInt(c) * asz * ipow(denominator(t), s);
    BigInt rhs = ipow(numerator(t), s) * aS * fsz;
    if (lhs > rhs) {
      if (!out.witness || Bitset::lex_less(S, *out.witness)) out.witness = S;
      out.ok = false;
    }
  }
  return out;
}

namespace {

// r-spread check of one link via DFS over subsets of its members, with the
// count-monotone prune: once |G(X)| <= |G| r^(-km) for the deepest reachable
// size km, no superset of X can violate. Finds the lex-least violator.
struct LinkSpreadChecker {
  const std::vector<Bitset>& members;
  std::vector<BigInt> rn_pow, rd_pow;  // r = rn/rd, powers by size
  BigInt total;
  std::optional<Bitset> witness;

  LinkSpreadChecker(const std::vector<Bitset>& mem, const BigRat& r, int kmax)
      : members(mem), total(mem.size()) {
    rn_pow.resize(kmax + 1);
    rd_pow.resize(kmax + 1);
    rn_pow[0] = rd_pow[0] = 1;
    for (int i = 1; i <= kmax; ++i) {
      rn_pow[i] = rn_pow[i - 1] * numerator(r);
      rd_pow[i] = rd_pow[i - 1] * denominator(r);
    }
  }

  bool violates(int count, int size) const {
    return BigInt(count) * rn_pow[size] > total * rd_pow[size];
  }

  // returns true when a violation was found (search stops at the first, which
  // is the lex-least by DFS order)
  bool dfs(const Bitset& X, const std::vector<int>& incidence, int max_elem) {
    int km = 0;
    Bitset unionmask(X.universe());
    for (int i : incidence) {
      unionmask |= members[i];
      km = std::max(km, members[i].count());
    }
    if (!violates(int(incidence.size()), km)) return false;  // no descendant can violate
    bool found = false;
    unionmask.for_each_bit([&](int e) {
      if (found || e <= max_elem || X.test(e)) return;
      std::vector<int> sub;
      for (int i : incidence)
        if (members[i].test(e)) sub.push_back(i);
      if (sub.empty()) return;
      Bitset Xe = X.with_bit(e);
      if (violates(int(sub.size()), Xe.count())) {
        witness = Xe;
        found = true;
        return;
      }
      if (dfs(Xe, sub, e)) found = true;
    });
    return found;
  }

  bool run() {
    if (members.empty()) return false;
    std::vector<int> all(members.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    return dfs(Bitset(members.front().universe()), all, -1);
  }
};

}  // namespace

RqSpreadReport is_rq_spread(const SetFamily& A, double r, int q) {
  if (q < 0) throw std::invalid_argument("is_rq_spread: q must be >= 0");
  BigRat rr = exact_rational(r);
  // distinct S below some member, |S| <= q, in canonical order
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& [X, c] : member_subset_counts(A, q)) seen.insert(X);
  std::vector<Bitset> links(seen.begin(), seen.end());
  std::sort(links.begin(), links.end(), size_lex_less);

  RqSpreadReport out;
  for (const Bitset& S : links) {
    std::vector<Bitset> G;
    for (const Bitset& m : A.members())
      if (S.subset_of(m)) G.push_back(m - S);
    if (G.empty()) continue;
    int kmax = 0;
    for (const Bitset& g : G) kmax = std::max(kmax, g.count());
    LinkSpreadChecker checker(G, rr, kmax);
    if (checker.run()) {
      out.ok = false;
      out.failing_S = S;
      out.failing_X = checker.witness;
      return out;
    }
  }
  return out;
}

RegularityReport regularity_check(const SetFamily& A, int t, int q, double eps, double theta,
                                  unsigned long long budget) {
  if (t < 0 || q < 0) throw std::invalid_argument("regularity_check: t,q must be >= 0");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("regularity_check: eps in (0,1]");
  if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("regularity_check: theta in (0,1]");

  BigRat e = exact_rational(eps), th = exact_rational(theta);
  BigRat one_minus_eps = BigRat(1) - e;

  RegularityReport rep;
  rep.budget = budget;
  if (!A.empty()) {
    long long total = 0;
    for (const Bitset& m : A.members()) total += m.count();
    rep.expected_set_size = double(total) / double(A.size());
  }

  std::vector<size_t> global_shadow(t + 1);
  for (int l = 0; l <= t; ++l) global_shadow[l] = lower_shadow(A, l).size();

  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& [X, c] : member_subset_counts(A, q)) seen.insert(X);
  std::vector<Bitset> svals(seen.begin(), seen.end());
  std::sort(svals.begin(), svals.end(), size_lex_less);

  auto charge = [&](unsigned long long units) {
    rep.work_used += units;
    return rep.work_used <= budget;
  };

  for (const Bitset& S : svals) {
    std::vector<Bitset> G;  // A(S), S stripped
    for (const Bitset& m : A.members())
      if (S.subset_of(m)) G.push_back(m - S);
    if (!charge(A.size())) {
      rep.complete = false;
      return rep;
    }
    SetFamily linkS(A.ground(), G);
    for (int l = 0; l <= t; ++l) {
      SetFamily shadow = lower_shadow(linkS, l);
      if (!charge(shadow.size() + 1)) {
        rep.complete = false;
        return rep;
      }
      // (i) shadow richness: |shadow_l(A(S))| >= (1-eps) |shadow_l(A)|
      BigRat lhs(shadow.size());
      BigRat rhs = one_minus_eps * BigRat(global_shadow[l]);
      if (global_shadow[l] > 0)
        rep.measured_epsilon = std::max(
            rep.measured_epsilon, 1.0 - double(shadow.size()) / double(global_shadow[l]));
      if (lhs < rhs) {
        rep.ok = false;
        rep.failing_condition = RegularityFailure::shadow_deficit;
        rep.failing_S = S;
        rep.failing_l = l;
        return rep;
      }
      if (shadow.empty()) continue;
      // (ii) concentration of |A(S u H)| over uniform H in the link shadow
      std::vector<long long> cnt(shadow.size());
      long long sum = 0;
      for (size_t i = 0; i < shadow.size(); ++i) {
        long long c = 0;
        for (const Bitset& g : linkS.members())
          if (shadow[i].subset_of(g)) ++c;
        cnt[i] = c;
        sum += c;
      }
      if (!charge(shadow.size() * linkS.size())) {
        rep.complete = false;
        return rep;
      }
      long long failures = 0;
      for (size_t i = 0; i < shadow.size(); ++i) {
        // achieved: cnt * |shadow| >= theta * sum
        BigRat achieved(BigInt(cnt[i]) * BigInt(shadow.size()), 1);
        BigRat need = th * BigRat(sum);
        if (achieved < need) ++failures;
        if (sum > 0)
          rep.measured_theta = std::min(
              rep.measured_theta, double(cnt[i]) * double(shadow.size()) / double(sum));
      }
      if (shadow.size() > 0)
        rep.measured_epsilon =
            std::max(rep.measured_epsilon, double(failures) / double(shadow.size()));
      // condition: failures <= eps * |shadow|
      if (BigRat(failures) > e * BigRat(shadow.size())) {
        rep.ok = false;
        rep.failing_condition = RegularityFailure::concentration;
        rep.failing_S = S;
        rep.failing_l = l;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace spreadlab

#include "spreadlab/family.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace spreadlab {

SetFamily::SetFamily(GroundSet ground, std::vector<Bitset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  if (ground_.n < 1) throw std::invalid_argument("SetFamily: ground set must have n >= 1");
  if (!ground_.labels.empty() && int(ground_.labels.size()) != ground_.n)
    throw std::invalid_argument("SetFamily: label count does not match n");
  for (const Bitset& m : members_)
    if (m.universe() != ground_.n)
      throw std::invalid_argument("SetFamily: member universe mismatch");
  std::sort(members_.begin(), members_.end(), Bitset::value_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty()) {
    int k = members_.front().count();
    bool uniform = std::all_of(members_.begin(), members_.end(),
                               [&](const Bitset& m) { return m.count() == k; });
    if (uniform) uniform_k_ = k;
  }
}

int SetFamily::max_member_size() const {
  int k = 0;
  for (const Bitset& m : members_) k = std::max(k, m.count());
  return k;
}

bool SetFamily::contains(const Bitset& m) const {
  return std::binary_search(members_.begin(), members_.end(), m, Bitset::value_less);
}

SetFamily make_family(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<Bitset> members;
  members.reserve(sets.size());
  for (const auto& s : sets) {
    Bitset b(n);
    for (int e : s) b.set(e);
    members.push_back(std::move(b));
  }
  return SetFamily(GroundSet(n), std::move(members));
}

SetFamily link(const SetFamily& F, const Bitset& S) {
  if (S.universe() != F.n()) throw std::invalid_argument("link: S not over F's ground set");
  std::vector<Bitset> out;
  for (const Bitset& A : F.members())
    if (S.subset_of(A)) out.push_back(A - S);
  return SetFamily(F.ground(), std::move(out));
}

SetFamily avoid(const SetFamily& F, const Bitset& X) {
  if (X.universe() != F.n()) throw std::invalid_argument("avoid: X not over F's ground set");
  std::vector<Bitset> out;
  for (const Bitset& A : F.members())
    if (!A.intersects(X)) out.push_back(A);
  return SetFamily(F.ground(), std::move(out));
}

SetFamily slice(const SetFamily& F, const Bitset& X, const Bitset& Y) {
  if (X.universe() != F.n() || Y.universe() != F.n())
    throw std::invalid_argument("slice: X,Y not over F's ground set");
  if (!X.subset_of(Y)) throw std::invalid_argument("slice: X must be a subset of Y");
  std::vector<Bitset> out;
  for (const Bitset& A : F.members())
    if ((A & Y) == X) out.push_back(A - X);
  return SetFamily(F.ground(), std::move(out));
}

SetFamily contains_some(const SetFamily& A, const SetFamily& S) {
  if (A.n() != S.n()) throw std::invalid_argument("contains_some: ground set mismatch");
  std::vector<Bitset> out;
  for (const Bitset& F : A.members())
    for (const Bitset& B : S.members())
      if (B.subset_of(F)) {
        out.push_back(F);
        break;
      }
  return SetFamily(A.ground(), std::move(out));
}

void enumerate_combinations(const std::vector<int>& pool, int l,
                            const std::function<void(const std::vector<int>&)>& fn) {
  if (l < 0 || l > int(pool.size())) return;
  std::vector<int> idx(l);
  for (int i = 0; i < l; ++i) idx[i] = i;
  std::vector<int> cur(l);
  while (true) {
    for (int i = 0; i < l; ++i) cur[i] = pool[idx[i]];
    fn(cur);
    int i = l - 1;
    while (i >= 0 && idx[i] == int(pool.size()) - l + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SetFamily lower_shadow(const SetFamily& F, int l) {
  if (l < 0) throw std::invalid_argument("lower_shadow: l must be >= 0");
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const Bitset& A : F.members()) {
    auto elems = A.elements();
    enumerate_combinations(elems, l, [&](const std::vector<int>& sub) {
      Bitset b(F.n());
      for (int e : sub) b.set(e);
      seen.insert(std::move(b));
    });
  }
  return SetFamily(F.ground(), std::vector<Bitset>(seen.begin(), seen.end()));
}

SetFamily upper_shadow(const SetFamily& F, int l) {
  if (l > F.n()) throw std::invalid_argument("upper_shadow: l exceeds ground set size");
  if (l < 0) throw std::invalid_argument("upper_shadow: l must be >= 0");
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const Bitset& A : F.members()) {
    int a = A.count();
    if (a > l) continue;
    auto rest = A.complement().elements();
    enumerate_combinations(rest, l - a, [&](const std::vector<int>& add) {
      Bitset b = A;
      for (int e : add) b.set(e);
      seen.insert(std::move(b));
    });
  }
  return SetFamily(F.ground(), std::vector<Bitset>(seen.begin(), seen.end()));
}

bool is_t_intersecting(const SetFamily& F, int t) {
  if (t < 0) throw std::invalid_argument("is_t_intersecting: t must be >= 0");
  const auto& m = F.members();
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].count() < t) return false;  // diagonal pair A = B
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i].intersect_count(m[j]) < t) return false;
  }
  return true;
}

std::optional<std::pair<size_t, size_t>> find_intersection_pair(const SetFamily& F, int s) {
  const auto& m = F.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i].intersect_count(m[j]) == s) return std::make_pair(i, j);
  return std::nullopt;
}

bool avoids_intersection(const SetFamily& F, int s) {
  if (s < 0) throw std::invalid_argument("avoids_intersection: s must be >= 0");
  return !find_intersection_pair(F, s).has_value();
}

bool is_t_cross_dependent(std::span<const SetFamily> families, int t) {
  if (t < 1) throw std::invalid_argument("is_t_cross_dependent: t must be >= 1");
  if (families.empty()) return true;
  int n = families.front().n();
  size_t total = 1;
  for (const SetFamily& f : families) {
    if (f.n() != n) throw std::invalid_argument("is_t_cross_dependent: ground set mismatch");
    if (f.empty()) return true;  // no transversal exists
    total *= f.size();
    if (total > size_t(100'000'000))
      throw std::invalid_argument("is_t_cross_dependent: transversal space too large");
  }
  std::vector<size_t> idx(families.size(), 0);
  while (true) {
    Bitset u(n);
    int sum = 0;
    for (size_t i = 0; i < families.size(); ++i) {
      const Bitset& A = families[i][idx[i]];
      u |= A;
      sum += A.count();
    }
    if (u.count() > sum - t) return false;
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == families[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return true;
}

namespace {

void cover_search(const std::vector<Bitset>& members, const Bitset& chosen, int used,
                  int& best) {
  if (used >= best) return;
  // smallest member not yet hit decides the branch
  const Bitset* pick = nullptr;
  for (const Bitset& m : members) {
    if (m.intersects(chosen)) continue;
    if (!pick || m.count() < pick->count()) pick = &m;
  }
  if (!pick) {
    best = used;
    return;
  }
  for (int e : pick->elements()) cover_search(members, chosen.with_bit(e), used + 1, best);
}

}  // namespace

int cover_number(const SetFamily& F) {
  if (F.empty()) return 0;
  for (const Bitset& m : F.members())
    if (m.empty())
      throw std::invalid_argument("cover_number: empty member, no finite cover exists");
  int best = std::numeric_limits<int>::max();
  // greedy upper bound first: always pick the max-degree element among unhit members
  {
    Bitset chosen(F.n());
    int used = 0;
    while (true) {
      std::vector<int> deg(F.n(), 0);
      bool open = false;
      for (const Bitset& m : F.members())
        if (!m.intersects(chosen)) {
          open = true;
          m.for_each_bit([&](int e) { ++deg[e]; });
        }
      if (!open) break;
      int e = int(std::max_element(deg.begin(), deg.end()) - deg.begin());
      chosen.set(e);
      ++used;
    }
    best = used;  // valid cover; the search below can only improve on it
  }
  cover_search(F.members(), Bitset(F.n()), 0, best);
  return best;
}

std::vector<int> element_degrees(const SetFamily& F) {
  std::vector<int> deg(F.n(), 0);
  for (const Bitset& m : F.members()) m.for_each_bit([&](int e) { ++deg[e]; });
  return deg;
}

bool is_regular(const SetFamily& F) {
  auto deg = element_degrees(F);
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg.front(); });
}

Bitset common_intersection(const SetFamily& F) {
  Bitset r = Bitset(F.n()).complement();
  for (const Bitset& m : F.members()) r &= m;
  return r;
}

std::vector<std::pair<Bitset, int>> member_subset_counts(const SetFamily& F, int cap) {
  std::unordered_map<Bitset, int, BitsetHash> counts;
  for (const Bitset& A : F.members()) {
    auto elems = A.elements();
    int kmax = cap < 0 ? int(elems.size()) : std::min<int>(cap, elems.size());
    if (elems.size() > 24)
      throw std::invalid_argument("member_subset_counts: member too large to enumerate");
    // enumerate all subsets of A of size <= kmax
    std::vector<int> stack;
    std::function<void(size_t, Bitset)> rec = [&](size_t i, Bitset cur) {
      ++counts[cur];
      if (int(stack.size()) == kmax) return;
      for (size_t j = i; j < elems.size(); ++j) {
        stack.push_back(elems[j]);
        rec(j + 1, cur.with_bit(elems[j]));
        stack.pop_back();
      }
    };
    rec(0, Bitset(F.n()));
  }
  return {counts.begin(), counts.end()};
}

SetFamily full_ambient(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("full_ambient: need 0 <= k <= n");
  std::vector<Bitset> members;
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  enumerate_combinations(pool, k, [&](const std::vector<int>& sub) {
    Bitset b(n);
    for (int e : sub) b.set(e);
    members.push_back(std::move(b));
  });
  return SetFamily(GroundSet(n), std::move(members));
}

}  // namespace spreadlab

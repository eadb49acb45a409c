#include "spreadlab/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spreadlab {

namespace {

// Tomita-style max clique: greedy coloring bound, candidates processed from
// the highest color down, vertices pre-ordered by degeneracy.
struct CliqueSolver {
  const std::vector<Bitset>& adj;
  unsigned long long budget;
  unsigned long long nodes = 0;
  bool completed = true;
  std::vector<int> best, current;

  explicit CliqueSolver(const std::vector<Bitset>& a, unsigned long long b) : adj(a), budget(b) {}

  std::vector<int> degeneracy_order() const {
    int n = int(adj.size());
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = adj[v].count();
    for (int it = 0; it < n; ++it) {
      int v = -1;
      for (int u = 0; u < n; ++u)
        if (!removed[u] && (v < 0 || deg[u] < deg[v])) v = u;
      removed[v] = true;
      order.push_back(v);
      adj[v].for_each_bit([&](int u) {
        if (!removed[u]) --deg[u];
      });
    }
    std::reverse(order.begin(), order.end());  // core vertices first
    return order;
  }

  void expand(const std::vector<int>& cand) {
    if (nodes >= budget) {
      completed = false;
      return;
    }
    ++nodes;
    // greedy coloring in candidate order
    std::vector<Bitset> classes;
    std::vector<int> color(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      size_t c = 0;
      while (c < classes.size() && classes[c].intersects(adj[v])) ++c;
      if (c == classes.size()) classes.emplace_back(adj[v].universe());
      classes[c].set(v);
      color[i] = int(c) + 1;
    }
    std::vector<size_t> idx(cand.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return color[a] < color[b]; });

    for (size_t pos = idx.size(); pos-- > 0;) {
      int v = cand[idx[pos]];
      if (current.size() + size_t(color[idx[pos]]) <= best.size()) return;
      current.push_back(v);
      std::vector<int> next;
      for (size_t j = 0; j < pos; ++j) {
        int u = cand[idx[j]];
        if (adj[v].test(u)) next.push_back(u);
      }
      if (next.empty()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      if (!completed) return;
    }
  }

  void run() {
    if (adj.empty()) return;
    std::vector<int> order = degeneracy_order();
    // greedy clique as the initial incumbent
    for (int v : order) {
      bool ok = true;
      for (int u : best)
        if (!adj[v].test(u)) {
          ok = false;
          break;
        }
      if (ok) best.push_back(v);
    }
    expand(order);
  }
};

ExtremalResult clique_on(const SetFamily& A, const std::vector<Bitset>& adj,
                         const std::vector<size_t>& vertex_to_member,
                         unsigned long long budget) {
  CliqueSolver solver(adj, budget);
  solver.run();
  ExtremalResult out;
  out.optimum = (long long)solver.best.size();
  out.nodes_explored = solver.nodes;
  out.proved_optimal = solver.completed;
  std::vector<Bitset> wit;
  for (int v : solver.best) wit.push_back(A[vertex_to_member[size_t(v)]]);
  out.witness = SetFamily(A.ground(), std::move(wit));
  return out;
}

}  // namespace

ExtremalResult max_t_intersecting(const SetFamily& A, int t, unsigned long long budget) {
  if (t < 1) throw std::invalid_argument("max_t_intersecting: t must be >= 1");
  std::vector<size_t> verts;
  for (size_t i = 0; i < A.size(); ++i)
    if (A[i].count() >= t) verts.push_back(i);  // diagonal requirement
  int n = int(verts.size());
  std::vector<Bitset> adj(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (A[verts[i]].intersect_count(A[verts[j]]) >= t) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return clique_on(A, adj, verts, budget);
}

ExtremalResult max_avoiding(const SetFamily& A, int t, unsigned long long budget) {
  if (t < 1) throw std::invalid_argument("max_avoiding: t must be >= 1");
  std::vector<size_t> verts(A.size());
  std::iota(verts.begin(), verts.end(), size_t{0});
  int n = int(A.size());
  std::vector<Bitset> adj(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (A[size_t(i)].intersect_count(A[size_t(j)]) != t - 1) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return clique_on(A, adj, verts, budget);
}

std::optional<Bitset> is_trivial_t_intersecting(const SetFamily& F, int t) {
  if (!is_t_intersecting(F, t))
    throw std::invalid_argument("is_trivial_t_intersecting: family is not t-intersecting");
  Bitset common = common_intersection(F);
  if (common.count() < t) return std::nullopt;
  Bitset T(F.n());
  int taken = 0;
  common.for_each_bit([&](int e) {
    if (taken < t) {
      T.set(e);
      ++taken;
    }
  });
  return T;
}

namespace {

template <class Fn>
void for_each_tail_perm(int n, int t, Fn&& fn) {
  // permutations of positions t..n-1 over values t..n-1, lexicographic
  std::vector<int> tail(n - t);
  std::iota(tail.begin(), tail.end(), t);
  do {
    fn(tail);
  } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace

HiltonMilnerFamily hilton_milner_perm_family(int n, int t) {
  if (t < 1 || t >= n) throw std::invalid_argument("hilton_milner_perm_family: need 1 <= t < n");
  if (n - t > 9)
    throw std::invalid_argument("hilton_milner_perm_family: tail enumeration too large");
  std::vector<int> sigma(n);
  for (int i = 0; i < t; ++i) sigma[i] = (i + 1) % t;  // cycle on the first t elements
  for (int i = t; i < n; ++i) sigma[i] = i;

  std::vector<std::vector<int>> perms;
  for_each_tail_perm(n, t, [&](const std::vector<int>& tail) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.begin() + t, 0);
    std::copy(tail.begin(), tail.end(), p.begin() + t);
    int agree = 0;
    for (int i = 0; i < n; ++i) agree += p[i] == sigma[i];
    if (agree != t - 1) perms.push_back(std::move(p));
  });
  perms.push_back(sigma);
  return HiltonMilnerFamily{make_perm_family(n, std::move(perms)), sigma};
}

BigInt derangement_count(int m) {
  if (m < 0) throw std::invalid_argument("derangement_count: m must be >= 0");
  if (m == 0) return 1;
  if (m == 1) return 0;
  BigInt prev2 = 1, prev1 = 0;
  for (int i = 2; i <= m; ++i) {
    BigInt cur = BigInt(i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

IntersectionClassCounts count_intersection_classes(int n, int t, const std::vector<int>& pi) {
  if (t < 1 || t > n) throw std::invalid_argument("count_intersection_classes: need 1 <= t <= n");
  if (int(pi.size()) != n)
    throw std::invalid_argument("count_intersection_classes: pi has wrong length");
  if (n - t > 9)
    throw std::invalid_argument("count_intersection_classes: enumeration too large");
  bool contains_id = true;
  for (int i = 0; i < t; ++i) contains_id = contains_id && pi[i] == i;
  if (contains_id)
    throw std::invalid_argument("count_intersection_classes: pi must not contain Id_[t]");

  IntersectionClassCounts out;
  int head_agree = 0;  // fixed points of pi among the pinned positions
  for (int i = 0; i < t; ++i) head_agree += pi[i] == i;
  for_each_tail_perm(n, t, [&](const std::vector<int>& tail) {
    int agree = head_agree;
    for (int i = t; i < n; ++i) agree += pi[i] == tail[i - t];
    ++out.counts[agree];
  });
  out.total = factorial(n - t);
  auto it = out.counts.find(t - 1);
  out.class_t_minus_1 = it == out.counts.end() ? 0 : it->second;
  // |G_{t-1}| >= (1/4) t^-t (n-t)!  <=>  4 t^t |G_{t-1}| >= (n-t)!
  out.bound_ok = BigInt(4) * ipow(BigInt(t), unsigned(t)) * out.class_t_minus_1 >= out.total;
  return out;
}

RegularFeasibility regular_feasibility(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("regular_feasibility: need n,k >= 1");
  return (long long)n > (long long)k * k ? RegularFeasibility::infeasible
                                         : RegularFeasibility::unknown;
}

namespace {

struct RegularSearch {
  const std::vector<Bitset>& members;
  const std::vector<Bitset>& compat;  // pairwise-intersecting graph
  int n, k, d, s;
  unsigned long long& nodes;
  unsigned long long budget;
  bool completed = true;
  std::vector<int> chosen;
  std::vector<int> deg;

  RegularSearch(const std::vector<Bitset>& mem, const std::vector<Bitset>& cg, int n_, int k_,
                int d_, int s_, unsigned long long& nodes_, unsigned long long budget_)
      : members(mem), compat(cg), n(n_), k(k_), d(d_), s(s_), nodes(nodes_), budget(budget_),
        deg(n_, 0) {}

  bool addable(int idx) const {
    bool ok = true;
    members[idx].for_each_bit([&](int x) { ok = ok && deg[x] < d; });
    return ok;
  }

  bool dfs(const std::vector<int>& cands) {
    if (nodes >= budget) {
      completed = false;
      return false;
    }
    ++nodes;
    if (int(chosen.size()) == s) {
      for (int x = 0; x < n; ++x)
        if (deg[x] != d) return false;
      return true;
    }
    if (chosen.size() + cands.size() < size_t(s)) return false;
    // every element still has to reach degree d
    std::vector<int> avail(n, 0);
    for (int c : cands) members[c].for_each_bit([&](int x) { ++avail[x]; });
    for (int x = 0; x < n; ++x)
      if (deg[x] + avail[x] < d) return false;

    for (size_t i = 0; i < cands.size(); ++i) {
      int v = cands[i];
      chosen.push_back(v);
      members[v].for_each_bit([&](int x) { ++deg[x]; });
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j) {
        int u = cands[j];
        if (compat[v].test(u) && addable(u)) next.push_back(u);
      }
      if (dfs(next)) return true;
      members[v].for_each_bit([&](int x) { --deg[x]; });
      chosen.pop_back();
      if (!completed) return false;
    }
    return false;
  }
};

}  // namespace

ExtremalResult max_regular_intersecting(int n, int k, unsigned long long budget) {
  if (n < 1 || k < 1) throw std::invalid_argument("max_regular_intersecting: need n,k >= 1");
  ExtremalResult out;
  out.witness = SetFamily(GroundSet(n), {});
  if (k > n) return out;
  if (regular_feasibility(n, k) == RegularFeasibility::infeasible) return out;  // degree argument
  SetFamily ambient = full_ambient(n, k);
  if (ambient.size() > 220)
    throw std::invalid_argument("max_regular_intersecting: search space beyond desk scale");

  int m = int(ambient.size());
  std::vector<Bitset> compat(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (ambient[size_t(i)].intersects(ambient[size_t(j)])) {
        compat[i].set(j);
        compat[j].set(i);
      }

  // global cap from the unconstrained intersecting optimum
  long long s_max = m;
  {
    ExtremalResult cap = max_t_intersecting(ambient, 1, budget / 4 + 1);
    out.nodes_explored += cap.nodes_explored;
    if (cap.proved_optimal) s_max = cap.optimum;
  }

  bool all_proved = true;
  long long dmax = binomial(n - 1, k - 1).convert_to<long long>();
  for (long long d = dmax; d >= 1; --d) {
    if ((n * d) % k) continue;
    long long s = n * d / k;
    if (s < 1 || s > s_max || s > m) continue;
    RegularSearch search(ambient.members(), compat, n, k, int(d), int(s), out.nodes_explored,
                         budget);
    // by symmetry a family of this size and degree can be relabeled to contain
    // the first k-subset
    search.chosen.push_back(0);
    ambient[0].for_each_bit([&](int x) { ++search.deg[x]; });
    std::vector<int> cands;
    for (int j = 1; j < m; ++j)
      if (compat[0].test(j) && search.addable(j)) cands.push_back(j);
    if (search.dfs(cands)) {
      std::vector<Bitset> wit;
      for (int idx : search.chosen) wit.push_back(ambient[size_t(idx)]);
      out.witness = SetFamily(ambient.ground(), std::move(wit));
      out.optimum = s;
      out.proved_optimal = all_proved;
      return out;
    }
    if (!search.completed) all_proved = false;
  }
  out.optimum = 0;
  out.proved_optimal = all_proved;
  return out;
}

}  // namespace spreadlab

#include "spreadlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spreadlab {

PartialPerm make_partial_perm(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].first == pairs[j].first)
        throw std::invalid_argument("partial permutation: repeated domain element");
      if (pairs[i].second == pairs[j].second)
        throw std::invalid_argument("partial permutation: repeated image element");
    }
  return PartialPerm{std::move(pairs)};
}

Bitset grid_mask(const PartialPerm& p, int n) {
  if (n > kMaxGridN) throw std::invalid_argument("grid_mask: n exceeds grid limit");
  Bitset b(n * n);
  for (auto [x, y] : p.pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("grid_mask: pair out of range");
    b.set(x * n + y);
  }
  return b;
}

std::optional<PartialPerm> partial_perm_from_mask(const Bitset& mask, int n) {
  if (mask.universe() != n * n) throw std::invalid_argument("partial_perm_from_mask: bad universe");
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> row(n, false), col(n, false);
  bool ok = true;
  mask.for_each_bit([&](int cell) {
    int x = cell / n, y = cell % n;
    if (row[x] || col[y]) ok = false;
    row[x] = col[y] = true;
    pairs.emplace_back(x, y);
  });
  if (!ok) return std::nullopt;
  return PartialPerm{std::move(pairs)};
}

bool is_partial_perm_mask(const Bitset& mask, int n) {
  return partial_perm_from_mask(mask, n).has_value();
}

PermFamily make_perm_family(int n, std::vector<std::vector<int>> perms) {
  if (n < 1) throw std::invalid_argument("PermFamily: n must be >= 1");
  for (const auto& p : perms) {
    if (int(p.size()) != n) throw std::invalid_argument("PermFamily: wrong permutation length");
    std::vector<bool> seen(n, false);
    for (int v : p) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("PermFamily: not a permutation");
      seen[v] = true;
    }
  }
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return PermFamily{n, std::move(perms)};
}

PermFamily all_permutations(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("all_permutations: supported for 1 <= n <= 10");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return PermFamily{n, std::move(perms)};
}

Bitset perm_grid_mask(const std::vector<int>& perm, int n) {
  if (n > kMaxGridN) throw std::invalid_argument("perm_grid_mask: n exceeds grid limit");
  Bitset b(n * n);
  for (int x = 0; x < n; ++x) b.set(x * n + perm[x]);
  return b;
}

SetFamily to_grid_family(const PermFamily& P) {
  if (P.n > kMaxGridN) throw std::invalid_argument("to_grid_family: n exceeds grid limit");
  std::vector<Bitset> members;
  members.reserve(P.perms.size());
  for (const auto& p : P.perms) members.push_back(perm_grid_mask(p, P.n));
  return SetFamily(GroundSet(P.n * P.n), std::move(members));
}

PermFamily grid_family_to_perms(const SetFamily& F) {
  int n = 0;
  while (n * n < F.n()) ++n;
  if (n * n != F.n()) throw std::invalid_argument("grid_family_to_perms: ground set is not a grid");
  std::vector<std::vector<int>> perms;
  for (const Bitset& m : F.members()) {
    if (m.count() != n) throw std::invalid_argument("grid_family_to_perms: member is not total");
    auto pp = partial_perm_from_mask(m, n);
    if (!pp) throw std::invalid_argument("grid_family_to_perms: member is not a permutation");
    std::vector<int> line(n);
    for (auto [x, y] : pp->pairs) line[x] = y;
    perms.push_back(std::move(line));
  }
  return make_perm_family(n, std::move(perms));
}

int perm_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += a[i] == b[i];
  return c;
}

}  // namespace spreadlab

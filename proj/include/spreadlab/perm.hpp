#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spreadlab/family.hpp"

namespace spreadlab {

// Permutations of {0,...,n-1} in one-line notation. The grid encoding places
// pair (x,y) at cell x*n + y of an n^2-element ground set; grid masks are
// limited to n <= 11, larger n stays in one-line form.
constexpr int kMaxGridN = 11;

// Injective partial map, kept as sorted (x, y) pairs with distinct x and y.
struct PartialPerm {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return int(pairs.size()); }
};

PartialPerm make_partial_perm(std::vector<std::pair<int, int>> pairs);

Bitset grid_mask(const PartialPerm& p, int n);
// decodes a grid mask; nullopt if rows or columns repeat
std::optional<PartialPerm> partial_perm_from_mask(const Bitset& mask, int n);
bool is_partial_perm_mask(const Bitset& mask, int n);

struct PermFamily {
  int n = 0;
  std::vector<std::vector<int>> perms;  // one-line, canonical lexicographic order

  size_t size() const { return perms.size(); }
};

PermFamily make_perm_family(int n, std::vector<std::vector<int>> perms);
PermFamily all_permutations(int n);

SetFamily to_grid_family(const PermFamily& P);
PermFamily grid_family_to_perms(const SetFamily& F);

Bitset perm_grid_mask(const std::vector<int>& perm, int n);
int perm_intersection(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace spreadlab

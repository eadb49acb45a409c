#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "spreadlab/exact.hpp"
#include "spreadlab/family.hpp"
#include "spreadlab/perm.hpp"

namespace spreadlab {

using json = nlohmann::json;  // key-sorted object type; canonical output

// {"n": 6, "sets": [[1,2],[2,3]]}, 1-indexed, optional "labels"
json family_to_json(const SetFamily& F);
SetFamily family_from_json(const json& j, const std::string& context = "");

// {"n": 4, "perms": [[2,1,3,4], ...]}, image of i at position i, 1-indexed
json perm_family_to_json(const PermFamily& P);
PermFamily perm_family_from_json(const json& j, const std::string& context = "");

SetFamily load_family(const std::string& path);
void save_family(const SetFamily& F, const std::string& path);
PermFamily load_perm_family(const std::string& path);
void save_perm_family(const PermFamily& P, const std::string& path);

// either file kind; permutation files are converted to the grid family
SetFamily load_family_any(const std::string& path);

json bitset_to_json(const Bitset& b);            // sorted 1-indexed element array
Bitset bitset_from_json(const json& j, int n);

json rational_to_json(const BigInt& num, const BigInt& den);
json rooted_ratio_to_json(const RootedRatio& r);

std::string canonical_dump(const json& j);       // 2-space indent, sorted keys, trailing newline
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace spreadlab

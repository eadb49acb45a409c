#include "spreadlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spreadlab {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& msg) {
  throw std::runtime_error(context.empty() ? msg : context + ": " + msg);
}

int get_positive_int(const json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(context, std::string("missing or non-integer field '") + key + "'");
  int v = j[key].get<int>();
  if (v < 1) fail(context, std::string("field '") + key + "' must be >= 1");
  return v;
}

}  // namespace

json bitset_to_json(const Bitset& b) {
  json arr = json::array();
  b.for_each_bit([&](int e) { arr.push_back(e + 1); });
  return arr;
}

Bitset bitset_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::runtime_error("set must be an array of elements");
  Bitset b(n);
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::runtime_error("set element must be an integer");
    int v = e.get<int>();
    if (v < 1 || v > n)
      throw std::runtime_error("set element " + std::to_string(v) + " outside 1.." +
                               std::to_string(n));
    if (b.test(v - 1)) throw std::runtime_error("repeated element " + std::to_string(v));
    b.set(v - 1);
  }
  return b;
}

json family_to_json(const SetFamily& F) {
  json j;
  j["n"] = F.n();
  json sets = json::array();
  for (const Bitset& m : F.members()) sets.push_back(bitset_to_json(m));
  j["sets"] = std::move(sets);
  if (!F.ground().labels.empty()) j["labels"] = F.ground().labels;
  return j;
}

SetFamily family_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "family file must be a JSON object");
  int n = get_positive_int(j, "n", context);
  if (n > 1 << 20) fail(context, "ground set too large");
  if (!j.contains("sets") || !j["sets"].is_array()) fail(context, "missing 'sets' array");
  std::vector<Bitset> members;
  size_t idx = 0;
  for (const auto& s : j["sets"]) {
    try {
      members.push_back(bitset_from_json(s, n));
    } catch (const std::exception& e) {
      fail(context, "sets[" + std::to_string(idx) + "]: " + e.what());
    }
    ++idx;
  }
  GroundSet g(n);
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != size_t(n))
      fail(context, "'labels' must be an array of n strings");
    for (const auto& l : j["labels"]) g.labels.push_back(l.get<std::string>());
  }
  return SetFamily(std::move(g), std::move(members));
}

json perm_family_to_json(const PermFamily& P) {
  json j;
  j["n"] = P.n;
  json perms = json::array();
  for (const auto& p : P.perms) {
    json line = json::array();
    for (int v : p) line.push_back(v + 1);
    perms.push_back(std::move(line));
  }
  j["perms"] = std::move(perms);
  return j;
}

PermFamily perm_family_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "permutation file must be a JSON object");
  int n = get_positive_int(j, "n", context);
  if (n > 10'000) fail(context, "n too large");
  if (!j.contains("perms") || !j["perms"].is_array()) fail(context, "missing 'perms' array");
  std::vector<std::vector<int>> perms;
  size_t idx = 0;
  for (const auto& line : j["perms"]) {
    if (!line.is_array() || line.size() != size_t(n))
      fail(context, "perms[" + std::to_string(idx) + "]: expected an array of length " +
                        std::to_string(n));
    std::vector<int> p;
    for (const auto& v : line) {
      if (!v.is_number_integer())
        fail(context, "perms[" + std::to_string(idx) + "]: non-integer image");
      int y = v.get<int>();
      if (y < 1 || y > n)
        fail(context, "perms[" + std::to_string(idx) + "]: image outside 1.." + std::to_string(n));
      p.push_back(y - 1);
    }
    perms.push_back(std::move(p));
    ++idx;
  }
  try {
    return make_perm_family(n, std::move(perms));
  } catch (const std::exception& e) {
    fail(context, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

namespace {

json parse_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace

SetFamily load_family(const std::string& path) { return family_from_json(parse_file(path), path); }

void save_family(const SetFamily& F, const std::string& path) {
  write_text_file(path, canonical_dump(family_to_json(F)));
}

PermFamily load_perm_family(const std::string& path) {
  return perm_family_from_json(parse_file(path), path);
}

void save_perm_family(const PermFamily& P, const std::string& path) {
  write_text_file(path, canonical_dump(perm_family_to_json(P)));
}

SetFamily load_family_any(const std::string& path) {
  json j = parse_file(path);
  if (j.is_object() && j.contains("perms"))
    return to_grid_family(perm_family_from_json(j, path));
  return family_from_json(j, path);
}

json rational_to_json(const BigInt& num, const BigInt& den) {
  json j;
  // decimal strings keep exact values of any size representable
  j["num"] = num.str();
  j["den"] = den.str();
  return j;
}

json rooted_ratio_to_json(const RootedRatio& r) {
  json j = rational_to_json(r.num, r.den);
  j["root"] = r.root;
  j["value"] = r.value();
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace spreadlab

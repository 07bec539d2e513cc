#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "zgcu/group.hpp"

namespace zgcu {

/// Size limits shared by group loading and subgroup enumeration.
struct Bounds {
  std::size_t max_order = 256;
  std::size_t max_subgroups = 20000;
};

/// Permutation on points 1..degree, stored 0-based; product is "apply left, then right".
using Permutation = std::vector<int>;

/// Parses disjoint cycles with 1-based points: "(1 2 3)(4 5)", "(1,2)", "(12)", "()".
Permutation parse_permutation(std::string_view text);
/// Canonical cycle notation "(1,2,3)(4,5)"; "()" for the identity.
std::string format_permutation(const Permutation& p);

GroupPtr permutation_group(const std::vector<std::string>& generators, std::string name,
                           std::size_t max_order);

/// <a, b | a^a_order, b^b_order = a^b_power, b^-1 a b = a^action>, elements a^i b^j.
GroupPtr cyclic_extension(std::int64_t a_order, std::int64_t b_order, std::int64_t b_power,
                          std::int64_t action, std::vector<std::string> names, std::string name,
                          std::size_t max_order);

GroupPtr abelian_group(const std::vector<std::int64_t>& orders, std::vector<std::string> names,
                       std::string name, std::size_t max_order);

/// {"order": n, "table": [[...]]}, table[i][j] = index of product i*j.
GroupPtr group_from_table_json(const nlohmann::json& doc, std::string name = {});
GroupPtr group_from_table_file(const std::filesystem::path& path);
nlohmann::json group_to_table_json(const FiniteGroup& g);

/// Evaluates +, -, *, exact /, %, parentheses, and unary minus over named integers.
std::int64_t eval_param_expr(std::string_view expr, const std::map<std::string, std::int64_t>& env);

/// Named families and fixed groups, loaded from a JSON data file.
class Catalog {
 public:
  static Catalog from_file(const std::filesystem::path& path);
  static Catalog from_json(nlohmann::json doc);

  /// "dihedral:8", "metacyclic:7,3,2", "abelian:2,4", "c3xs3".
  GroupPtr build(std::string_view spec, std::size_t max_order) const;
  bool knows(std::string_view spec) const;
  std::vector<std::string> names() const;

 private:
  nlohmann::json doc_;
};

/// Catalog at $ZGCU_CATALOG, else the installed or source-tree data file.
const Catalog& default_catalog();
std::filesystem::path default_catalog_path();

/// Accepts a catalog name, "table:<path>" or a path ending in .json, or permutation
/// generators ("perm:(1 2 3);(1 2)" or a bare string starting with '(').
GroupPtr load_group(std::string_view spec, const Bounds& bounds = {});

/// Accepts "#index" or a bare index, a permutation in cycle notation (permutation groups),
/// an element label, or a word such as "r^3*s" over generator labels or a, b, c...
Element parse_element(const FiniteGroup& g, std::string_view text);

}  // namespace zgcu

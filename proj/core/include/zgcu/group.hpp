#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace zgcu {

/// Elements are indices 0..order-1; index 0 is always the identity.
using Element = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Complete multiplication structure of a finite group, immutable once built.
class FiniteGroup {
 public:
  /// Validates identity at index 0, that rows and columns are permutations,
  /// and associativity (exhaustive up to order 64, sampled above).
  static GroupPtr from_table(std::vector<std::vector<Element>> table, std::string name = {},
                             std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return order_[a]; }

  /// a^b = b^-1 a b.
  Element conj(Element a, Element b) const noexcept { return mul(mul(inv(b), a), b); }
  Element pow(Element a, std::int64_t e) const;
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  std::uint32_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return abelian_; }

  const std::string& name() const noexcept { return name_; }
  /// A generating set; the BFS generators when the group came from a presentation.
  std::span<const Element> generators() const noexcept { return generators_; }
  std::string label(Element a) const;

  std::vector<Element> elements() const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> order_;
  std::uint32_t exponent_ = 1;
  bool abelian_ = true;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Element> generators_;

  friend GroupPtr with_generators(GroupPtr g, std::vector<Element> gens);
};

/// Returns a copy of g that reports the given generating set.
GroupPtr with_generators(GroupPtr g, std::vector<Element> gens);

/// A concrete group given by generators acting on integer-vector encoded elements.
/// Elements are enumerated by orbit closure: identity first, then BFS over generators.
struct ConcreteGroup {
  std::vector<int> identity;
  std::vector<std::vector<int>> generators;
  std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)> multiply;
  std::function<std::string(const std::vector<int>&)> label;
};

GroupPtr enumerate_group(const ConcreteGroup& spec, std::string name, std::size_t max_order);

/// Subset of a group closed under multiplication and inverses.
class Subgroup {
 public:
  /// Members need not be sorted; closure is validated.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  /// Smallest subgroup containing the given elements.
  static Subgroup generated(GroupPtr parent, std::span<const Element> gens);

  const FiniteGroup& group() const noexcept { return *parent_; }
  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return mask_[x]; }
  std::span<const Element> members() const noexcept { return members_; }

  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal_in(const Subgroup& other) const;
  bool is_normal() const;
  bool is_cyclic() const;
  bool is_abelian() const;

  /// H^x = x^-1 H x.
  Subgroup conjugate(Element x) const;
  Subgroup intersect(const Subgroup& other) const;
  /// Subgroup generated by both.
  Subgroup join(const Subgroup& other) const;

  /// Deterministic order: by size, then lexicographic member lists.
  std::strong_ordering operator<=>(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  struct Trusted {};
  Subgroup(GroupPtr parent, std::vector<Element> sorted_members, Trusted);

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;

  friend class SubgroupAccess;
};

/// Internal constructor path for code that has already proven closure.
class SubgroupAccess {
 public:
  static Subgroup make_trusted(GroupPtr parent, std::vector<Element> sorted_members) {
    return Subgroup(std::move(parent), std::move(sorted_members), Subgroup::Trusted{});
  }
};

std::string describe(const Subgroup& h);

}  // namespace zgcu

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgcu/catalog.hpp"
#include "zgcu/group.hpp"

namespace zgcu {

/// Every subgroup of G, each exactly once, sorted by size then member list.
/// Built by layered closure: each new subgroup is a known one joined with a cyclic subgroup.
class SubgroupLattice {
 public:
  static SubgroupLattice compute(const GroupPtr& g, const Bounds& bounds = {});

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  bool is_normal(std::size_t i) const { return normal_[i]; }
  /// Position of h in the lattice.
  std::size_t index_of(const Subgroup& h) const;
  std::vector<Subgroup> normal_subgroups() const;

 private:
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<bool> normal_;
};

std::vector<Subgroup> subgroups(const GroupPtr& g, const Bounds& bounds = {});

/// N_G(H) = {x : H^x = H}.
Subgroup normalizer(const Subgroup& h);
/// Normalizer of h inside the subgroup `within`.
Subgroup normalizer(const Subgroup& h, const Subgroup& within);
Subgroup centralizer(const GroupPtr& g, Element s);
Subgroup centralizer(const Subgroup& s);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
/// Smallest normal subgroup of `within` containing h.
Subgroup normal_closure(const Subgroup& h, const Subgroup& within);

/// Right transversal of small in big (small <= big): one representative per coset
/// small*x, the smallest element index of each coset, in increasing order.
std::vector<Element> right_transversal(const Subgroup& big, const Subgroup& small);

struct Quotient {
  GroupPtr group;
  /// projection[x] = coset index of x; coset 0 is the kernel.
  std::vector<Element> projection;
  /// Smallest element of each coset.
  std::vector<Element> representatives;
};

/// Cosets are indexed in order of their smallest member. Throws NotNormal.
Quotient quotient(const Subgroup& n);

/// Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i), until it stabilizes.
std::vector<Subgroup> upper_central_series(const GroupPtr& g);

struct SubnormalSeries {
  Element generator = 0;
  /// chain[0] = <g>, chain.back() = G, chain[i-1] normal in chain[i].
  std::vector<Subgroup> chain;
  /// transversals[i-1] is a transversal of chain[i-1] in chain[i].
  std::vector<std::vector<Element>> transversals;

  std::size_t length() const { return chain.size() - 1; }
  /// The series conjugated by h: <g^h> = N_0^h < ... < N_m^h.
  SubnormalSeries conjugate(Element h) const;
};

/// Builds a series with the given chain and smallest-representative transversals.
/// Validates that each term is normal in the next.
SubnormalSeries make_series(Element generator, std::vector<Subgroup> chain);

/// Normal-closure chain K_0 = G, K_{i+1} = normal closure of <g> in K_i, reversed.
/// Throws NotSubnormal when the chain stabilizes above <g>.
SubnormalSeries subnormal_series(const GroupPtr& g, Element x);
bool is_subnormal(const Subgroup& h);

struct GroupPredicates {
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool abelian_by_supersolvable = false;
  bool eligible = false;
  /// An element of order not dividing 4 or 6 whose cyclic subgroup is not subnormal.
  std::optional<Element> non_subnormal_witness;
};

GroupPredicates group_predicates(const GroupPtr& g, const Bounds& bounds = {});

/// True when |x| divides 4 or 6, the orders that admit no Bass unit of infinite order.
inline bool order_divides_4_or_6(std::uint32_t order) { return 4 % order == 0 || 6 % order == 0; }

}  // namespace zgcu
